// SPDX-License-Identifier: MIT
#pragma once

#include "stablek/program.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace stablek {

/// {a1.} ∪ {a(i+1) :- a(i) : i < n} ∪ {x :- not a1.}
Program chain_family(std::size_t n);

/// n atoms x1..xn, each derived from the absence of all the others.
Program negclique_family(std::size_t n);

/// Result of one CLI run or one benchmark instance.
struct RunReport {
  std::string subcommand;
  std::string answer;  // "yes", "no" or "error"
  std::vector<std::string> witness;
  bool has_witness = false;
  std::map<std::string, double> timings_ms;  // wall clock per phase
  std::size_t atoms = 0;                     // n = |At(P)|
  std::size_t occurrences = 0;               // m = size(P)
  std::size_t rules = 0;                     // |P|
  std::size_t negated = 0;                   // |Neg(P)|
  nlohmann::json extra = nlohmann::json::object();
};

nlohmann::json to_json(const RunReport& r, bool with_timings);

enum class BenchSolver { ssm, lsm };
enum class BenchFamily { chain, negclique };

/// Generates each instance in-process and times the solver alone.
std::vector<RunReport> bench_family(BenchFamily family, const std::vector<std::size_t>& sizes,
                                    std::size_t k, BenchSolver solver);

/// Wall time of the fastest of `repeats` runs of `solve_lsm(p, k)`, each run
/// looping until at least `min_ms` has elapsed.
double time_lsm_ms(const Program& p, std::size_t k, int repeats = 5, double min_ms = 20.0);

}  // namespace stablek
