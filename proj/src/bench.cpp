// SPDX-License-Identifier: MIT
#include "stablek/bench.hpp"

#include "stablek/lsm.hpp"
#include "stablek/ssm.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace stablek {

Program chain_family(std::size_t n) {
  ProgramBuilder b;
  auto a = [](std::size_t i) { return "a" + std::to_string(i); };
  if (n >= 1) b.add_rule(a(1));
  for (std::size_t i = 1; i < n; ++i) b.add_rule(a(i + 1), {a(i)});
  if (n >= 1) b.add_rule("x", {}, {a(1)});
  return std::move(b).build();
}

Program negclique_family(std::size_t n) {
  ProgramBuilder b;
  auto x = [](std::size_t i) { return "x" + std::to_string(i); };
  for (std::size_t i = 1; i <= n; ++i) b.atom(x(i));
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<std::string> others;
    for (std::size_t l = 1; l <= n; ++l) {
      if (l != j) others.push_back(x(l));
    }
    b.add_rule(x(j), {}, others);
  }
  return std::move(b).build();
}

nlohmann::json to_json(const RunReport& r, bool with_timings) {
  nlohmann::json j;
  j["subcommand"] = r.subcommand;
  j["answer"] = r.answer;
  if (r.has_witness) {
    j["model"] = r.witness;
    j["size"] = r.witness.size();
  }
  j["rules"] = r.rules;
  j["stats"] = {{"atoms", r.atoms}, {"occurrences", r.occurrences}, {"rules", r.rules},
                {"negated", r.negated}};
  for (const auto& [key, value] : r.extra.items()) j[key] = value;
  if (with_timings) j["timings_ms"] = r.timings_ms;
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

double time_lsm_ms(const Program& p, std::size_t k, int repeats, double min_ms) {
  double best = std::numeric_limits<double>::infinity();
  for (int rep = 0; rep < repeats; ++rep) {
    std::size_t runs = 0;
    const auto start = Clock::now();
    double total = 0;
    do {
      auto answer = solve_lsm(p, k);
      (void)answer;
      ++runs;
      total = elapsed_ms(start);
    } while (total < min_ms);
    best = std::min(best, total / static_cast<double>(runs));
  }
  return best;
}

std::vector<RunReport> bench_family(BenchFamily family, const std::vector<std::size_t>& sizes,
                                    std::size_t k, BenchSolver solver) {
  std::vector<RunReport> out;
  for (auto n : sizes) {
    const auto gen_start = Clock::now();
    const Program p = family == BenchFamily::chain ? chain_family(n) : negclique_family(n);
    RunReport report;
    report.timings_ms["generate"] = elapsed_ms(gen_start);
    report.subcommand = solver == BenchSolver::ssm ? "bench ssm" : "bench lsm";
    report.atoms = p.atoms().size();
    report.occurrences = p.occurrences();
    report.rules = p.size();
    report.negated = p.negated().size();
    report.extra["family"] = family == BenchFamily::chain ? "chain" : "negclique";
    report.extra["n"] = n;
    report.extra["k"] = k;

    const auto solve_start = Clock::now();
    std::optional<AtomSet> witness;
    bool yes = false;
    if (solver == BenchSolver::ssm) {
      auto answer = solve_ssm(p, k);
      yes = answer.yes;
      witness = answer.witness;
      report.extra["bases_examined"] = answer.bases_examined;
    } else {
      auto answer = solve_lsm(p, k);
      yes = answer.yes;
      witness = answer.witness;
    }
    report.timings_ms["solve"] = elapsed_ms(solve_start);
    report.answer = yes ? "yes" : "no";
    if (witness) {
      report.has_witness = true;
      report.witness = p.names_of(*witness);
    }
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace stablek
