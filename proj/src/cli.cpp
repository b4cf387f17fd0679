// SPDX-License-Identifier: MIT
#include "stablek/cli.hpp"

#include "stablek/bench.hpp"
#include "stablek/encodings.hpp"
#include "stablek/error.hpp"
#include "stablek/lsm.hpp"
#include "stablek/oracle.hpp"
#include "stablek/ssm.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace stablek {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(list);
  while (std::getline(in, cur, ',')) {
    const auto b = cur.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = cur.find_last_not_of(" \t");
    out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

nlohmann::json models_json(const Program& p, const std::vector<AtomSet>& models) {
  auto arr = nlohmann::json::array();
  for (const auto& m : models) arr.push_back(p.names_of(m));
  return arr;
}

struct Settings {
  bool pretty = false;
  bool timings = false;
  bool allow_reserved = false;
};

class Runner {
 public:
  explicit Runner(std::ostream& out) : out_(out) {}

  int emit(const nlohmann::json& j) {
    out_ << (settings.pretty ? j.dump(2) : j.dump()) << '\n';
    return 0;
  }

  RunReport report_for(const std::string& subcommand, const Program& p) const {
    RunReport r;
    r.subcommand = subcommand;
    r.atoms = p.atoms().size();
    r.occurrences = p.occurrences();
    r.rules = p.size();
    r.negated = p.negated().size();
    return r;
  }

  Program load(const std::string& path) {
    const auto start = Clock::now();
    ParseOptions options;
    options.allow_reserved = settings.allow_reserved;
    Program p = parse_program(read_input(path), options);
    parse_ms = ms_since(start);
    return p;
  }

  int finish(RunReport& r, bool yes) {
    r.answer = yes ? "yes" : "no";
    r.timings_ms["parse"] = parse_ms;
    emit(to_json(r, settings.timings));
    return yes ? kExitYes : kExitNo;
  }

  int check(const std::string& file, const std::string& model) {
    const Program p = load(file);
    RunReport r = report_for("check", p);
    const AtomSet m = p.set_of(split_names(model));
    const auto start = Clock::now();
    const bool yes = is_stable(p, m);
    r.timings_ms["check"] = ms_since(start);
    r.has_witness = true;
    r.witness = p.names_of(m);
    return finish(r, yes);
  }

  int enumerate(const std::string& file, std::size_t cap) {
    const Program p = load(file);
    const auto models = enumerate_stable_models(p, {cap});
    nlohmann::json j;
    j["models"] = models_json(p, models);
    j["count"] = models.size();
    return emit(j);
  }

  int solve_ssm_cmd(const std::string& file, std::size_t k, const std::string& mode) {
    const Program p = load(file);
    RunReport r = report_for("solve-ssm", p);
    SsmOptions options;
    options.mode = mode == "literal" ? SsmMode::literal : SsmMode::optimized;
    const auto start = Clock::now();
    const auto answer = solve_ssm(p, k, options);
    r.timings_ms["solve"] = ms_since(start);
    r.extra["bases_examined"] = answer.bases_examined;
    if (answer.witness) {
      r.has_witness = true;
      r.witness = p.names_of(*answer.witness);
    }
    return finish(r, answer.yes);
  }

  int solve_lsm_cmd(const std::string& file, std::size_t k) {
    const Program p = load(file);
    RunReport r = report_for("solve-lsm", p);
    const auto start = Clock::now();
    const auto answer = solve_lsm(p, k);
    r.timings_ms["solve"] = ms_since(start);
    r.extra["lsm"] = {{"bounded_rules", answer.stats.bounded_rules},
                      {"bounded_negated", answer.stats.bounded_negated},
                      {"subsets_tried", answer.stats.subsets_tried},
                      {"early_exit", answer.stats.early_exit}};
    if (answer.witness) {
      r.has_witness = true;
      r.witness = p.names_of(*answer.witness);
    }
    return finish(r, answer.yes);
  }

  int encode(const std::string& kind, std::size_t k, const std::string& file,
             const std::string& sidecar) {
    if (kind == "pc") {
      const Program p = encode_PC(parse_dimacs(read_input(file)), k);
      out_ << to_text(p);
      return kExitYes;
    }
    const Program p = load(file);
    const auto enc = kind == "t" ? encode_T(p, k) : encode_Tc(p, k);
    const nlohmann::json meta = {{"weight_bound", enc.weight_bound()}, {"atoms", enc.atom_count()}};
    auto formula = to_json(enc.formula, *enc.vocabulary);
    if (!sidecar.empty()) {
      std::ofstream side(sidecar);
      if (!side) throw Error("cannot write '" + sidecar + "'");
      side << meta.dump() << '\n';
      return emit(formula);
    }
    nlohmann::json j = meta;
    j["formula"] = std::move(formula);
    return emit(j);
  }

  int bench(const std::string& solver, std::size_t k, const std::string& family,
            const std::vector<std::size_t>& sizes) {
    const auto reports = bench_family(family == "chain" ? BenchFamily::chain : BenchFamily::negclique,
                                      sizes, k, solver == "ssm" ? BenchSolver::ssm : BenchSolver::lsm);
    nlohmann::json j;
    j["subcommand"] = "bench";
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r, true));
    return emit(j);
  }

  Settings settings;
  double parse_ms = 0;

 private:
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out);
  CLI::App app{"Small and large stable models of ground logic programs", "stablek"};
  app.require_subcommand(1);
  app.add_flag("--pretty", runner.settings.pretty, "Indent JSON output");
  app.add_flag("--timings", runner.settings.timings, "Include wall-clock timings in reports");
  app.add_flag("--allow-reserved", runner.settings.allow_reserved,
               "Accept atom names with encoder prefixes (c__, cm__, d__, __f)");

  std::string file, model, mode = "optimized", kind, solver, family, sidecar;
  std::size_t k = 0, cap = 20;
  std::vector<std::size_t> sizes;
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "Test whether a set of atoms is a stable model");
  check->add_option("file", file, "Program file ('-' for stdin)")->required();
  check->add_option("--model", model, "Comma-separated atoms")->required();
  check->callback([&] { action = [&] { return runner.check(file, model); }; });

  auto* enumerate = app.add_subcommand("enumerate", "List all stable models by exhaustive search");
  enumerate->add_option("file", file, "Program file")->required();
  enumerate->add_option("--cap", cap, "Largest head set to search")->capture_default_str();
  enumerate->callback([&] { action = [&] { return runner.enumerate(file, cap); }; });

  auto* ssm = app.add_subcommand("solve-ssm", "Is there a stable model with at most k atoms?");
  ssm->add_option("file", file, "Program file")->required();
  ssm->add_option("--k", k, "Size bound")->required();
  ssm->add_option("--mode", mode, "Base program test")
      ->check(CLI::IsMember({"literal", "optimized"}))
      ->capture_default_str();
  ssm->callback([&] { action = [&] { return runner.solve_ssm_cmd(file, k, mode); }; });

  auto* lsm = app.add_subcommand("solve-lsm", "Is there a stable model with at least |P|-k atoms?");
  lsm->add_option("file", file, "Program file")->required();
  lsm->add_option("--k", k, "Distance from |P|")->required();
  lsm->callback([&] { action = [&] { return runner.solve_lsm_cmd(file, k); }; });

  auto* encode = app.add_subcommand("encode", "Write the formula (t, tc) or program (pc) encoding");
  encode->add_option("kind", kind, "t, tc or pc")->required()->check(CLI::IsMember({"t", "tc", "pc"}));
  encode->add_option("file", file, "Program file, or DIMACS CNF for pc")->required();
  encode->add_option("--k", k, "Parameter")->required();
  encode->add_option("--sidecar", sidecar, "Write weight bound and atom count to this file");
  encode->callback([&] { action = [&] { return runner.encode(kind, k, file, sidecar); }; });

  auto* bench = app.add_subcommand("bench", "Time a solver on a generated family");
  bench->add_option("solver", solver, "ssm or lsm")->required()->check(CLI::IsMember({"ssm", "lsm"}));
  bench->add_option("--k", k, "Parameter")->required();
  bench->add_option("--family", family, "chain or negclique")
      ->required()
      ->check(CLI::IsMember({"chain", "negclique"}));
  bench->add_option("--sizes", sizes, "Comma-separated instance sizes")->required()->delimiter(',');
  bench->callback([&] { action = [&] { return runner.bench(solver, k, family, sizes); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  auto fail = [&](const std::string& message, int code) {
    err << "stablek: " << message << '\n';
    runner.emit({{"answer", "error"}, {"error", message}});
    return code;
  };
  try {
    return action();
  } catch (const CapExceeded& e) {
    return fail(e.what(), kExitCap);
  } catch (const ParseError& e) {
    return fail(std::string("parse error: ") + e.what(), kExitUsage);
  } catch (const Error& e) {
    return fail(e.what(), kExitUsage);
  } catch (const std::invalid_argument& e) {
    return fail(e.what(), kExitUsage);
  }
}

}  // namespace stablek
