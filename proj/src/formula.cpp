// SPDX-License-Identifier: MIT
#include "stablek/formula.hpp"

#include "stablek/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace stablek {

bool evaluate(const Formula& f, const Assignment& a) {
  switch (f.kind) {
    case Formula::Kind::constant:
      return f.flag;
    case Formula::Kind::lit:
      return a.contains(f.atom) != f.flag;
    case Formula::Kind::conj:
      return std::all_of(f.args.begin(), f.args.end(), [&](const Formula& g) { return evaluate(g, a); });
    case Formula::Kind::disj:
      return std::any_of(f.args.begin(), f.args.end(), [&](const Formula& g) { return evaluate(g, a); });
  }
  return false;
}

Formula negate(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::constant:
      return Formula::constant(!f.flag);
    case Formula::Kind::lit:
      return Formula::literal(f.atom, !f.flag);
    case Formula::Kind::conj:
    case Formula::Kind::disj: {
      std::vector<Formula> args;
      args.reserve(f.args.size());
      for (const auto& g : f.args) args.push_back(negate(g));
      return f.kind == Formula::Kind::conj ? Formula::any_of(std::move(args))
                                           : Formula::all_of(std::move(args));
    }
  }
  return f;
}

Formula simplify(const Formula& f) {
  if (f.kind != Formula::Kind::conj && f.kind != Formula::Kind::disj) return f;
  // neutral: true for conj, false for disj
  const bool neutral = f.kind == Formula::Kind::conj;
  std::vector<Formula> args;
  for (const auto& g : f.args) {
    Formula s = simplify(g);
    if (s.kind == Formula::Kind::constant) {
      if (s.flag == neutral) continue;
      return Formula::constant(!neutral);
    }
    args.push_back(std::move(s));
  }
  if (args.empty()) return Formula::constant(neutral);
  return Formula{f.kind, false, 0, std::move(args)};
}

namespace {

int depth_of(const Formula& f) {
  if (f.kind == Formula::Kind::lit || f.kind == Formula::Kind::constant) return 0;
  int deepest = 0;
  for (const auto& g : f.args) {
    if (g.kind == f.kind) {
      throw StructureError("nested connectives of the same kind are not in alternating form");
    }
    deepest = std::max(deepest, depth_of(g));
  }
  return deepest + 1;
}

// Lanes evaluated together: one bit per candidate assignment.
constexpr std::size_t kWords = 4;
constexpr std::size_t kLanes = 64 * kWords;
using Block = std::array<std::uint64_t, kWords>;

// Post-order flattening of a formula for bit-parallel evaluation.
class Compiled {
 public:
  explicit Compiled(const Formula& f) { root_ = emit(f); }

  // A root conjunction is evaluated one conjunct at a time and stops as
  // soon as every lane is false; each conjunct's subtree is a contiguous
  // run of ops ending at the conjunct itself.
  Block run(const std::vector<Block>& lanes) {
    values_.resize(ops_.size());
    const Op& root = ops_[root_];
    if (root.kind != Formula::Kind::conj) {
      eval_range(lanes, 0, ops_.size());
      return values_[root_];
    }
    Block acc;
    acc.fill(~std::uint64_t{0});
    std::size_t next = 0;
    for (auto c = root.begin; c < root.end; ++c) {
      const std::size_t top = children_[c];
      eval_range(lanes, next, top + 1);
      next = top + 1;
      std::uint64_t any = 0;
      for (std::size_t w = 0; w < kWords; ++w) any |= (acc[w] &= values_[top][w]);
      if (any == 0) break;
    }
    return acc;
  }

 private:
  void eval_range(const std::vector<Block>& lanes, std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      const Op& op = ops_[i];
      Block& v = values_[i];
      switch (op.kind) {
        case Formula::Kind::constant:
          v.fill(op.flag ? ~std::uint64_t{0} : 0);
          break;
        case Formula::Kind::lit: {
          const Block& x = lanes[op.atom];
          const std::uint64_t flip = op.flag ? ~std::uint64_t{0} : 0;
          for (std::size_t w = 0; w < kWords; ++w) v[w] = x[w] ^ flip;
          break;
        }
        case Formula::Kind::conj:
          v.fill(~std::uint64_t{0});
          for (auto c = op.begin; c < op.end; ++c) {
            const Block& x = values_[children_[c]];
            for (std::size_t w = 0; w < kWords; ++w) v[w] &= x[w];
          }
          break;
        case Formula::Kind::disj:
          v.fill(0);
          for (auto c = op.begin; c < op.end; ++c) {
            const Block& x = values_[children_[c]];
            for (std::size_t w = 0; w < kWords; ++w) v[w] |= x[w];
          }
          break;
      }
    }
  }

  struct Op {
    Formula::Kind kind;
    bool flag;
    AtomId atom;
    std::uint32_t begin;
    std::uint32_t end;
  };

  std::uint32_t emit(const Formula& f) {
    std::vector<std::uint32_t> kids;
    kids.reserve(f.args.size());
    for (const auto& g : f.args) kids.push_back(emit(g));
    Op op{f.kind, f.flag, f.atom, static_cast<std::uint32_t>(children_.size()), 0};
    children_.insert(children_.end(), kids.begin(), kids.end());
    op.end = static_cast<std::uint32_t>(children_.size());
    ops_.push_back(op);
    return static_cast<std::uint32_t>(ops_.size() - 1);
  }

  std::vector<Op> ops_;
  std::vector<std::uint32_t> children_;
  std::vector<Block> values_;
  std::uint32_t root_ = 0;
};

}  // namespace

int normalization_depth(const Formula& f) { return depth_of(f); }

std::optional<Assignment> ws_exists(const Formula& f, std::size_t atom_count, std::size_t k,
                                    WeightMode mode, const WsOptions& options) {
  if (atom_count > options.atom_cap || atom_count > 64) {
    throw CapExceeded("weighted satisfiability oracle refuses " + std::to_string(atom_count) +
                      " atoms (cap " + std::to_string(options.atom_cap) + ")");
  }
  const std::size_t n = atom_count;
  if (k > n) {
    if (mode == WeightMode::exact) return std::nullopt;
    k = n;
  }
  Compiled program(f);
  std::vector<Block> lanes(n);
  // one atom mask per lane
  std::array<std::uint64_t, kLanes> batch{};
  std::size_t filled = 0;

  auto flush = [&]() -> std::optional<Assignment> {
    if (filled == 0) return std::nullopt;
    for (auto& l : lanes) l.fill(0);
    for (std::size_t lane = 0; lane < filled; ++lane) {
      for (auto m = batch[lane]; m != 0; m &= m - 1) {
        lanes[static_cast<std::size_t>(std::countr_zero(m))][lane / 64] |= std::uint64_t{1} << (lane % 64);
      }
    }
    const Block hits = program.run(lanes);
    std::optional<Assignment> found;
    for (std::size_t w = 0; w < kWords && !found && w * 64 < filled; ++w) {
      std::uint64_t word = hits[w];
      const std::size_t live = filled - w * 64;
      if (live < 64) word &= (std::uint64_t{1} << live) - 1;
      if (word == 0) continue;
      Assignment a(n);
      for (auto m = batch[w * 64 + static_cast<std::size_t>(std::countr_zero(word))]; m != 0; m &= m - 1) {
        a.insert(static_cast<AtomId>(std::countr_zero(m)));
      }
      found = std::move(a);
    }
    filled = 0;
    return found;
  };

  const std::size_t lo = mode == WeightMode::exact ? k : 0;
  std::vector<std::size_t> idx;
  for (std::size_t w = lo; w <= k; ++w) {
    idx.resize(w);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < w; ++i) {
      idx[i] = i;
      mask |= std::uint64_t{1} << i;
    }
    while (true) {
      batch[filled++] = mask;
      if (filled == kLanes) {
        if (auto hit = flush()) return hit;
      }
      std::size_t j = w;
      while (j > 0 && idx[j - 1] == n - w + (j - 1)) --j;
      if (j == 0) break;
      for (std::size_t t = j - 1; t < w; ++t) mask &= ~(std::uint64_t{1} << idx[t]);
      ++idx[j - 1];
      for (std::size_t t = j; t < w; ++t) idx[t] = idx[t - 1] + 1;
      for (std::size_t t = j - 1; t < w; ++t) mask |= std::uint64_t{1} << idx[t];
    }
    // one weight per batch
    if (auto hit = flush()) return hit;
  }
  return std::nullopt;
}

nlohmann::json to_json(const Formula& f, const AtomTable& atoms) {
  switch (f.kind) {
    case Formula::Kind::constant:
      return {{"const", f.flag}};
    case Formula::Kind::lit:
      return {{"lit", atoms.name(f.atom)}, {"neg", f.flag}};
    case Formula::Kind::conj:
    case Formula::Kind::disj: {
      auto args = nlohmann::json::array();
      for (const auto& g : f.args) args.push_back(to_json(g, atoms));
      return {{"op", f.kind == Formula::Kind::conj ? "and" : "or"}, {"args", std::move(args)}};
    }
  }
  return nullptr;
}

Formula formula_from_json(const nlohmann::json& j, AtomTable& atoms) {
  auto bad = [](const std::string& msg) -> ParseError { return ParseError("formula JSON: " + msg, 1, 1); };
  if (!j.is_object()) throw bad("expected an object");
  if (j.contains("const")) {
    if (!j["const"].is_boolean()) throw bad("'const' must be a boolean");
    return Formula::constant(j["const"].get<bool>());
  }
  if (j.contains("lit")) {
    if (!j["lit"].is_string()) throw bad("'lit' must be a string");
    const auto name = j["lit"].get<std::string>();
    if (!is_valid_atom_name(name)) throw bad("invalid atom name '" + name + "'");
    bool neg = false;
    if (j.contains("neg")) {
      if (!j["neg"].is_boolean()) throw bad("'neg' must be a boolean");
      neg = j["neg"].get<bool>();
    }
    return Formula::literal(atoms.intern(name), neg);
  }
  if (j.contains("op")) {
    const auto& op = j["op"];
    if (!op.is_string() || (op != "and" && op != "or")) throw bad("'op' must be \"and\" or \"or\"");
    if (!j.contains("args") || !j["args"].is_array()) throw bad("'args' must be an array");
    std::vector<Formula> args;
    for (const auto& g : j["args"]) args.push_back(formula_from_json(g, atoms));
    return op == "and" ? Formula::all_of(std::move(args)) : Formula::any_of(std::move(args));
  }
  throw bad("unrecognized node");
}

nlohmann::json assignment_to_json(const Assignment& a, const AtomTable& atoms) {
  auto names = atoms.names_of(a);
  std::sort(names.begin(), names.end());
  return names;
}

AtomSet atoms_of(const Formula& f, std::size_t universe) {
  AtomSet out(universe);
  auto walk = [&](auto&& self, const Formula& g) -> void {
    if (g.kind == Formula::Kind::lit) out.insert(g.atom);
    for (const auto& h : g.args) self(self, h);
  };
  walk(walk, f);
  return out;
}

}  // namespace stablek
