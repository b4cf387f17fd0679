// SPDX-License-Identifier: MIT
#include "stablek/encodings.hpp"

#include "stablek/error.hpp"
#include "stablek/least_model.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace stablek {

namespace {

constexpr std::size_t kNoBlock = std::numeric_limits<std::size_t>::max();

using Kind = EncodedAtom::Kind;

std::vector<std::vector<const Rule*>> rules_by_head(const Program& p) {
  std::vector<std::vector<const Rule*>> out(p.universe());
  for (const auto& r : p.rules()) out[r.head].push_back(&r);
  return out;
}

std::shared_ptr<const AtomTable> build_vocabulary(const EncodingLayout& layout,
                                                  const AtomTable& source_atoms) {
  auto vocab = std::make_shared<AtomTable>();
  for (AtomId id = 0; id < layout.atom_count(); ++id) {
    const auto name = mangle(layout.decode(id), source_atoms);
    if (vocab->intern(name) != id) {
      throw Error("encoded atom name '" + name + "' is produced twice; rename source atoms");
    }
  }
  return vocab;
}

Formula lit(AtomId a, bool negated = false) { return Formula::literal(a, negated); }

// F3(r, i): q is first derived in round i through rule r.
Formula stage_rule(const EncodingLayout& layout, const Rule& r, std::size_t i) {
  std::vector<Formula> parts;
  if (i == 1) {
    if (!r.pos.empty()) return Formula::any_of({});
    for (auto b : r.neg) parts.push_back(lit(layout.computed(b), true));
    return Formula::all_of(std::move(parts));
  }
  for (auto a : r.pos) parts.push_back(lit(layout.before(a, i)));
  for (auto b : r.neg) parts.push_back(lit(layout.computed(b), true));
  parts.push_back(lit(layout.before(r.head, i), true));
  return Formula::all_of(std::move(parts));
}

Formula any_stage_below(const EncodingLayout& layout, AtomId q, std::size_t end) {
  std::vector<Formula> parts;
  for (std::size_t j = 1; j < end; ++j) parts.push_back(lit(layout.at_stage(q, j)));
  return Formula::any_of(std::move(parts));
}

// x <-> y as (not x or y) and (x or not y).
void add_equivalence(std::vector<Formula>& out, const Formula& x, const Formula& y) {
  std::vector<Formula> forward{negate(x)};
  if (y.kind == Formula::Kind::disj) {
    forward.insert(forward.end(), y.args.begin(), y.args.end());
  } else {
    forward.push_back(y);
  }
  out.push_back(Formula::any_of(std::move(forward)));
  out.push_back(Formula::any_of({x, negate(y)}));
}

// Sum of one-literal products.
Formula clause(std::vector<Formula> literals) {
  std::vector<Formula> terms;
  terms.reserve(literals.size());
  for (auto& l : literals) terms.push_back(Formula::all_of({std::move(l)}));
  return Formula::any_of(std::move(terms));
}

}  // namespace

EncodingLayout::EncodingLayout(const Program& p, std::size_t k)
    : k_(k), sources_(p.atoms().members()), block_of_(p.universe(), kNoBlock) {
  for (std::size_t b = 0; b < sources_.size(); ++b) block_of_[sources_[b]] = b;
}

AtomId EncodingLayout::id(const EncodedAtom& e) const {
  if (e.source >= block_of_.size() || block_of_[e.source] == kNoBlock) {
    throw std::invalid_argument("encoded atom refers to an atom outside At(P)");
  }
  const std::size_t base = block_of_[e.source] * block_size();
  const std::size_t i = e.index;
  auto in = [&](std::size_t lo, std::size_t hi) {
    if (i < lo || i > hi) throw std::invalid_argument("encoded atom index out of range");
  };
  switch (e.kind) {
    case Kind::computed:
      return static_cast<AtomId>(base);
    case Kind::at_stage:
      in(1, k_ + 1);
      return static_cast<AtomId>(base + i);
    case Kind::before:
      in(2, k_ + 1);
      return static_cast<AtomId>(base + k_ + i);
    case Kind::weight:
      in(1, padding());
      return static_cast<AtomId>(base + 2 * k_ + 1 + i);
  }
  return 0;
}

EncodedAtom EncodingLayout::decode(AtomId id) const {
  if (id >= atom_count()) throw std::invalid_argument("id outside the encoding vocabulary");
  const AtomId q = sources_[id / block_size()];
  const std::size_t off = id % block_size();
  if (off == 0) return {Kind::computed, q, 0};
  if (off <= k_ + 1) return {Kind::at_stage, q, off};
  if (off <= 2 * k_ + 1) return {Kind::before, q, off - k_};
  return {Kind::weight, q, off - 2 * k_ - 1};
}

std::string mangle(const EncodedAtom& e, const AtomTable& source_atoms) {
  const auto& q = source_atoms.name(e.source);
  switch (e.kind) {
    case Kind::computed:
      return "c__" + q;
    case Kind::at_stage:
      return "c__" + q + "__" + std::to_string(e.index);
    case Kind::before:
      return "cm__" + q + "__" + std::to_string(e.index);
    case Kind::weight:
      return "d__" + q + "__" + std::to_string(e.index);
  }
  return {};
}

ProgramEncoding encode_T(const Program& p, std::size_t k) {
  EncodingLayout layout(p, k);
  auto vocab = build_vocabulary(layout, p.table());
  const auto by_head = rules_by_head(p);
  std::vector<Formula> parts;

  for (AtomId q : layout.sources()) {
    for (std::size_t i = 2; i <= k + 1; ++i) {
      add_equivalence(parts, lit(layout.before(q, i)), any_stage_below(layout, q, i));
    }
    add_equivalence(parts, lit(layout.computed(q)), any_stage_below(layout, q, k + 2));
    for (std::size_t i = 1; i <= k + 1; ++i) {
      std::vector<Formula> ways;
      for (const Rule* r : by_head[q]) ways.push_back(stage_rule(layout, *r, i));
      add_equivalence(parts, lit(layout.at_stage(q, i)), Formula::any_of(std::move(ways)));
    }
    for (std::size_t j = 1; j <= layout.padding(); ++j) {
      add_equivalence(parts, lit(layout.computed(q)), lit(layout.weight(q, j)));
    }
  }
  return {p.table_ptr(), std::move(vocab), layout, Formula::all_of(std::move(parts))};
}

ProgramEncoding encode_Tc(const Program& p, std::size_t k) {
  EncodingLayout layout(p, k);
  auto vocab = build_vocabulary(layout, p.table());
  const auto by_head = rules_by_head(p);
  const auto& sources = layout.sources();
  std::vector<Formula> clauses;

  // C0: c(q) <-> d(q,i)
  for (AtomId q : sources) {
    for (std::size_t j = 1; j <= layout.padding(); ++j) {
      clauses.push_back(clause({lit(layout.computed(q), true), lit(layout.weight(q, j))}));
      clauses.push_back(clause({lit(layout.computed(q)), lit(layout.weight(q, j), true)}));
    }
  }
  // C1: c-(q,i) <-> c(q,1) v ... v c(q,i-1)
  for (AtomId q : sources) {
    for (std::size_t i = 2; i <= k + 1; ++i) {
      std::vector<Formula> forward{lit(layout.before(q, i), true)};
      for (std::size_t j = 1; j < i; ++j) forward.push_back(lit(layout.at_stage(q, j)));
      clauses.push_back(clause(std::move(forward)));
      for (std::size_t j = 1; j < i; ++j) {
        clauses.push_back(clause({lit(layout.at_stage(q, j), true), lit(layout.before(q, i))}));
      }
    }
  }
  // C2: c(q) <-> c(q,1) v ... v c(q,k+1)
  for (AtomId q : sources) {
    std::vector<Formula> forward{lit(layout.computed(q), true)};
    for (std::size_t j = 1; j <= k + 1; ++j) forward.push_back(lit(layout.at_stage(q, j)));
    clauses.push_back(clause(std::move(forward)));
    for (std::size_t j = 1; j <= k + 1; ++j) {
      clauses.push_back(clause({lit(layout.at_stage(q, j), true), lit(layout.computed(q))}));
    }
  }
  // C4: c(q,i) <-> F3(r_1,i) v ... v F3(r_v,i)
  for (AtomId q : sources) {
    for (std::size_t i = 1; i <= k + 1; ++i) {
      const Formula stage = lit(layout.at_stage(q, i));
      std::vector<Formula> forward{Formula::all_of({negate(stage)})};
      for (const Rule* r : by_head[q]) {
        Formula way = stage_rule(layout, *r, i);
        if (way.kind == Formula::Kind::disj) continue;  // constant false term
        forward.push_back(std::move(way));
      }
      clauses.push_back(Formula::any_of(std::move(forward)));
      for (const Rule* r : by_head[q]) {
        Formula way = stage_rule(layout, *r, i);
        if (way.kind == Formula::Kind::disj) continue;  // not F3 is true
        std::vector<Formula> backward;
        for (const auto& l : way.args) backward.push_back(negate(l));
        backward.push_back(stage);
        clauses.push_back(clause(std::move(backward)));
      }
    }
  }
  // keep the empty theory at depth 3 as a single always-true clause
  if (clauses.empty()) clauses.push_back(Formula::any_of({Formula::all_of({})}));
  return {p.table_ptr(), std::move(vocab), layout, Formula::all_of(std::move(clauses))};
}

Assignment build_witness(const ProgramEncoding& enc, const Program& p, const AtomSet& m) {
  if (enc.source_atoms != p.table_ptr()) {
    throw std::invalid_argument("encoding was built for a different program");
  }
  const auto& layout = enc.layout;
  const std::size_t k = layout.k();
  if (m.size() > k || !is_stable(p, m)) {
    throw std::invalid_argument("build_witness needs a stable model with at most k atoms");
  }
  const auto stages = DerivationIndex(p).derivation_stages(m);
  Assignment u(layout.atom_count());
  m.for_each([&](AtomId q) {
    const std::size_t s = stages[q];
    u.insert(layout.computed(q));
    u.insert(layout.at_stage(q, s));
    for (std::size_t i = s + 1; i <= k + 1; ++i) u.insert(layout.before(q, i));
    for (std::size_t j = 1; j <= layout.padding(); ++j) u.insert(layout.weight(q, j));
  });
  if (u.size() > layout.weight_bound()) {
    throw std::logic_error("witness assignment exceeds the weight bound");
  }
  return u;
}

AtomSet decode_witness(const ProgramEncoding& enc, const Assignment& u) {
  if (u.universe() != enc.atom_count()) {
    throw std::invalid_argument("assignment is over a different vocabulary");
  }
  AtomSet m(enc.source_atoms->size());
  for (AtomId q : enc.layout.sources()) {
    if (u.contains(enc.layout.computed(q))) m.insert(q);
  }
  return m;
}

AtomSet decode_witness(const ProgramEncoding& enc, const std::vector<std::string>& true_atoms) {
  Assignment u(enc.atom_count());
  for (const auto& name : true_atoms) {
    auto id = enc.vocabulary->find(name);
    if (!id) throw std::invalid_argument("unknown encoded atom '" + name + "'");
    u.insert(*id);
  }
  return decode_witness(enc, u);
}

Formula to_formula(const ClauseSet& c) {
  std::vector<Formula> clauses;
  for (const auto& cl : c.clauses) {
    std::vector<Formula> lits;
    for (auto a : cl.pos) lits.push_back(lit(a));
    for (auto a : cl.neg) lits.push_back(lit(a, true));
    clauses.push_back(Formula::any_of(std::move(lits)));
  }
  return Formula::all_of(std::move(clauses));
}

Program encode_PC(const ClauseSet& c, std::size_t k) {
  if (k == 0) throw std::invalid_argument("encode_PC needs k >= 1");
  const auto& atoms = *c.atoms;
  const std::size_t r = atoms.size();
  std::set<std::string> taken;
  for (AtomId j = 0; j < r; ++j) {
    if (has_reserved_prefix(atoms.name(j))) {
      throw std::invalid_argument("clause atom '" + atoms.name(j) + "' uses a reserved prefix");
    }
    taken.insert(atoms.name(j));
  }
  auto copy_name = [&](AtomId j, std::size_t i) { return atoms.name(j) + "__" + std::to_string(i); };
  for (AtomId j = 0; j < r; ++j) {
    for (std::size_t i = 1; i <= k; ++i) {
      if (!taken.insert(copy_name(j, i)).second) {
        throw std::invalid_argument("copy atom '" + copy_name(j, i) + "' collides with a clause atom");
      }
    }
  }

  ProgramBuilder b;
  for (std::size_t i = 1; i <= k; ++i) {
    for (AtomId j = 0; j < r; ++j) {
      std::vector<std::string> others;
      for (AtomId l = 0; l < r; ++l) {
        if (l != j) others.push_back(copy_name(l, i));
      }
      b.add_rule(copy_name(j, i), {}, others);
    }
  }
  for (AtomId j = 0; j < r; ++j) {
    for (std::size_t i = 1; i <= k; ++i) b.add_rule(atoms.name(j), {copy_name(j, i)});
  }
  const std::string f = "__f";
  for (const auto& cl : c.clauses) {
    if (cl.pos.empty() && cl.neg.empty()) throw std::invalid_argument("clause with no literals");
    std::vector<std::string> body, negated;
    for (auto a : cl.neg) body.push_back(atoms.name(a));
    for (auto a : cl.pos) negated.push_back(atoms.name(a));
    negated.push_back(f);
    b.add_rule(f, body, negated);
  }
  return std::move(b).build();
}

}  // namespace stablek
