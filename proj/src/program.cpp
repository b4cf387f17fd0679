// SPDX-License-Identifier: MIT
#include "stablek/program.hpp"

#include "stablek/least_model.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace stablek {

namespace {

void sort_unique(std::vector<AtomId>& v) {
  if (std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end()) return;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains_sorted(const std::vector<AtomId>& v, AtomId a) {
  return std::binary_search(v.begin(), v.end(), a);
}

struct RuleHash {
  std::size_t operator()(const Rule* r) const {
    std::size_t h = r->head;
    boost::hash_combine(h, boost::hash_range(r->pos.begin(), r->pos.end()));
    boost::hash_combine(h, boost::hash_range(r->neg.begin(), r->neg.end()));
    return h;
  }
};

struct RuleEq {
  bool operator()(const Rule* a, const Rule* b) const { return *a == *b; }
};

}  // namespace

Rule::Rule(AtomId h, std::vector<AtomId> p, std::vector<AtomId> n)
    : head(h), pos(std::move(p)), neg(std::move(n)) {
  sort_unique(pos);
  sort_unique(neg);
}

bool Rule::is_proper() const {
  if (contains_sorted(pos, head)) return false;
  for (auto a : pos) {
    if (contains_sorted(neg, a)) return false;
  }
  return true;
}

Program::Program() : Program(std::make_shared<const AtomTable>(), {}) {}

Program::Program(std::shared_ptr<const AtomTable> atoms, std::vector<Rule> rules)
    : atoms_(std::move(atoms)), at_(atoms_->size()), heads_(atoms_->size()), neg_(atoms_->size()) {
  // points into rules_, which never reallocates below
  std::unordered_set<const Rule*, RuleHash, RuleEq> seen;
  seen.reserve(rules.size());
  rules_.reserve(rules.size());
  const auto n = atoms_->size();
  for (auto& r : rules) {
    // Rules built field-by-field may not be normalized yet.
    sort_unique(r.pos);
    sort_unique(r.neg);
    auto check = [n](AtomId a) {
      if (a >= n) throw std::invalid_argument("rule refers to an atom outside the atom table");
    };
    check(r.head);
    std::for_each(r.pos.begin(), r.pos.end(), check);
    std::for_each(r.neg.begin(), r.neg.end(), check);
    rules_.push_back(std::move(r));
    const Rule& kept = rules_.back();
    if (!seen.insert(&kept).second) {
      rules_.pop_back();
      continue;
    }
    occurrences_ += kept.occurrences();
    at_.insert(kept.head);
    heads_.insert(kept.head);
    for (auto a : kept.pos) at_.insert(a);
    for (auto a : kept.neg) {
      at_.insert(a);
      neg_.insert(a);
    }
  }
}

AtomSet Program::set_of(const std::vector<std::string>& names) const {
  AtomSet s(universe());
  for (const auto& name : names) {
    auto id = atoms_->find(name);
    if (!id) throw std::invalid_argument("unknown atom '" + name + "'");
    s.insert(*id);
  }
  return s;
}

HornProgram::HornProgram(Program p) : program_(std::move(p)) {
  for (const auto& r : program_.rules()) {
    if (!r.is_horn()) throw std::invalid_argument("Horn program with a negative body");
  }
}

ProgramBuilder::ProgramBuilder() : atoms_(std::make_shared<AtomTable>()) {}

AtomId ProgramBuilder::atom(std::string_view name) { return atoms_->intern(name); }

void ProgramBuilder::add_rule(std::string_view head, const std::vector<std::string>& pos,
                              const std::vector<std::string>& neg) {
  Rule r;
  r.head = atom(head);
  for (const auto& a : pos) r.pos.push_back(atom(a));
  for (const auto& a : neg) r.neg.push_back(atom(a));
  rules_.push_back(std::move(r));
}

Program ProgramBuilder::build() && {
  return Program(std::move(atoms_), std::move(rules_));
}

bool has_reserved_prefix(std::string_view name) {
  for (std::string_view prefix : {"c__", "cm__", "d__", "__f"}) {
    if (name.starts_with(prefix)) return true;
  }
  return false;
}

std::string format_rule(const Rule& r, const AtomTable& atoms) {
  std::string out = atoms.name(r.head);
  if (!r.pos.empty() || !r.neg.empty()) {
    out += " :- ";
    bool first = true;
    auto sep = [&] {
      if (!first) out += ", ";
      first = false;
    };
    for (auto a : r.pos) {
      sep();
      out += atoms.name(a);
    }
    for (auto a : r.neg) {
      sep();
      out += "not ";
      out += atoms.name(a);
    }
  }
  out += '.';
  return out;
}

std::string to_text(const Program& p) {
  std::string out;
  for (const auto& r : p.rules()) {
    out += format_rule(r, p.table());
    out += '\n';
  }
  return out;
}

HornProgram reduct(const Program& p, const AtomSet& m) {
  std::vector<Rule> out;
  for (const auto& r : p.rules()) {
    bool blocked = std::any_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return m.contains(a); });
    if (!blocked) out.push_back(r.horn());
  }
  return HornProgram(p.with_rules(std::move(out)));
}

AtomSet least_model(const HornProgram& h) {
  const auto& p = h.program();
  std::vector<char> active(p.size(), 1);
  return DerivationIndex(p).least_model(active);
}

bool is_stable(const Program& p, const AtomSet& m) {
  if (m.universe() != p.universe()) {
    throw std::invalid_argument("candidate model is over a different atom table");
  }
  if (!m.is_subset_of(p.atoms())) return false;
  return DerivationIndex(p).least_model_of_reduct(m) == m;
}

std::vector<Rule> generating_rules(const Program& p, const AtomSet& m) {
  std::vector<Rule> out;
  for (const auto& r : p.rules()) {
    bool pos_ok = std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return m.contains(a); });
    bool neg_ok = std::none_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return m.contains(a); });
    if (pos_ok && neg_ok) out.push_back(r);
  }
  return out;
}

Program proper_filter(const Program& p) {
  std::vector<Rule> out;
  for (const auto& r : p.rules()) {
    if (r.is_proper()) out.push_back(r);
  }
  return p.with_rules(std::move(out));
}

Program star_transform(const Program& p) {
  const auto& heads = p.heads();
  std::vector<Rule> out;
  out.reserve(p.size());
  for (const auto& r : p.rules()) {
    Rule q = r;
    std::erase_if(q.neg, [&](AtomId a) { return !heads.contains(a); });
    out.push_back(std::move(q));
  }
  return p.with_rules(std::move(out));
}

Program bounded_neg_subprogram(const Program& p, std::size_t k) {
  std::vector<Rule> out;
  for (const auto& r : p.rules()) {
    if (r.neg.size() <= k) out.push_back(r);
  }
  return p.with_rules(std::move(out));
}

}  // namespace stablek
