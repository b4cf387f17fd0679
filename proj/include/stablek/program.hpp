// SPDX-License-Identifier: MIT
#pragma once

#include "stablek/atom_set.hpp"
#include "stablek/atom_table.hpp"

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace stablek {

/// A ground normal rule `head :- pos, not neg.`
///
/// `pos` and `neg` are kept sorted by id and duplicate-free.
struct Rule {
  AtomId head = 0;
  std::vector<AtomId> pos;
  std::vector<AtomId> neg;

  Rule() = default;
  Rule(AtomId h, std::vector<AtomId> p, std::vector<AtomId> n);

  bool is_horn() const noexcept { return neg.empty(); }
  /// head not in pos, and pos disjoint from neg.
  bool is_proper() const;
  /// The rule with its negative body dropped.
  Rule horn() const { return Rule(head, pos, {}); }

  std::size_t occurrences() const noexcept { return 1 + pos.size() + neg.size(); }

  friend auto operator<=>(const Rule&, const Rule&) = default;
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// A set of ground rules over a shared atom table.
///
/// Identical rules are collapsed at construction; the first occurrence
/// keeps its position. Derived programs (reducts, filters) share the atom
/// table of their source so that AtomSets stay comparable.
class Program {
 public:
  Program();
  Program(std::shared_ptr<const AtomTable> atoms, std::vector<Rule> rules);

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const AtomTable& table() const noexcept { return *atoms_; }
  const std::shared_ptr<const AtomTable>& table_ptr() const noexcept { return atoms_; }
  std::size_t universe() const noexcept { return atoms_->size(); }

  /// |P|, the number of distinct rules.
  std::size_t size() const noexcept { return rules_.size(); }
  /// size(P): total number of atom occurrences.
  std::size_t occurrences() const noexcept { return occurrences_; }
  /// At(P)
  const AtomSet& atoms() const noexcept { return at_; }
  /// h(P)
  const AtomSet& heads() const noexcept { return heads_; }
  /// Neg(P)
  const AtomSet& negated() const noexcept { return neg_; }

  AtomSet empty_set() const { return AtomSet(universe()); }
  /// Looks names up in the table; throws std::invalid_argument on unknown names.
  AtomSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const AtomSet& s) const { return atoms_->names_of(s); }

  /// Same table, different rules.
  Program with_rules(std::vector<Rule> rules) const { return Program(atoms_, std::move(rules)); }

 private:
  std::shared_ptr<const AtomTable> atoms_;
  std::vector<Rule> rules_;
  std::size_t occurrences_ = 0;
  AtomSet at_;
  AtomSet heads_;
  AtomSet neg_;
};

/// A negation-free program.
class HornProgram {
 public:
  /// Throws std::invalid_argument if some rule has a negative body.
  explicit HornProgram(Program p);

  const Program& program() const noexcept { return program_; }
  const std::vector<Rule>& rules() const noexcept { return program_.rules(); }
  std::size_t size() const noexcept { return program_.size(); }

 private:
  Program program_;
};

/// Incrementally interns names and collects rules.
class ProgramBuilder {
 public:
  ProgramBuilder();
  AtomId atom(std::string_view name);
  void add_rule(std::string_view head, const std::vector<std::string>& pos = {},
                const std::vector<std::string>& neg = {});
  void add_rule(Rule r) { rules_.push_back(std::move(r)); }
  Program build() &&;

 private:
  std::shared_ptr<AtomTable> atoms_;
  std::vector<Rule> rules_;
};

struct ParseOptions {
  /// Accept names starting with the encoder prefixes `c__`, `cm__`, `d__`, `__f`.
  bool allow_reserved = false;
};

/// Parses the rule text format (`head :- a, not b.`, `%` comments).
/// Throws ParseError with a 1-based line and column.
Program parse_program(std::string_view text, const ParseOptions& options = {});

/// True for names the encoders reserve.
bool has_reserved_prefix(std::string_view name);

/// One rule per line, literals in id order.
std::string to_text(const Program& p);
std::string format_rule(const Rule& r, const AtomTable& atoms);

/// P^M: rules blocked by M dropped, negative bodies stripped from the rest.
/// Atoms of M outside At(P) have no effect.
HornProgram reduct(const Program& p, const AtomSet& m);

/// LM(H), by counter-based propagation in O(size(H)).
AtomSet least_model(const HornProgram& h);

/// M = LM(P^M) and M is a subset of At(P). Throws std::invalid_argument if
/// `m` is over a different atom table.
bool is_stable(const Program& p, const AtomSet& m);

/// Rules whose positive body lies in M and whose negative body avoids M.
std::vector<Rule> generating_rules(const Program& p, const AtomSet& m);

/// Subprogram of rules with head not in the positive body and disjoint bodies.
Program proper_filter(const Program& p);

/// Drops every `not a` where `a` heads no rule. Rules that become identical
/// collapse, so the result can have fewer rules than `p`.
Program star_transform(const Program& p);

/// Rules with at most `k` negated atoms.
Program bounded_neg_subprogram(const Program& p, std::size_t k);

}  // namespace stablek
