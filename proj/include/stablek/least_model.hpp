// SPDX-License-Identifier: MIT
#pragma once

#include "stablek/atom_set.hpp"
#include "stablek/program.hpp"

#include <optional>
#include <span>
#include <vector>

namespace stablek {

/// Occurrence index over the positive bodies of a rule list.
///
/// Computes least models of sub-reducts without materializing them: a rule
/// takes part iff it is "active", and active rules contribute their Horn part.
/// Every query runs in time linear in the size of the indexed rules.
class DerivationIndex {
 public:
  DerivationIndex(std::span<const Rule> rules, std::size_t universe);
  explicit DerivationIndex(const Program& p) : DerivationIndex(p.rules(), p.universe()) {}

  /// Index of the rules of `p` after dropping every `not a` with a outside
  /// `kept_negations` and then every rule left with more than `max_negated`
  /// negated atoms, built without copying rules. `negated` receives the
  /// atoms still negated in the surviving rules.
  static DerivationIndex filtered(const Program& p, const AtomSet& kept_negations, std::size_t max_negated,
                                  AtomSet& negated);

  std::size_t rule_count() const noexcept { return head_.size(); }

  std::size_t universe() const noexcept { return universe_; }

  /// Least model of the Horn parts of the rules with `active[r] != 0`.
  AtomSet least_model(std::span<const char> active) const;

  /// LM(P^M): rule r is active iff its negative body avoids `m`.
  AtomSet least_model_of_reduct(const AtomSet& m) const;

  /// For each atom, the first iteration i >= 1 of T_{P^M} that derives it,
  /// or 0 if it is not in LM(P^M).
  std::vector<unsigned> derivation_stages(const AtomSet& m) const;

  /// The stable model determined by guessing exactly `guess` as the true
  /// atoms among `negated`: M = LM(P^guess), accepted iff M ∩ negated == guess.
  std::optional<AtomSet> stable_from_guess(const AtomSet& negated, const AtomSet& guess) const;

 private:
  DerivationIndex(std::size_t universe, std::size_t rules);
  void add_rule(AtomId head, std::size_t body_size);
  void finish_watchers(std::span<const Rule> rules, std::span<const std::uint32_t> origin);

  std::vector<char> activation(const AtomSet& m) const;
  AtomSet propagate(std::span<const char> active, std::vector<unsigned>* stages) const;

  std::size_t universe_;
  std::vector<AtomId> head_;
  std::vector<std::uint32_t> body_size_;
  // negative bodies: rule r owns neg_atoms_[neg_begin_[r] .. neg_begin_[r+1])
  std::vector<std::uint32_t> neg_begin_;
  std::vector<AtomId> neg_atoms_;
  // rules with atom a in their positive body: watch_rules_[watch_begin_[a] .. watch_begin_[a+1])
  std::vector<std::uint32_t> watch_begin_;
  std::vector<std::uint32_t> watch_rules_;
};

}  // namespace stablek
