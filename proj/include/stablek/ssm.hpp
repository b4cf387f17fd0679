// SPDX-License-Identifier: MIT
#pragma once

#include "stablek/program.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace stablek {

/// P(A): rules not blocked by A whose positive body lies inside A.
Program restrict_to_base(const Program& p, const AtomSet& base);

struct OneStepRules {
  Program rules;      // P'(A)
  AtomSet forbidden;  // the single positive body atom outside A of each rule
};

/// Rules not blocked by A, with head outside A and exactly one positive body
/// atom outside A.
OneStepRules one_step_rules(const Program& p, const AtomSet& base);

/// Dense index of a proper Horn rule over `base` in the canonical order of
/// `horn_rules_over`: heads in id order, and for each head the bodies over
/// the remaining base atoms in increasing bitmask order.
std::uint64_t horn_rule_index(const AtomSet& base, const Rule& horn_rule);

/// R(A): every proper Horn rule with head in A and body inside A minus the
/// head, |A| * 2^(|A|-1) rules in canonical order. Throws CapExceeded if
/// |A| > cap.
std::vector<Rule> horn_rules_over(const AtomSet& base, std::size_t cap = 4);

/// The family of subsets Q of R(A) with LM(Q) = A, each given as a list of
/// rules. Doubly exponential in |A|; throws CapExceeded if |A| > cap.
std::vector<std::vector<Rule>> base_programs(const AtomSet& base, std::size_t cap = 3);

/// The F, G and H tables of an A-program, defined for the atoms of the
/// program outside A.
///
/// F(a) = 1 iff some rule has head outside A ∪ {a} and does not negate a.
/// G(a) counts rules with head a that do not negate a.
/// H(r, a) = 1 iff some rule with Horn part r does not negate a.
struct FghTables {
  AtomSet base;
  AtomSet domain;  // At(P(A)) \ A
  AtomSet f_one;
  std::vector<std::size_t> g;  // indexed by atom id; zero outside the domain
  /// Horn rule index -> atoms with H = 1. Rows absent here are all zero.
  std::map<std::uint64_t, AtomSet> h_one;

  bool f(AtomId a) const { return f_one.contains(a); }
  std::size_t g_of(AtomId a) const { return g.at(a); }
  bool h(std::uint64_t horn_index, AtomId a) const;
  bool h(const Rule& horn_rule, AtomId a) const { return h(horn_rule_index(base, horn_rule), a); }
};

/// Builds the tables with membership counters: F from the intersection of
/// the sets {h(s)} ∪ neg(s) over rules with head outside A, G by one scan,
/// H by grouping rules on their Horn part and intersecting negative bodies.
FghTables compute_tables(const Program& base_program, const AtomSet& base);

enum class SsmMode {
  literal,    // scan base_programs(A) for a program whose rules all have H = 1
  optimized,  // test LM({r in R(A) : H(r, a) = 1}) = A directly
};

/// Whether A ∪ {a} is an A-based stable model of the A-program, decided from
/// the tables alone.
bool a_based_exists(const Program& base_program, const AtomSet& base, AtomId a,
                    const FghTables& tables, SsmMode mode);

/// Literal-mode check against a precomputed `base_programs(A)`.
bool a_based_exists(const Program& base_program, const AtomSet& base, AtomId a,
                    const FghTables& tables, const std::vector<std::vector<Rule>>& family);

struct SsmOptions {
  SsmMode mode = SsmMode::optimized;
  /// Only enumerate bases inside h(P); stable models never leave h(P).
  bool prune_to_heads = true;
};

struct SsmAnswer {
  bool yes = false;
  std::optional<AtomSet> witness;
  std::size_t bases_examined = 0;
};

/// Decides whether `p` has a stable model with at most k atoms.
///
/// Tests the empty model first, then drops improper rules and, for every base
/// A of size at most k - 1, looks for an A-based stable model A ∪ {a}.
/// Bases are visited in size-lexicographic order and candidates a in id
/// order; the first hit is re-checked against `p` and returned.
SsmAnswer solve_ssm(const Program& p, std::size_t k, const SsmOptions& options = {});

}  // namespace stablek
