// SPDX-License-Identifier: MIT
#pragma once

#include "stablek/program.hpp"

#include <optional>

namespace stablek {

struct LsmStats {
  std::size_t rules = 0;             // |P| after duplicate removal
  std::size_t bounded_rules = 0;     // rules of P kept, before collapsing duplicates
  std::size_t bounded_negated = 0;   // atoms negated in the bounded program
  std::size_t subsets_tried = 0;
  bool early_exit = false;           // refused because too many atoms are negated
};

struct LsmAnswer {
  bool yes = false;
  std::optional<AtomSet> witness;
  LsmStats stats;
};

/// Decides whether `p` has a stable model with at least |P| - k atoms
/// (clamped at zero).
///
/// Negations of atoms that head no rule are dropped, rules with more than
/// k negated atoms are discarded, and if more than k + k^2 atoms remain
/// negated the answer is no. Otherwise every subset of the negated atoms is
/// tried as the true part of a candidate model, in size-lexicographic order,
/// so the run time is O(2^(k+k^2) * size(P)). A witness is re-checked
/// against the original program before it is returned.
LsmAnswer solve_lsm(const Program& p, std::size_t k);

}  // namespace stablek
