// SPDX-License-Identifier: MIT
#pragma once

#include "stablek/program.hpp"

#include <optional>
#include <vector>

namespace stablek {

struct OracleOptions {
  /// Largest head set the exhaustive search accepts.
  std::size_t head_cap = 20;
};

/// Every stable model of `p`, found by testing each subset of h(P), sorted
/// by size then lexicographically. Throws CapExceeded when |h(P)| exceeds
/// the cap.
std::vector<AtomSet> enumerate_stable_models(const Program& p, const OracleOptions& options = {});

/// Same list, reached by guessing the true part of Neg(P) instead.
std::vector<AtomSet> enumerate_stable_models_by_negation(const Program& p,
                                                         const OracleOptions& options = {});

std::optional<std::size_t> min_stable_size(const Program& p, const OracleOptions& options = {});
std::optional<std::size_t> max_stable_size(const Program& p, const OracleOptions& options = {});

}  // namespace stablek
