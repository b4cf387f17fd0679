// SPDX-License-Identifier: MIT
#include "stablek/lsm.hpp"

#include "stablek/least_model.hpp"

#include <stdexcept>

namespace stablek {

LsmAnswer solve_lsm(const Program& p, std::size_t k) {
  LsmAnswer answer;
  answer.stats.rules = p.size();
  const std::size_t threshold = p.size() > k ? p.size() - k : 0;

  // Q^k of the star transform, indexed straight from p
  AtomSet negated;
  const auto index = DerivationIndex::filtered(p, p.heads(), k, negated);
  answer.stats.bounded_rules = index.rule_count();
  answer.stats.bounded_negated = negated.size();

  if (negated.size() > k + k * k) {
    answer.stats.early_exit = true;
    return answer;
  }

  for_each_subset(negated.members(), p.universe(), negated.size(), [&](const AtomSet& guess) {
    ++answer.stats.subsets_tried;
    auto model = index.stable_from_guess(negated, guess);
    if (!model || model->size() < threshold) return false;
    answer.witness = std::move(*model);
    return true;
  });

  if (answer.witness) {
    if (!is_stable(p, *answer.witness) || answer.witness->size() < threshold) {
      throw std::logic_error("solve_lsm produced a witness that is not a large stable model");
    }
    answer.yes = true;
  }
  return answer;
}

}  // namespace stablek
