// SPDX-License-Identifier: MIT
#include "stablek/oracle.hpp"

#include "stablek/error.hpp"
#include "stablek/least_model.hpp"

#include <algorithm>

namespace stablek {

namespace {

void check_cap(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap) {
    throw CapExceeded(std::string("oracle refuses ") + std::to_string(size) + " " + what +
                      " (cap " + std::to_string(cap) + ")");
  }
}

}  // namespace

std::vector<AtomSet> enumerate_stable_models(const Program& p, const OracleOptions& options) {
  const auto heads = p.heads().members();
  check_cap(heads.size(), options.head_cap, "head atoms");
  const DerivationIndex index(p);
  std::vector<AtomSet> models;
  for_each_subset(heads, p.universe(), heads.size(), [&](const AtomSet& m) {
    if (index.least_model_of_reduct(m) == m) models.push_back(m);
    return false;
  });
  return models;
}

std::vector<AtomSet> enumerate_stable_models_by_negation(const Program& p,
                                                         const OracleOptions& options) {
  const auto negated = p.negated().members();
  check_cap(negated.size(), options.head_cap, "negated atoms");
  const DerivationIndex index(p);
  std::vector<AtomSet> models;
  for_each_subset(negated, p.universe(), negated.size(), [&](const AtomSet& guess) {
    if (auto m = index.stable_from_guess(p.negated(), guess)) models.push_back(std::move(*m));
    return false;
  });
  std::sort(models.begin(), models.end(), size_lex_less);
  return models;
}

std::optional<std::size_t> min_stable_size(const Program& p, const OracleOptions& options) {
  const auto models = enumerate_stable_models(p, options);
  if (models.empty()) return std::nullopt;
  return models.front().size();
}

std::optional<std::size_t> max_stable_size(const Program& p, const OracleOptions& options) {
  const auto models = enumerate_stable_models(p, options);
  if (models.empty()) return std::nullopt;
  return models.back().size();
}

}  // namespace stablek
