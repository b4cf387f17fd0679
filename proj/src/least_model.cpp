// SPDX-License-Identifier: MIT
#include "stablek/least_model.hpp"

#include <stdexcept>

namespace stablek {

DerivationIndex::DerivationIndex(std::size_t universe, std::size_t rules)
    : universe_(universe), watch_begin_(universe + 1, 0) {
  head_.reserve(rules);
  body_size_.reserve(rules);
  neg_begin_.reserve(rules + 1);
  neg_begin_.push_back(0);
}

void DerivationIndex::add_rule(AtomId head, std::size_t body_size) {
  if (head >= universe_) throw std::invalid_argument("rule head outside the universe");
  head_.push_back(head);
  body_size_.push_back(static_cast<std::uint32_t>(body_size));
  neg_begin_.push_back(static_cast<std::uint32_t>(neg_atoms_.size()));
}

// origin[i] is the source rule of indexed rule i.
void DerivationIndex::finish_watchers(std::span<const Rule> rules, std::span<const std::uint32_t> origin) {
  for (auto o : origin) {
    for (auto a : rules[o].pos) {
      if (a >= universe_) throw std::invalid_argument("body atom outside the universe");
      ++watch_begin_[a + 1];
    }
  }
  for (std::size_t a = 0; a < universe_; ++a) watch_begin_[a + 1] += watch_begin_[a];
  watch_rules_.resize(watch_begin_[universe_]);
  std::vector<std::uint32_t> fill(watch_begin_.begin(), watch_begin_.end() - 1);
  for (std::uint32_t r = 0; r < origin.size(); ++r) {
    for (auto a : rules[origin[r]].pos) watch_rules_[fill[a]++] = r;
  }
}

DerivationIndex::DerivationIndex(std::span<const Rule> rules, std::size_t universe)
    : DerivationIndex(universe, rules.size()) {
  std::vector<std::uint32_t> origin(rules.size());
  for (std::uint32_t r = 0; r < rules.size(); ++r) {
    neg_atoms_.insert(neg_atoms_.end(), rules[r].neg.begin(), rules[r].neg.end());
    add_rule(rules[r].head, rules[r].pos.size());
    origin[r] = r;
  }
  finish_watchers(rules, origin);
}

DerivationIndex DerivationIndex::filtered(const Program& p, const AtomSet& kept_negations,
                                          std::size_t max_negated, AtomSet& negated) {
  DerivationIndex index(p.universe(), p.size());
  negated = AtomSet(p.universe());
  std::vector<std::uint32_t> origin;
  origin.reserve(p.size());
  const auto& rules = p.rules();
  for (std::uint32_t r = 0; r < rules.size(); ++r) {
    const auto mark = index.neg_atoms_.size();
    for (auto a : rules[r].neg) {
      if (kept_negations.contains(a)) index.neg_atoms_.push_back(a);
    }
    if (index.neg_atoms_.size() - mark > max_negated) {
      index.neg_atoms_.resize(mark);
      continue;
    }
    for (auto n = mark; n < index.neg_atoms_.size(); ++n) negated.insert(index.neg_atoms_[n]);
    index.add_rule(rules[r].head, rules[r].pos.size());
    origin.push_back(r);
  }
  index.finish_watchers(rules, origin);
  return index;
}

AtomSet DerivationIndex::propagate(std::span<const char> active,
                                   std::vector<unsigned>* stages) const {
  if (active.size() != head_.size()) throw std::invalid_argument("activation size mismatch");
  AtomSet model(universe_);
  std::vector<std::uint32_t> missing(body_size_);
  std::vector<AtomId> queue;
  queue.reserve(universe_);

  auto derive = [&](std::uint32_t r, unsigned stage) {
    const AtomId h = head_[r];
    if (model.contains(h)) return;
    model.insert(h);
    queue.push_back(h);
    if (stages) (*stages)[h] = stage;
  };

  for (std::uint32_t r = 0; r < head_.size(); ++r) {
    if (active[r] && missing[r] == 0) derive(r, 1);
  }
  // FIFO: atoms leave the queue in nondecreasing stage order.
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const AtomId a = queue[q];
    const unsigned next = stages ? (*stages)[a] + 1 : 0;
    for (auto w = watch_begin_[a]; w < watch_begin_[a + 1]; ++w) {
      const auto r = watch_rules_[w];
      if (--missing[r] == 0 && active[r]) derive(r, next);
    }
  }
  return model;
}

AtomSet DerivationIndex::least_model(std::span<const char> active) const {
  return propagate(active, nullptr);
}

std::vector<char> DerivationIndex::activation(const AtomSet& m) const {
  std::vector<char> active(head_.size(), 1);
  for (std::size_t r = 0; r < head_.size(); ++r) {
    for (auto n = neg_begin_[r]; n < neg_begin_[r + 1]; ++n) {
      if (m.contains(neg_atoms_[n])) {
        active[r] = 0;
        break;
      }
    }
  }
  return active;
}

AtomSet DerivationIndex::least_model_of_reduct(const AtomSet& m) const {
  return propagate(activation(m), nullptr);
}

std::vector<unsigned> DerivationIndex::derivation_stages(const AtomSet& m) const {
  std::vector<unsigned> stages(universe_, 0);
  propagate(activation(m), &stages);
  return stages;
}

std::optional<AtomSet> DerivationIndex::stable_from_guess(const AtomSet& negated,
                                                          const AtomSet& guess) const {
  AtomSet model = least_model_of_reduct(guess);
  if ((model & negated) == guess) return model;
  return std::nullopt;
}

}  // namespace stablek
