// SPDX-License-Identifier: MIT
#include "stablek/ssm.hpp"

#include "stablek/error.hpp"
#include "stablek/least_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace stablek {

namespace {

bool blocked_by(const Rule& r, const AtomSet& s) {
  return std::any_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return s.contains(a); });
}

bool body_within(const Rule& r, const AtomSet& s) {
  return std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return s.contains(a); });
}

void check_base_cap(const AtomSet& base, std::size_t cap, const char* what) {
  if (base.size() > cap) {
    throw CapExceeded(std::string(what) + " refuses a base of " + std::to_string(base.size()) +
                      " atoms (cap " + std::to_string(cap) + ")");
  }
}

AtomSet least_model_of(const std::vector<Rule>& rules, std::size_t universe) {
  std::vector<char> active(rules.size(), 1);
  return DerivationIndex(rules, universe).least_model(active);
}

}  // namespace

Program restrict_to_base(const Program& p, const AtomSet& base) {
  std::vector<Rule> out;
  for (const auto& r : p.rules()) {
    if (!blocked_by(r, base) && body_within(r, base)) out.push_back(r);
  }
  return p.with_rules(std::move(out));
}

OneStepRules one_step_rules(const Program& p, const AtomSet& base) {
  std::vector<Rule> out;
  AtomSet forbidden(p.universe());
  for (const auto& r : p.rules()) {
    if (blocked_by(r, base) || base.contains(r.head)) continue;
    std::size_t outside = 0;
    AtomId last = 0;
    for (auto a : r.pos) {
      if (!base.contains(a)) {
        ++outside;
        last = a;
      }
    }
    if (outside != 1) continue;
    forbidden.insert(last);
    out.push_back(r);
  }
  return {p.with_rules(std::move(out)), std::move(forbidden)};
}

std::uint64_t horn_rule_index(const AtomSet& base, const Rule& horn_rule) {
  const auto members = base.members();
  if (members.size() > 63) throw CapExceeded("Horn rule index needs a base of at most 63 atoms");
  auto pos_of = [&](AtomId a) -> std::size_t {
    auto it = std::lower_bound(members.begin(), members.end(), a);
    if (it == members.end() || *it != a) {
      throw std::invalid_argument("Horn rule mentions an atom outside the base");
    }
    return static_cast<std::size_t>(it - members.begin());
  };
  if (!horn_rule.is_horn() || !horn_rule.is_proper()) {
    throw std::invalid_argument("not a proper Horn rule");
  }
  const std::size_t head = pos_of(horn_rule.head);
  std::uint64_t mask = 0;
  for (auto a : horn_rule.pos) {
    std::size_t bit = pos_of(a);
    if (bit > head) --bit;  // the head's slot is skipped
    mask |= std::uint64_t{1} << bit;
  }
  const std::size_t width = members.size() - 1;
  return (static_cast<std::uint64_t>(head) << width) | mask;
}

std::vector<Rule> horn_rules_over(const AtomSet& base, std::size_t cap) {
  check_base_cap(base, cap, "horn_rules_over");
  const auto members = base.members();
  std::vector<Rule> out;
  if (members.empty()) return out;
  const std::size_t width = members.size() - 1;
  for (std::size_t h = 0; h < members.size(); ++h) {
    std::vector<AtomId> others;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i != h) others.push_back(members[i]);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << width); ++mask) {
      std::vector<AtomId> body;
      for (std::size_t b = 0; b < width; ++b) {
        if (mask & (std::uint64_t{1} << b)) body.push_back(others[b]);
      }
      out.emplace_back(members[h], std::move(body), std::vector<AtomId>{});
    }
  }
  return out;
}

std::vector<std::vector<Rule>> base_programs(const AtomSet& base, std::size_t cap) {
  check_base_cap(base, cap, "base_programs");
  const auto rules = horn_rules_over(base, cap);
  std::vector<std::vector<Rule>> out;
  const std::uint64_t count = std::uint64_t{1} << rules.size();
  for (std::uint64_t subset = 0; subset < count; ++subset) {
    std::vector<Rule> q;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (subset & (std::uint64_t{1} << i)) q.push_back(rules[i]);
    }
    if (least_model_of(q, base.universe()) == base) out.push_back(std::move(q));
  }
  return out;
}

bool FghTables::h(std::uint64_t horn_index, AtomId a) const {
  auto it = h_one.find(horn_index);
  return it != h_one.end() && it->second.contains(a);
}

FghTables compute_tables(const Program& base_program, const AtomSet& base) {
  const auto universe = base_program.universe();
  FghTables t;
  t.base = base;
  t.domain = base_program.atoms() - base;
  t.f_one = AtomSet(universe);
  t.g.assign(universe, 0);

  // F: count, for each atom, how many of the sets {h(s)} ∪ neg(s) with
  // h(s) outside A contain it; F(a) = 0 iff a is in all of them.
  std::vector<std::size_t> member_count(universe, 0);
  std::size_t family_size = 0;
  // H: per Horn part, the number of rules and per-atom negation counts.
  struct Group {
    std::size_t rules = 0;
    std::vector<std::size_t> negated_count;
  };
  std::map<std::uint64_t, Group> groups;

  for (const auto& s : base_program.rules()) {
    if (blocked_by(s, base) || !body_within(s, base)) {
      throw std::invalid_argument("compute_tables expects an A-program");
    }
    const bool negates_head = std::binary_search(s.neg.begin(), s.neg.end(), s.head);
    if (!base.contains(s.head)) {
      ++family_size;
      ++member_count[s.head];
      for (auto b : s.neg) {
        if (b != s.head) ++member_count[b];
      }
    } else if (!std::binary_search(s.pos.begin(), s.pos.end(), s.head)) {
      // a rule whose head is in its own body has no Horn part in R(A)
      auto& group = groups[horn_rule_index(base, s.horn())];
      if (group.negated_count.empty()) group.negated_count.assign(universe, 0);
      ++group.rules;
      for (auto b : s.neg) ++group.negated_count[b];
    }
    if (!negates_head) ++t.g[s.head];
  }

  t.domain.for_each([&](AtomId a) {
    if (member_count[a] != family_size) t.f_one.insert(a);
  });
  for (AtomId a = 0; a < universe; ++a) {
    if (!t.domain.contains(a)) t.g[a] = 0;
  }
  for (auto& [index, group] : groups) {
    AtomSet row(universe);
    t.domain.for_each([&](AtomId a) {
      if (group.negated_count[a] != group.rules) row.insert(a);
    });
    t.h_one.emplace(index, std::move(row));
  }
  return t;
}

bool a_based_exists(const Program& base_program, const AtomSet& base, AtomId a,
                    const FghTables& tables, SsmMode mode) {
  if (!(base_program.atoms() - base).contains(a)) {
    throw std::invalid_argument("candidate atom must belong to At(P(A)) \\ A");
  }
  if (mode == SsmMode::literal) return a_based_exists(base_program, base, a, tables, base_programs(base));
  if (tables.f(a) || tables.g_of(a) == 0) return false;

  // LM of all rules r with H(r, a) = 1
  const auto members = base.members();
  const std::size_t width = members.empty() ? 0 : members.size() - 1;
  std::vector<Rule> usable;
  for (const auto& [index, row] : tables.h_one) {
    if (!row.contains(a)) continue;
    const auto head = members[static_cast<std::size_t>(index >> width)];
    std::vector<AtomId> body;
    std::size_t slot = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i] == head) continue;
      if (index & (std::uint64_t{1} << slot)) body.push_back(members[i]);
      ++slot;
    }
    usable.emplace_back(head, std::move(body), std::vector<AtomId>{});
  }
  return least_model_of(usable, base.universe()) == base;
}

bool a_based_exists(const Program& base_program, const AtomSet& base, AtomId a,
                    const FghTables& tables, const std::vector<std::vector<Rule>>& family) {
  if (!(base_program.atoms() - base).contains(a)) {
    throw std::invalid_argument("candidate atom must belong to At(P(A)) \\ A");
  }
  if (tables.f(a) || tables.g_of(a) == 0) return false;
  return std::any_of(family.begin(), family.end(), [&](const std::vector<Rule>& q) {
    return std::all_of(q.begin(), q.end(), [&](const Rule& r) { return tables.h(r, a); });
  });
}

SsmAnswer solve_ssm(const Program& p, std::size_t k, const SsmOptions& options) {
  SsmAnswer answer;
  const AtomSet empty = p.empty_set();
  if (is_stable(p, empty)) {
    answer.yes = true;
    answer.witness = empty;
    return answer;
  }
  if (k == 0) return answer;

  const Program proper = proper_filter(p);
  const AtomSet& pool = options.prune_to_heads ? proper.heads() : proper.atoms();

  for_each_subset(pool.members(), p.universe(), k - 1, [&](const AtomSet& base) {
    ++answer.bases_examined;
    const Program base_program = restrict_to_base(proper, base);
    const AtomSet forbidden = one_step_rules(proper, base).forbidden;
    const FghTables tables = compute_tables(base_program, base);
    const AtomSet candidates = base_program.atoms() - base - forbidden;
    std::vector<std::vector<Rule>> family;
    if (options.mode == SsmMode::literal) family = base_programs(base);
    bool found = false;
    candidates.for_each([&](AtomId a) {
      if (found) return;
      const bool hit = options.mode == SsmMode::literal
                           ? a_based_exists(base_program, base, a, tables, family)
                           : a_based_exists(base_program, base, a, tables, SsmMode::optimized);
      if (hit) {
        AtomSet m = base;
        m.insert(a);
        answer.witness = std::move(m);
        found = true;
      }
    });
    return found;
  });

  if (answer.witness) {
    if (!is_stable(p, *answer.witness) || answer.witness->size() > k) {
      throw std::logic_error("solve_ssm produced a witness that is not a small stable model");
    }
    answer.yes = true;
  }
  return answer;
}

}  // namespace stablek
