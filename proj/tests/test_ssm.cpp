// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stablek/error.hpp"
#include "stablek/oracle.hpp"
#include "stablek/ssm.hpp"
#include "support/generators.hpp"

using namespace stablek;

namespace {

std::vector<std::string> texts(const Program& p) {
  std::vector<std::string> out;
  for (const auto& r : p.rules()) out.push_back(format_rule(r, p.table()));
  return out;
}

bool negates(const Rule& r, AtomId a) { return std::binary_search(r.neg.begin(), r.neg.end(), a); }

// F, G and H straight from their definitions.
bool brute_f(const Program& pa, const AtomSet& base, AtomId a) {
  return std::any_of(pa.rules().begin(), pa.rules().end(), [&](const Rule& s) {
    return !base.contains(s.head) && s.head != a && !negates(s, a);
  });
}

std::size_t brute_g(const Program& pa, AtomId a) {
  return static_cast<std::size_t>(std::count_if(pa.rules().begin(), pa.rules().end(),
                                                [&](const Rule& s) { return s.head == a && !negates(s, a); }));
}

bool brute_h(const Program& pa, const Rule& r, AtomId a) {
  return std::any_of(pa.rules().begin(), pa.rules().end(),
                     [&](const Rule& s) { return s.horn() == r && !negates(s, a); });
}

}  // namespace

TEST_CASE("restrict_to_base") {
  const auto p = parse_program("a :- b, not c. b.");
  CHECK(restrict_to_base(p, p.set_of({"b"})).size() == 2);
  const auto q = parse_program("a :- b, not c.");
  CHECK(restrict_to_base(q, q.set_of({"c"})).size() == 0);
  const auto r = parse_program("a :- b, d.");
  CHECK(restrict_to_base(r, r.set_of({"b"})).size() == 0);
}

TEST_CASE("one_step_rules") {
  const auto p = parse_program("a :- b, c, not d.");
  const auto one = one_step_rules(p, p.set_of({"b"}));
  CHECK(one.rules.size() == 1);
  CHECK(p.names_of(one.forbidden) == std::vector<std::string>{"c"});

  const auto q = parse_program("a :- b.");
  const auto none = one_step_rules(q, q.set_of({"b"}));
  CHECK(none.rules.size() == 0);
  CHECK(none.forbidden.empty());

  const auto r = parse_program("b :- c.");
  const auto head_in = one_step_rules(r, r.set_of({"b"}));
  CHECK(head_in.rules.size() == 0);
  CHECK(head_in.forbidden.empty());
}

TEST_CASE("horn_rules_over") {
  const auto p = parse_program("x. y. z. w. v.");
  CHECK(horn_rules_over(p.empty_set()).empty());
  CHECK(texts(p.with_rules(horn_rules_over(p.set_of({"x"})))) == std::vector<std::string>{"x."});
  CHECK(texts(p.with_rules(horn_rules_over(p.set_of({"x", "y"})))) ==
        std::vector<std::string>{"x.", "x :- y.", "y.", "y :- x."});
  for (std::size_t n = 1; n <= 4; ++n) {
    AtomSet base(p.universe());
    for (AtomId a = 0; a < n; ++a) base.insert(a);
    const auto rules = horn_rules_over(base);
    REQUIRE(rules.size() == n * (std::size_t{1} << (n - 1)));
    for (std::size_t i = 0; i < rules.size(); ++i) CHECK(horn_rule_index(base, rules[i]) == i);
  }
  CHECK_THROWS_AS(horn_rules_over(p.atoms()), CapExceeded);
}

TEST_CASE("base_programs") {
  const auto p = parse_program("x. y. z. w.");
  const auto empty = base_programs(p.empty_set());
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());

  const auto single = base_programs(p.set_of({"x"}));
  REQUIRE(single.size() == 1);
  CHECK(texts(p.with_rules(single[0])) == std::vector<std::string>{"x."});

  const auto xy = p.set_of({"x", "y"});
  const auto family = base_programs(xy);
  const auto all = horn_rules_over(xy);  // x., x :- y., y., y :- x.
  auto has = [&](std::vector<Rule> q) { return std::find(family.begin(), family.end(), q) != family.end(); };
  CHECK(has({all[0], all[2]}));
  CHECK(has({all[0], all[3]}));
  CHECK_FALSE(has({all[1], all[3]}));
  // brute force over all 16 subsets
  std::size_t expected = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Rule> q;
    for (unsigned i = 0; i < 4; ++i) {
      if (mask & (1u << i)) q.push_back(all[i]);
    }
    if (least_model(HornProgram(p.with_rules(q))) == xy) ++expected;
  }
  CHECK(family.size() == expected);
  CHECK_THROWS_AS(base_programs(p.atoms()), CapExceeded);
}

TEST_CASE("compute_tables examples") {
  const auto loop = parse_program("a :- not b. b :- not a.");
  const auto t = compute_tables(loop, loop.empty_set());
  const AtomId a = *loop.table().find("a");
  CHECK_FALSE(t.f(a));
  CHECK(t.g_of(a) == 1);
  CHECK(t.h_one.empty());

  const auto p = parse_program("c :- x, not d.");
  const auto tp = compute_tables(p, p.set_of({"x"}));
  CHECK_FALSE(tp.f(*p.table().find("d")));

  ProgramBuilder b;
  b.atom("z");
  b.add_rule("c", {"x"});
  const auto q = std::move(b).build();
  // z is outside At(P(A)), so compute F for it by definition
  CHECK(brute_f(q, q.set_of({"x"}), *q.table().find("z")));

  CHECK_THROWS_AS(compute_tables(p, p.empty_set()), std::invalid_argument);
}

TEST_CASE("a_based_exists examples") {
  const auto loop = parse_program("a :- not b. b :- not a.");
  const auto t = compute_tables(loop, loop.empty_set());
  for (auto mode : {SsmMode::literal, SsmMode::optimized}) {
    CHECK(a_based_exists(loop, loop.empty_set(), *loop.table().find("a"), t, mode));
  }

  const auto odd = parse_program("p :- not p.");
  const auto to = compute_tables(odd, odd.empty_set());
  CHECK(to.g_of(0) == 0);
  for (auto mode : {SsmMode::literal, SsmMode::optimized}) {
    CHECK_FALSE(a_based_exists(odd, odd.empty_set(), 0, to, mode));
  }

  const auto p = parse_program("x. a :- x.");
  const auto base = p.set_of({"x"});
  const auto tp = compute_tables(p, base);
  for (auto mode : {SsmMode::literal, SsmMode::optimized}) {
    CHECK(a_based_exists(p, base, *p.table().find("a"), tp, mode));
    CHECK_THROWS_AS(a_based_exists(p, base, *p.table().find("x"), tp, mode), std::invalid_argument);
  }
}

TEST_CASE("solve_ssm examples") {
  const auto loop = parse_program("a :- not b. b :- not a.");
  const auto r = solve_ssm(loop, 1);
  REQUIRE(r.yes);
  CHECK(loop.names_of(*r.witness) == std::vector<std::string>{"a"});

  CHECK_FALSE(solve_ssm(parse_program("a."), 0).yes);

  const auto chain = parse_program("a. b :- a.");
  CHECK_FALSE(solve_ssm(chain, 1).yes);
  const auto two = solve_ssm(chain, 2);
  REQUIRE(two.yes);
  CHECK(chain.names_of(*two.witness) == std::vector<std::string>{"a", "b"});

  const auto empty_model = solve_ssm(parse_program("a :- b."), 0);
  CHECK(empty_model.yes);
  CHECK(empty_model.witness->empty());
  CHECK(empty_model.bases_examined == 0);
}

TEST_CASE("property: tables match their definitions") {
  gen::Rng rng(51);
  for (int trial = 0; trial < 400; ++trial) {
    AtomSet base;
    const auto pa = gen::random_base_program(rng, gen::pick(rng, 1, 7), gen::pick(rng, 0, 3), 8, base);
    REQUIRE(restrict_to_base(pa, base).size() == pa.size());
    const auto t = compute_tables(pa, base);
    CHECK(t.domain == pa.atoms() - base);
    const auto rules = horn_rules_over(base);
    t.domain.for_each([&](AtomId a) {
      CHECK(t.f(a) == brute_f(pa, base, a));
      CHECK(t.g_of(a) == brute_g(pa, a));
      for (const auto& r : rules) CHECK(t.h(r, a) == brute_h(pa, r, a));
    });
  }
}

TEST_CASE("property: literal and optimized modes agree") {
  gen::Rng rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    AtomSet base;
    const auto pa = gen::random_base_program(rng, gen::pick(rng, 2, 7), gen::pick(rng, 0, 3), 10, base);
    const auto t = compute_tables(pa, base);
    const auto family = base_programs(base);
    t.domain.for_each([&](AtomId a) {
      const bool optimized = a_based_exists(pa, base, a, t, SsmMode::optimized);
      CHECK(optimized == a_based_exists(pa, base, a, t, SsmMode::literal));
      CHECK(optimized == a_based_exists(pa, base, a, t, family));
    });
  }
}

TEST_CASE("property: every nonempty stable model of a proper program has a base") {
  gen::Rng rng(53);
  for (int trial = 0; trial < 400; ++trial) {
    const auto p = proper_filter(gen::random_program(rng, 6, 8, 3));
    for (const auto& m : enumerate_stable_models(p)) {
      if (m.empty()) continue;
      bool found = false;
      for_each_subset(m.members(), p.universe(), m.size() - 1, [&](const AtomSet& base) {
        if (base.size() != m.size() - 1) return false;
        found = m.is_subset_of(least_model(reduct(restrict_to_base(p, base), m)));
        return found;
      });
      CHECK(found);
    }
  }
}

TEST_CASE("property: solve_ssm agrees with the oracle in every configuration") {
  gen::Rng rng(54);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = gen::random_program(rng, 6, 8, 3);
    const auto min = min_stable_size(p);
    for (std::size_t k = 0; k <= 3; ++k) {
      const bool expected = min && *min <= k;
      const auto fast = solve_ssm(p, k);
      REQUIRE(fast.yes == expected);
      if (fast.yes) {
        CHECK(is_stable(p, *fast.witness));
        CHECK(fast.witness->size() <= k);
      }
      const auto unpruned = solve_ssm(p, k, SsmOptions{.mode = SsmMode::optimized, .prune_to_heads = false});
      CHECK(unpruned.yes == expected);
      CHECK(unpruned.bases_examined >= fast.bases_examined);
      const auto literal = solve_ssm(p, k, SsmOptions{.mode = SsmMode::literal});
      CHECK(literal.yes == expected);
      CHECK(literal.witness == fast.witness);
    }
  }
}
