// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stablek/error.hpp"
#include "stablek/least_model.hpp"
#include "stablek/program.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

using namespace stablek;

namespace {

AtomSet set(const Program& p, std::vector<std::string> names) { return p.set_of(names); }

std::vector<std::string> texts(const Program& p) {
  std::vector<std::string> out;
  for (const auto& r : p.rules()) out.push_back(format_rule(r, p.table()));
  return out;
}

std::vector<std::string> texts(const HornProgram& h) { return texts(h.program()); }

}  // namespace

TEST_CASE("parse_program reads rules, facts and comments") {
  const auto p = parse_program("a :- not b.\nb :- not a.  % the even loop\n");
  CHECK(p.size() == 2);
  CHECK(p.names_of(p.atoms()) == std::vector<std::string>{"a", "b"});
  CHECK(p.names_of(p.negated()) == std::vector<std::string>{"a", "b"});
  CHECK(p.names_of(p.heads()) == std::vector<std::string>{"a", "b"});
  CHECK(p.occurrences() == 4);

  const auto q = parse_program("a :- b, b, not c.");
  REQUIRE(q.size() == 1);
  CHECK(q.rules()[0].pos.size() == 1);
  CHECK(q.rules()[0].neg.size() == 1);
  CHECK(texts(q) == std::vector<std::string>{"a :- b, not c."});

  const auto facts = parse_program("x. y :- x. x.");
  CHECK(facts.size() == 2);
  CHECK(to_text(facts) == "x.\ny :- x.\n");
}

TEST_CASE("parse_program rejects malformed input with positions") {
  auto fails_at = [](const char* text, std::size_t line, std::size_t column) {
    try {
      parse_program(text);
      FAIL("expected a parse error for " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  fails_at("a :- .", 1, 6);
  fails_at(":- a.", 1, 1);
  fails_at("a :- b\nc.", 2, 1);
  fails_at("a", 1, 2);
  fails_at("a :- not .", 1, 10);
  fails_at("1a.", 1, 1);
  fails_at("ok.\nc__x.", 2, 1);
  fails_at("a :- d__q__1.", 1, 6);
  fails_at("a :- not __f.", 1, 10);
  fails_at("cm__a :- b.", 1, 1);
  CHECK_NOTHROW(parse_program("c__x :- __f.", ParseOptions{.allow_reserved = true}));
  CHECK_NOTHROW(parse_program("cx. c_x. dd__x."));
}

TEST_CASE("reduct") {
  const auto loop = parse_program("a :- not b. b :- not a.");
  CHECK(texts(reduct(loop, set(loop, {"a"}))) == std::vector<std::string>{"a."});

  const auto odd = parse_program("p :- not p.");
  CHECK(texts(reduct(odd, odd.empty_set())) == std::vector<std::string>{"p."});

  const auto p = parse_program("a :- b, not c. b. c :- c.");
  CHECK(texts(reduct(p, set(p, {"c"}))) == std::vector<std::string>{"b.", "c :- c."});

  // rules that differ only in their negative body collapse
  const auto twin = parse_program("a :- not b. a :- not c. b :- b. c :- c.");
  CHECK(reduct(twin, twin.empty_set()).size() == 3);
}

TEST_CASE("least_model") {
  auto lm = [](const char* text) {
    const auto p = parse_program(text);
    return p.names_of(least_model(HornProgram(p)));
  };
  CHECK(lm("a. b :- a. c :- b, d.") == std::vector<std::string>{"a", "b"});
  CHECK(lm("").empty());
  CHECK(lm("x :- y. y :- x.").empty());
  CHECK(lm("d :- c. c :- b. b :- a. a.") == std::vector<std::string>{"d", "c", "b", "a"});
  CHECK_THROWS_AS(HornProgram(parse_program("a :- not b.")), std::invalid_argument);
}

TEST_CASE("derivation stages follow the rounds of T_P") {
  const auto p = parse_program("a. b :- a. c :- a, b. d :- c, a. e :- not a.");
  const auto stages = DerivationIndex(p).derivation_stages(p.set_of({"a", "b", "c", "d"}));
  auto stage = [&](const char* n) { return stages[*p.table().find(n)]; };
  CHECK(stage("a") == 1);
  CHECK(stage("b") == 2);
  CHECK(stage("c") == 3);
  CHECK(stage("d") == 4);
  CHECK(stage("e") == 0);
}

TEST_CASE("is_stable") {
  const auto loop = parse_program("a :- not b. b :- not a.");
  // brute force over all four subsets of {a, b}
  CHECK(is_stable(loop, set(loop, {"a"})));
  CHECK(is_stable(loop, set(loop, {"b"})));
  CHECK_FALSE(is_stable(loop, loop.empty_set()));
  CHECK_FALSE(is_stable(loop, set(loop, {"a", "b"})));

  const auto odd = parse_program("p :- not p.");
  CHECK_FALSE(is_stable(odd, set(odd, {"p"})));
  CHECK_FALSE(is_stable(odd, odd.empty_set()));

  const auto fact = parse_program("a.");
  CHECK(is_stable(fact, set(fact, {"a"})));

  // a set from another table is rejected outright
  CHECK_THROWS_AS(is_stable(fact, AtomSet(5)), std::invalid_argument);
  // atoms in the table but outside At(P) make the candidate unstable
  const auto sub = loop.with_rules({loop.rules()[0]});
  CHECK_FALSE(is_stable(sub, set(loop, {"a", "b"})));
}

TEST_CASE("generating_rules") {
  const auto loop = parse_program("a :- not b. b :- not a.");
  CHECK(generating_rules(loop, set(loop, {"a"})) == std::vector<Rule>{loop.rules()[0]});
  const auto fact = parse_program("a.");
  CHECK(generating_rules(fact, fact.empty_set()).size() == 1);
  const auto chain = parse_program("a :- b.");
  CHECK(generating_rules(chain, set(chain, {"a"})).empty());
}

TEST_CASE("proper_filter") {
  CHECK(texts(proper_filter(parse_program("a :- a. b :- not c."))) == std::vector<std::string>{"b :- not c."});
  CHECK(proper_filter(parse_program("a :- b, not b.")).size() == 0);
  CHECK(texts(proper_filter(parse_program("a :- b, not c."))) == std::vector<std::string>{"a :- b, not c."});
}

TEST_CASE("star_transform") {
  CHECK(texts(star_transform(parse_program("a :- not b."))) == std::vector<std::string>{"a."});
  CHECK(texts(star_transform(parse_program("a :- not b. b :- not a."))) ==
        std::vector<std::string>{"a :- not b.", "b :- not a."});
  CHECK(texts(star_transform(parse_program("a :- c, not b. b."))) ==
        std::vector<std::string>{"a :- c, not b.", "b."});
  // two rules that only differ in dropped literals become one
  CHECK(star_transform(parse_program("a :- not b. a :- not c.")).size() == 1);
}

TEST_CASE("bounded_neg_subprogram") {
  const auto p = parse_program("a :- not b, not c. d.");
  CHECK(texts(bounded_neg_subprogram(p, 1)) == std::vector<std::string>{"d."});
  CHECK(bounded_neg_subprogram(p, 2).size() == 2);
  CHECK(bounded_neg_subprogram(p, 7).size() == 2);
  CHECK(bounded_neg_subprogram(parse_program("a :- not b."), 0).size() == 0);
}

TEST_CASE("property: least model is the least model, checked exhaustively") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = gen::random_program(rng, 8, 10, 3);
    const auto h = reduct(p, p.empty_set());
    const auto lm = least_model(h);
    const auto ref = naive::least_model(naive::from(h.program()));
    REQUIRE(naive::names(p, lm) == ref);

    const auto universe = p.atoms().members();
    for (std::size_t mask = 0; mask < (std::size_t{1} << universe.size()); ++mask) {
      AtomSet m(p.universe());
      for (std::size_t i = 0; i < universe.size(); ++i) {
        if (mask & (std::size_t{1} << i)) m.insert(universe[i]);
      }
      bool is_model = true;
      for (const auto& r : h.rules()) {
        bool body = std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return m.contains(a); });
        if (body && !m.contains(r.head)) is_model = false;
      }
      if (m == lm) CHECK(is_model);
      if (is_model) CHECK(lm.is_subset_of(m));
    }
  }
}

TEST_CASE("property: stability matches the definition and the program transforms") {
  gen::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = gen::random_program(rng, 5, 7, 3);
    const auto rules = naive::from(p);
    const auto star = star_transform(p);
    const auto proper = proper_filter(p);
    const auto index = DerivationIndex(p);
    const auto universe = p.atoms().members();
    for (std::size_t mask = 0; mask < (std::size_t{1} << universe.size()); ++mask) {
      AtomSet m(p.universe());
      for (std::size_t i = 0; i < universe.size(); ++i) {
        if (mask & (std::size_t{1} << i)) m.insert(universe[i]);
      }
      const bool stable = is_stable(p, m);
      REQUIRE(stable == naive::is_stable(rules, naive::names(p, m)));
      CHECK(stable == is_stable(star, m));
      CHECK(stable == is_stable(proper, m));
      if (stable) {
        CHECK(m.is_subset_of(p.heads()));
        CHECK(is_stable(p.with_rules(generating_rules(p, m)), m));
      }
      // a model is determined by its negated part
      const AtomSet guess = m & p.negated();
      auto from_guess = index.stable_from_guess(p.negated(), guess);
      CHECK(stable == (from_guess && *from_guess == m));
    }
  }
}

TEST_CASE("property: the reduct is anti-monotone") {
  gen::Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = gen::random_program(rng, 6, 8, 3);
    AtomSet small(p.universe()), large(p.universe());
    p.atoms().for_each([&](AtomId a) {
      const auto roll = gen::pick(rng, 0, 2);
      if (roll >= 1) large.insert(a);
      if (roll == 2) small.insert(a);
    });
    const auto r_large = reduct(p, large).rules();
    const auto r_small = reduct(p, small).rules();
    for (const auto& r : r_large) {
      CHECK(std::find(r_small.begin(), r_small.end(), r) != r_small.end());
    }
  }
}

TEST_CASE("AtomSet size-lexicographic order") {
  CHECK(size_lex_less(AtomSet(4, {3}), AtomSet(4, {0, 1})));
  CHECK(size_lex_less(AtomSet(4, {0, 3}), AtomSet(4, {1, 2})));
  CHECK_FALSE(size_lex_less(AtomSet(4, {1, 2}), AtomSet(4, {1, 2})));
  std::vector<AtomSet> seen;
  for_each_subset({0, 1, 2}, 3, 3, [&](const AtomSet& s) {
    seen.push_back(s);
    return false;
  });
  REQUIRE(seen.size() == 8);
  CHECK(std::is_sorted(seen.begin(), seen.end(), size_lex_less));
}
