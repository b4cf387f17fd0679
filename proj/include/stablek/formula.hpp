// SPDX-License-Identifier: MIT
#pragma once

#include "stablek/atom_set.hpp"
#include "stablek/atom_table.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace stablek {

/// Boolean formula over atom ids in negation normal form:
/// conjunctions, disjunctions, (possibly negated) literals and constants.
///
/// The empty conjunction is true and the empty disjunction is false.
struct Formula {
  enum class Kind : std::uint8_t { conj, disj, lit, constant };

  Kind kind = Kind::constant;
  bool flag = true;  // negation for `lit`, value for `constant`
  AtomId atom = 0;
  std::vector<Formula> args;

  static Formula all_of(std::vector<Formula> args) { return {Kind::conj, false, 0, std::move(args)}; }
  static Formula any_of(std::vector<Formula> args) { return {Kind::disj, false, 0, std::move(args)}; }
  static Formula literal(AtomId a, bool negated = false) { return {Kind::lit, negated, a, {}}; }
  static Formula constant(bool value) { return {Kind::constant, value, 0, {}}; }

  bool is_negated() const noexcept { return kind == Kind::lit && flag; }

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Truth assignment: the set of atoms assigned true.
using Assignment = AtomSet;

bool evaluate(const Formula& f, const Assignment& a);

/// The De Morgan dual, still in negation normal form.
Formula negate(const Formula& f);

/// Constant folding: drops neutral constants and collapses absorbing ones.
Formula simplify(const Formula& f);

/// Number of alternating and/or layers above the literals: a CNF gives 2,
/// a product of sums of products gives 3. A connective whose argument is a
/// connective of the same kind raises StructureError.
int normalization_depth(const Formula& f);

enum class WeightMode { exact, at_most };

struct WsOptions {
  std::size_t atom_cap = 24;
};

/// Exhaustive weighted satisfiability over atoms `0 .. atom_count-1`.
///
/// Subsets are tried by increasing weight and lexicographically within a
/// weight, so the returned witness is the first one in that order. Throws
/// CapExceeded if `atom_count` exceeds the cap or 64.
std::optional<Assignment> ws_exists(const Formula& f, std::size_t atom_count, std::size_t k,
                                    WeightMode mode, const WsOptions& options = {});

/// `{"op":"and"|"or","args":[...]}`, `{"lit":name,"neg":bool}`, `{"const":bool}`.
nlohmann::json to_json(const Formula& f, const AtomTable& atoms);
/// Interns literal names into `atoms`. Throws ParseError on malformed input.
Formula formula_from_json(const nlohmann::json& j, AtomTable& atoms);

/// Names of the true atoms, sorted by name.
nlohmann::json assignment_to_json(const Assignment& a, const AtomTable& atoms);

/// Every atom id mentioned by the formula.
AtomSet atoms_of(const Formula& f, std::size_t universe);

}  // namespace stablek
