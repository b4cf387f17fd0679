// SPDX-License-Identifier: MIT
#pragma once

#include "stablek/formula.hpp"
#include "stablek/program.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stablek {

/// An atom of the stage encoding of a program:
///   computed(q)        c(q)     "q is derived within k+1 rounds"
///   at_stage(q, i)     c(q,i)   "q is first derived in round i", 1 <= i <= k+1
///   before(q, i)       c-(q,i)  "q is derived before round i",   2 <= i <= k+1
///   weight(q, i)       d(q,i)   copy of c(q) that pads the weight, 1 <= i <= k^2+2k
struct EncodedAtom {
  enum class Kind : std::uint8_t { computed, at_stage, before, weight };
  Kind kind;
  AtomId source;
  std::size_t index = 0;

  friend bool operator==(const EncodedAtom&, const EncodedAtom&) = default;
};

/// Id layout of the encoding vocabulary: one block of k^2+4k+2 atoms per
/// atom of At(P), in id order; inside a block c(q), then c(q,1..k+1), then
/// c-(q,2..k+1), then d(q,1..k^2+2k).
class EncodingLayout {
 public:
  EncodingLayout(const Program& p, std::size_t k);

  std::size_t k() const noexcept { return k_; }
  std::size_t block_size() const noexcept { return k_ * k_ + 4 * k_ + 2; }
  std::size_t padding() const noexcept { return k_ * k_ + 2 * k_; }
  std::size_t atom_count() const noexcept { return sources_.size() * block_size(); }
  /// (k+1)(k^2+2k)
  std::size_t weight_bound() const noexcept { return (k_ + 1) * padding(); }
  const std::vector<AtomId>& sources() const noexcept { return sources_; }

  AtomId id(const EncodedAtom& e) const;
  EncodedAtom decode(AtomId id) const;

  AtomId computed(AtomId q) const { return id({EncodedAtom::Kind::computed, q, 0}); }
  AtomId at_stage(AtomId q, std::size_t i) const { return id({EncodedAtom::Kind::at_stage, q, i}); }
  AtomId before(AtomId q, std::size_t i) const { return id({EncodedAtom::Kind::before, q, i}); }
  AtomId weight(AtomId q, std::size_t i) const { return id({EncodedAtom::Kind::weight, q, i}); }

 private:
  std::size_t k_;
  std::vector<AtomId> sources_;
  std::vector<std::size_t> block_of_;  // source atom id -> block, or npos
};

/// `c__q`, `c__q__i`, `cm__q__i`, `d__q__i`.
std::string mangle(const EncodedAtom& e, const AtomTable& source_atoms);

/// A program encoded as a formula whose small models are its small stable
/// models.
struct ProgramEncoding {
  std::shared_ptr<const AtomTable> source_atoms;
  std::shared_ptr<const AtomTable> vocabulary;  // mangled names, ids follow the layout
  EncodingLayout layout;
  Formula formula;

  std::size_t atom_count() const { return layout.atom_count(); }
  std::size_t weight_bound() const { return layout.weight_bound(); }
};

/// T(P): the definitional equivalences for c-, c and c(q,i), each written as
/// a pair of implications, plus c(q) <-> d(q,i). Throws Error if two encoded
/// atoms would receive the same mangled name.
ProgramEncoding encode_T(const Program& p, std::size_t k);

/// T^c(P): the same theory as a product of sums of products of literals.
/// Every literal of a clause is wrapped in a one-element product, so the
/// formula is strictly 3-normalized.
ProgramEncoding encode_Tc(const Program& p, std::size_t k);

/// The model U_M ∪ {d(q,i) : q in M} of T(P) induced by a stable model M
/// with |M| <= k. Throws std::invalid_argument if M is not such a model.
Assignment build_witness(const ProgramEncoding& enc, const Program& p, const AtomSet& m);

/// M(U) = {q : c(q) in U}.
AtomSet decode_witness(const ProgramEncoding& enc, const Assignment& u);
/// Name-based variant; throws std::invalid_argument on names outside the vocabulary.
AtomSet decode_witness(const ProgramEncoding& enc, const std::vector<std::string>& true_atoms);

/// A CNF over named atoms.
struct Clause {
  std::vector<AtomId> pos;
  std::vector<AtomId> neg;
};

struct ClauseSet {
  std::shared_ptr<const AtomTable> atoms;  // x_1 .. x_r in first-occurrence order
  std::vector<Clause> clauses;
};

/// Reads DIMACS CNF. Variable v becomes atom `x<v>`; ids follow first
/// occurrence. Throws ParseError on malformed input or an empty clause.
ClauseSet parse_dimacs(std::string_view text);

/// The clause set as a 2-normalized formula over its own atom table.
Formula to_formula(const ClauseSet& c);

/// The program S ∪ P1 ∪ P2 whose stable models of size at most 2k encode the
/// nonempty models of `c` of size at most k:
///   S:  k copies of the choice "exactly one x_j(i)", x_j(i) named `xj__i`
///   P1: x_j :- x_j(i)
///   P2: one constraint `__f :- b.., not a.., not __f` per clause.
/// Throws std::invalid_argument if k == 0, a clause is empty, or a name collides.
Program encode_PC(const ClauseSet& c, std::size_t k);

}  // namespace stablek
