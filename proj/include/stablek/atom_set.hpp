// SPDX-License-Identifier: MIT
#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace stablek {

using AtomId = std::uint32_t;

/// A set of atoms, stored as a bitset over the dense ids of one atom table.
///
/// Every AtomSet has a fixed universe size; binary operations require equal
/// universes. Iteration and `members()` visit atoms in increasing id order.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(std::size_t universe) : bits_(universe) {}
  AtomSet(std::size_t universe, std::initializer_list<AtomId> atoms);
  AtomSet(std::size_t universe, const std::vector<AtomId>& atoms);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(AtomId a) const { return a < bits_.size() && bits_.test(a); }
  void insert(AtomId a) { bits_.set(a); }
  void erase(AtomId a) { bits_.reset(a); }
  void clear() { bits_.reset(); }

  bool is_subset_of(const AtomSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const AtomSet& other) const { return bits_.intersects(other.bits_); }

  AtomSet& operator|=(const AtomSet& o) { bits_ |= o.bits_; return *this; }
  AtomSet& operator&=(const AtomSet& o) { bits_ &= o.bits_; return *this; }
  AtomSet& operator-=(const AtomSet& o) { bits_ -= o.bits_; return *this; }

  friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }
  friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
  friend AtomSet operator-(AtomSet a, const AtomSet& b) { return a -= b; }
  friend bool operator==(const AtomSet& a, const AtomSet& b) { return a.bits_ == b.bits_; }

  std::vector<AtomId> members() const;

  /// Calls `fn(AtomId)` for each member in increasing id order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      fn(static_cast<AtomId>(i));
    }
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

/// Canonical enumeration order: by cardinality, then lexicographically on the
/// increasing member-id sequence.
bool size_lex_less(const AtomSet& a, const AtomSet& b);

/// Visits every subset of `pool` with at most `max_size` elements in
/// size-lexicographic order. `fn` returns true to stop early; the function
/// returns true iff it was stopped.
template <class Fn>
bool for_each_subset(const std::vector<AtomId>& pool, std::size_t universe, std::size_t max_size,
                     Fn&& fn) {
  const std::size_t n = pool.size();
  if (max_size > n) max_size = n;
  std::vector<std::size_t> idx;
  for (std::size_t size = 0; size <= max_size; ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      AtomSet s(universe);
      for (auto i : idx) s.insert(pool[i]);
      if (fn(s)) return true;
      // next combination in lexicographic order
      std::size_t j = size;
      while (j > 0 && idx[j - 1] == n - size + (j - 1)) --j;
      if (j == 0) break;
      ++idx[j - 1];
      for (std::size_t t = j; t < size; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return false;
}

}  // namespace stablek
