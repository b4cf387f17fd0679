// SPDX-License-Identifier: MIT
#pragma once

#include "stablek/atom_set.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stablek {

/// Interns atom names to dense ids in first-occurrence order.
class AtomTable {
 public:
  AtomId intern(std::string_view name);
  std::optional<AtomId> find(std::string_view name) const;
  const std::string& name(AtomId id) const { return names_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }

  /// Names of the members of `s`, in id order.
  std::vector<std::string> names_of(const AtomSet& s) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> index_;
};

/// True iff `name` matches `[A-Za-z_][A-Za-z0-9_]*` and is not the keyword `not`.
bool is_valid_atom_name(std::string_view name);

}  // namespace stablek
