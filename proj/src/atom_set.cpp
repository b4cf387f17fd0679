// SPDX-License-Identifier: MIT
#include "stablek/atom_set.hpp"
#include "stablek/atom_table.hpp"

#include <stdexcept>

namespace stablek {

AtomSet::AtomSet(std::size_t universe, std::initializer_list<AtomId> atoms) : bits_(universe) {
  for (auto a : atoms) bits_.set(a);
}

AtomSet::AtomSet(std::size_t universe, const std::vector<AtomId>& atoms) : bits_(universe) {
  for (auto a : atoms) bits_.set(a);
}

std::vector<AtomId> AtomSet::members() const {
  std::vector<AtomId> out;
  out.reserve(size());
  for_each([&](AtomId a) { out.push_back(a); });
  return out;
}

bool size_lex_less(const AtomSet& a, const AtomSet& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  const auto ma = a.members();
  const auto mb = b.members();
  return ma < mb;
}

AtomId AtomTable::intern(std::string_view name) {
  std::string key(name);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const auto id = static_cast<AtomId>(names_.size());
  names_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<AtomId> AtomTable::find(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::string> AtomTable::names_of(const AtomSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](AtomId a) { out.push_back(names_.at(a)); });
  return out;
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name == "not") return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  for (char c : name) {
    if (!alpha(c) && !digit(c)) return false;
  }
  return true;
}

}  // namespace stablek
