// SPDX-License-Identifier: MIT
#include "stablek/encodings.hpp"
#include "stablek/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace stablek {

namespace {

void sort_unique(std::vector<AtomId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ClauseSet parse_dimacs(std::string_view text) {
  auto atoms = std::make_shared<AtomTable>();
  ClauseSet out;
  Clause pending;
  bool have_pending = false;
  long declared_vars = -1;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    };
    skip_ws();
    if (pos >= line.size() || line[pos] == 'c' || line[pos] == '%') continue;
    if (line[pos] == 'p') {
      if (declared_vars >= 0) throw ParseError("duplicate problem line", line_no, pos + 1);
      std::string header(line.substr(pos));
      char fmt[8] = {};
      long vars = 0, clauses = 0;
      if (std::sscanf(header.c_str(), "p %7s %ld %ld", fmt, &vars, &clauses) != 3 ||
          std::string(fmt) != "cnf" || vars < 0 || clauses < 0) {
        throw ParseError("malformed problem line, expected 'p cnf <vars> <clauses>'", line_no, pos + 1);
      }
      declared_vars = vars;
      continue;
    }
    if (declared_vars < 0) throw ParseError("clause before the 'p cnf' line", line_no, pos + 1);
    while (true) {
      skip_ws();
      if (pos >= line.size()) break;
      long value = 0;
      const char* first = line.data() + pos;
      const char* last = line.data() + line.size();
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
        throw ParseError("expected an integer literal", line_no, pos + 1);
      }
      const std::size_t column = pos + 1;
      pos = static_cast<std::size_t>(ptr - line.data());
      if (value == 0) {
        if (!have_pending) throw ParseError("clause with no literals", line_no, column);
        sort_unique(pending.pos);
        sort_unique(pending.neg);
        out.clauses.push_back(std::move(pending));
        pending = {};
        have_pending = false;
        continue;
      }
      const long var = std::labs(value);
      if (var > declared_vars) {
        throw ParseError("variable " + std::to_string(var) + " exceeds the declared count", line_no,
                         column);
      }
      const AtomId id = atoms->intern("x" + std::to_string(var));
      (value > 0 ? pending.pos : pending.neg).push_back(id);
      have_pending = true;
    }
  }
  if (declared_vars < 0) throw ParseError("missing 'p cnf' line", line_no, 1);
  if (have_pending) {
    sort_unique(pending.pos);
    sort_unique(pending.neg);
    out.clauses.push_back(std::move(pending));
  }
  out.atoms = std::move(atoms);
  return out;
}

}  // namespace stablek
