// SPDX-License-Identifier: MIT
#include "stablek/error.hpp"
#include "stablek/program.hpp"

#include <cctype>
#include <optional>

namespace stablek {

namespace {

enum class Tok { ident, arrow, comma, dot, end };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blanks();
    Token t{Tok::end, {}, line_, column_};
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (c == ',') {
      advance(1);
      t.kind = Tok::comma;
    } else if (c == '.') {
      advance(1);
      t.kind = Tok::dot;
    } else if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
      advance(2);
      t.kind = Tok::arrow;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        advance(1);
      }
      t.kind = Tok::ident;
      t.text = text_.substr(start, pos_ - start);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }
    return t;
  }

 private:
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_blanks() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : lex_(text), options_(options) {
    shift();
  }

  Program run() && {
    while (cur_.kind != Tok::end) rule();
    return std::move(builder_).build();
  }

 private:
  void shift() { cur_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur_.line, cur_.column);
  }

  std::string atom_name(const char* role) {
    if (cur_.kind != Tok::ident) fail(std::string("expected ") + role);
    if (cur_.text == "not") fail(std::string("'not' cannot be used as ") + role);
    if (!options_.allow_reserved && has_reserved_prefix(cur_.text)) {
      fail("atom name '" + std::string(cur_.text) + "' uses a reserved prefix");
    }
    std::string name(cur_.text);
    shift();
    return name;
  }

  void rule() {
    if (cur_.kind == Tok::arrow) fail("rule with empty head");
    const std::string head = atom_name("a head atom");
    std::vector<std::string> pos, neg;
    if (cur_.kind == Tok::arrow) {
      shift();
      while (true) {
        if (cur_.kind == Tok::ident && cur_.text == "not") {
          shift();
          neg.push_back(atom_name("an atom after 'not'"));
        } else {
          pos.push_back(atom_name("a body literal"));
        }
        if (cur_.kind == Tok::comma) {
          shift();
          continue;
        }
        break;
      }
    }
    if (cur_.kind != Tok::dot) fail("expected '.' at end of rule");
    shift();
    builder_.add_rule(head, pos, neg);
  }

  Lexer lex_;
  ParseOptions options_;
  Token cur_{};
  ProgramBuilder builder_;
};

}  // namespace

Program parse_program(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).run();
}

}  // namespace stablek
