#pragma once

// Character cursor with line/column tracking, shared by the polynomial and
// document parsers.

#include "tropfan/polynomial.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <string_view>

namespace tropfan::detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      if (!std::isspace(static_cast<unsigned char>(c))) break;
      advance();
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  /// Next character without skipping whitespace.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    advance();
    return c;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c) {
    const char got = peek();
    if (got != c) fail(std::string("expected '") + c + "'" + (got ? std::string(", found '") + got + "'" : ""));
    advance();
  }
  std::string identifier() {
    skip_ws();
    std::string s;
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected identifier");
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      s += text_[pos_];
      advance();
    }
    return s;
  }
  std::string digits() {
    skip_ws();
    std::string s;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      s += text_[pos_];
      advance();
    }
    return s;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_); }
  [[noreturn]] static void fail_at(const std::string& msg, std::pair<std::size_t, std::size_t> where) {
    throw ParseError(msg, where.first, where.second);
  }
  /// Line and column of the next token.
  std::pair<std::size_t, std::size_t> position() {
    skip_ws();
    return {line_, column_};
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

/// Parses a sum of terms; if `first_term` is given it receives the first
/// summand as written (with its sign).
Polynomial parse_polynomial_expr(Scanner& s, const RingPtr& ring, Polynomial* first_term = nullptr);

}  // namespace tropfan::detail
