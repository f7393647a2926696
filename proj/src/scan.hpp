#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "adfkit/errors.hpp"

namespace adfkit::detail {

// Character-level cursor shared by the adf/nlp/setaf/formula parsers.
// Tracks 1-based line/column; '%' starts a comment running to end of line.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_consume(char c) {
    if (peek() != c || pos_ >= text_.size()) return false;
    advance();
    return true;
  }

  void expect(char c, const char* what) {
    if (!try_consume(c)) {
      fail(std::string("expected '") + c + "' " + what);
    }
  }

  bool ident_ahead() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  // [A-Za-z_][A-Za-z0-9_]*; the caller decides whether the spelling is
  // acceptable (lowercase-initial atom, keyword, ...).
  std::string ident() {
    if (!ident_ahead()) fail("expected an identifier");
    std::string out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        out.push_back(c);
        advance();
      } else {
        break;
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, line_, col_);
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace adfkit::detail
