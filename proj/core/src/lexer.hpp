#pragma once

// Tokenizer shared by the scalar and skein-expression parsers.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "skein/parse_error.hpp"

namespace skein::detail {

enum class Tok { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool accept(Tok kind) {
    if (current_.kind != kind) return false;
    advance();
    return true;
  }

  Token expect(Tok kind, const char* what) {
    if (current_.kind != kind) fail(std::string("expected ") + what);
    return next();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, current_.line, current_.column, current_.text);
  }

  // Saves and restores the scan position for bounded lookahead.
  struct Mark {
    Token token;
    std::size_t pos, line, col;
  };
  Mark mark() const { return {current_, pos_, line_, col_}; }
  void reset(const Mark& m) {
    current_ = m.token;
    pos_ = m.pos;
    line_ = m.line;
    col_ = m.col;
  }

 private:
  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
    current_ = Token{Tok::End, "", line_, col_, pos_};
    if (pos_ >= src_.size()) return;

    const char c = src_[pos_];
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
      current_.kind = Tok::Integer;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        bump();
      }
      current_.kind = Tok::Ident;
    } else {
      switch (c) {
        case '+': current_.kind = Tok::Plus; break;
        case '-': current_.kind = Tok::Minus; break;
        case '*': current_.kind = Tok::Star; break;
        case '/': current_.kind = Tok::Slash; break;
        case '^': current_.kind = Tok::Caret; break;
        case '(': current_.kind = Tok::LParen; break;
        case ')': current_.kind = Tok::RParen; break;
        case ',': current_.kind = Tok::Comma; break;
        default:
          current_.text = std::string(1, c);
          throw ParseError("unexpected character", line_, col_, current_.text);
      }
      bump();
    }
    current_.text = std::string(src_.substr(start, pos_ - start));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Token current_;
};

}  // namespace skein::detail
