#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

/// Syntax error with a 1-based source position and the offending token text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column, std::string token)
      : std::runtime_error(format(what, line, column, token)),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column,
                            const std::string& token) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what + " near '" +
           (token.empty() ? std::string("<end of input>") : token) + "'";
  }

  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

}  // namespace skein
