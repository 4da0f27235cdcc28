#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nis {

/// A documented size cap of some module was exceeded.
class LimitError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed textual input. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace nis
