#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transword {

// A violated precondition of a library operation.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested result exists mathematically but leaves the finitely
// representable fragment (non-affine family patterns, index overflow, ...).
class FragmentError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace transword
