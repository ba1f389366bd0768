#ifndef RAAGSPLIT_ERROR_HPP_
#define RAAGSPLIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raagsplit {

// Base of every exception thrown by the library. Negative answers are never
// reported through exceptions, only malformed requests.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class InvalidRank : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input outside the domain an operation is defined on (e.g. a disconnected
// graph handed to the complete-cut-decomposition).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

class StarIsWholeGraph : public Error {
 public:
  using Error::Error;
};

class ScenarioTooLarge : public Error {
 public:
  using Error::Error;
};

// Raised when a guarantee the algorithms rely on is observed to fail. Seeing
// one means the implementation is wrong.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace raagsplit

#endif  // RAAGSPLIT_ERROR_HPP_
