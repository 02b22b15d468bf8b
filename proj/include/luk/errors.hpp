#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace luk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed concrete syntax. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An operator or constant used outside the language that permits it.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// Evaluation failure: unassigned variable, out-of-range MV input, or a
/// term evaluated in an algebra of the wrong language.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// A configurable resource limit (DNF disjuncts, case splits, FM rows) was hit.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// Misuse of a translation: fresh variable already present, wrong language.
class ReductionError : public Error {
 public:
  using Error::Error;
};

}  // namespace luk
