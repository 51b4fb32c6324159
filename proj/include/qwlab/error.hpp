#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table or declaration that violates the structural rules of an algebra.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Text that does not conform to a grammar. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             const std::string& source = {})
      : Error((source.empty() ? std::string() : source + ":") + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  /// The diagnostic without the position prefix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// An operation was asked to run on an input outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A term referenced a variable with no binding.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// The search ran out of its node budget before finishing.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& message, std::size_t partial_results)
      : Error(message), partial_results_(partial_results) {}

  /// Number of results that were complete when the budget ran out.
  std::size_t partial_results() const noexcept { return partial_results_; }

 private:
  std::size_t partial_results_;
};

}  // namespace qwlab
