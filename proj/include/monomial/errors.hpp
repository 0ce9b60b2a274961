#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monomial {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A level that fails the order condition was passed where an order is required.
class InvalidOrderError : public Error {
 public:
  using Error::Error;
};

/// A level with a non-zero first row was passed where positive type is required.
class NotNormalizedError : public Error {
 public:
  using Error::Error;
};

class NotLatticeError : public Error {
 public:
  using Error::Error;
};

class NegativeEntryError : public Error {
 public:
  using Error::Error;
};

class NotUpperTriangularError : public Error {
 public:
  using Error::Error;
};

/// Permutation searches are exponential in n; n above the configured cap is refused.
class SearchTooLargeError : public Error {
 public:
  SearchTooLargeError(std::size_t n, std::size_t cap)
      : Error("permutation search over n=" + std::to_string(n) +
              " exceeds search cap " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  std::size_t n() const { return n_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

/// An enumeration whose box size exceeds the budget. `bound()` is the computed size.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, double bound, double budget)
      : Error(what + ": search space " + format(bound) + " exceeds budget " +
              format(budget)),
        bound_(bound),
        budget_(budget) {}

  double bound() const { return bound_; }
  double budget() const { return budget_; }

 private:
  static std::string format(double v);

  double bound_;
  double budget_;
};

/// Input text could not be parsed; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column,
             const std::string& message)
      : Error(source + ":" + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace monomial
