#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace whlab {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input failed (bad table, non-normal
/// subgroup, nonzero constant term, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic between scalars, matrices or series over different fields.
class FieldMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Syntax errors in presentation and group-table files. Line and column are
/// 1-based; a column of 0 means "whole line".
class ParseError : public DomainError {
 public:
  ParseError(std::string const& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A computation would allocate a space larger than the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Upper bound on the dimension of any single vector space a computation
/// materialises.
struct Budget {
  static constexpr std::size_t default_max_dimension = 2'000'000;

  std::size_t max_dimension = default_max_dimension;

  /// Throws BudgetExceeded when `dimension` is over the limit.
  void check(std::size_t dimension, std::string_view what) const;

  /// Memory guard for dense elimination: a rows x cols matrix stored with
  /// `bits_per_entry` bits may use at most 256 bytes per unit of dimension.
  void check_dense(std::size_t rows, std::size_t cols, std::size_t bits_per_entry,
                   std::string_view what) const;

  /// Default budget, overridden by the WHLAB_BUDGET environment variable.
  static Budget from_environment();
};

}  // namespace whlab
