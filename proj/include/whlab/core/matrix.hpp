#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <string>
#include <variant>
#include <vector>

#include "whlab/core/scalar.hpp"

namespace whlab {

/// Dense row-major matrix over Q or F_p. Linear maps act on column vectors,
/// so a map V -> W is a dim(W) x dim(V) matrix. Subspaces are carried as
/// matrices whose rows form a basis.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(Field field, std::vector<std::vector<Scalar>> const& rows, std::size_t cols);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Scalar const& value);
  void set(std::size_t i, std::size_t j, long value);
  /// entry(i, j) += value
  void add(std::size_t i, std::size_t j, long value);
  void add(std::size_t i, std::size_t j, Scalar const& value);
  bool is_zero_at(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  Matrix operator*(Matrix const& other) const;
  Matrix operator+(Matrix const& other) const;
  Matrix operator-(Matrix const& other) const;
  Matrix operator-() const;
  Matrix scaled(Scalar const& s) const;

  Matrix transpose() const;
  Matrix row(std::size_t i) const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  Matrix select_rows(std::vector<std::size_t> const& idx) const;
  Matrix select_columns(std::vector<std::size_t> const& idx) const;
  /// Copies `other` into this matrix with its top-left corner at (row0, col0).
  void paste(Matrix const& other, std::size_t row0, std::size_t col0);
  void append_row(Matrix const& row);

  friend Matrix vstack(Matrix const& top, Matrix const& bottom);
  friend Matrix hstack(Matrix const& left, Matrix const& right);
  friend bool operator==(Matrix const& a, Matrix const& b);

  /// One row per line, entries separated by spaces.
  std::string str() const;

  // Raw storage; exactly one of these is meaningful depending on field().
  std::vector<std::uint32_t>& residues() { return std::get<std::vector<std::uint32_t>>(data_); }
  std::vector<std::uint32_t> const& residues() const {
    return std::get<std::vector<std::uint32_t>>(data_);
  }
  std::vector<mpq_class>& rationals() { return std::get<std::vector<mpq_class>>(data_); }
  std::vector<mpq_class> const& rationals() const { return std::get<std::vector<mpq_class>>(data_); }

 private:
  void require_same_field(Matrix const& other, char const* what) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::variant<std::vector<std::uint32_t>, std::vector<mpq_class>> data_;
};

struct RowReduction {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero rref row
  Matrix rref;                      // reduced echelon form, zero rows dropped
  Matrix kernel;                    // rows v with m * v = 0, one per free column
};

/// Gauss-Jordan elimination.
RowReduction row_reduce(Matrix const& m);
std::size_t rank(Matrix const& m);
/// Rows of the result form a basis of {v : m v = 0}.
Matrix kernel_basis(Matrix const& m);
/// Reduced echelon basis of the row space.
Matrix row_space_basis(Matrix const& m);

// Subspaces of F^n given by row bases. Every result is in reduced echelon form.
Matrix subspace_sum(Matrix const& a, Matrix const& b);
Matrix subspace_intersection(Matrix const& a, Matrix const& b);
/// Image of the subspace with row basis `s` under the map `f`.
Matrix subspace_image(Matrix const& f, Matrix const& s);
/// {v : f v in span(s)}.
Matrix subspace_preimage(Matrix const& f, Matrix const& s);
/// Whether every row of `v` lies in the row span of `basis`.
bool subspace_contains(Matrix const& basis, Matrix const& v);
/// Matrix whose rows are a basis of `a` completing a basis of `b` inside a + b
/// (lexicographically first choice from the rows of a's echelon form).
Matrix complement_in(Matrix const& a, Matrix const& b);

Matrix kronecker(Matrix const& a, Matrix const& b);
/// Throws DomainError when `m` is not square and invertible.
Matrix inverse(Matrix const& m);

/// Sparse column over F_p: (row index, residue) pairs; repeated indices add up.
using ResidueColumn = std::vector<std::pair<std::size_t, std::uint32_t>>;
/// Dense `length` x columns.size() matrix with the given columns.
Matrix from_columns(Field field, std::size_t length, std::vector<ResidueColumn> const& columns);
/// Rank of the `length` x columns.size() matrix with the given columns.
/// F_2 runs on packed bits; other primes on a dense residue buffer.
std::size_t rank_of_columns(Field field, std::size_t length, std::vector<ResidueColumn> const& columns);

}  // namespace whlab
