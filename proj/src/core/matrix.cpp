#include "whlab/core/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "whlab/core/errors.hpp"

namespace whlab {

namespace {

using detail::mod_add;
using detail::mod_inv;
using detail::mod_mul;
using detail::mod_sub;

std::string shape(Matrix const& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Reduced echelon form over F_2 on packed rows.
struct BitRows {
  std::size_t rows, cols, words;
  std::vector<std::uint64_t> bits;

  explicit BitRows(Matrix const& m)
      : rows(m.rows()), cols(m.cols()), words((m.cols() + 63) / 64), bits(rows * words, 0) {
    auto const& r = m.residues();
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (r[i * cols + j]) bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
  }

  BitRows(std::size_t r, std::size_t c) : rows(r), cols(c), words((c + 63) / 64), bits(r * words, 0) {}

  void flip(std::size_t i, std::size_t j) { bits[i * words + j / 64] ^= std::uint64_t{1} << (j % 64); }

  bool test(std::size_t i, std::size_t j) const {
    return (bits[i * words + j / 64] >> (j % 64)) & 1U;
  }

  // Returns pivot columns; rows [0, rank) hold the reduced form afterwards.
  std::vector<std::size_t> reduce(bool full) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t piv = r;
      while (piv < rows && !test(piv, c)) ++piv;
      if (piv == rows) continue;
      if (piv != r)
        std::swap_ranges(bits.begin() + piv * words, bits.begin() + (piv + 1) * words,
                         bits.begin() + r * words);
      std::uint64_t const* src = &bits[r * words];
      std::size_t w0 = c / 64;
      for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
        if (i == r || !test(i, c)) continue;
        std::uint64_t* dst = &bits[i * words];
        for (std::size_t w = w0; w < words; ++w) dst[w] ^= src[w];
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }
};

// Gauss-Jordan over F_p (p odd or 2) on a residue buffer; returns pivots.
std::vector<std::size_t> reduce_mod(std::vector<std::uint32_t>& a, std::size_t rows,
                                    std::size_t cols, std::uint32_t p, bool full) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
    std::uint32_t* prow = &a[r * cols];
    std::uint32_t inv = mod_inv(prow[c], p);
    if (inv != 1)
      for (std::size_t j = c; j < cols; ++j) prow[j] = mod_mul(prow[j], inv, p);
    for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      std::uint32_t* row = &a[i * cols];
      std::uint32_t f = row[c];
      if (f == 0) continue;
      std::uint64_t neg = p - f;
      for (std::size_t j = c; j < cols; ++j) {
        if (prow[j]) row[j] = static_cast<std::uint32_t>((row[j] + neg * prow[j]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> reduce_rat(std::vector<mpq_class>& a, std::size_t rows, std::size_t cols,
                                    bool full) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  mpq_class inv, f;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv * cols + c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) swap(a[piv * cols + j], a[r * cols + j]);
    mpq_class* prow = &a[r * cols];
    if (prow[c] != 1) {
      inv = 1 / prow[c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(prow[j]) != 0) prow[j] *= inv;
    }
    for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      mpq_class* row = &a[i * cols];
      if (sgn(row[c]) == 0) continue;
      f = row[c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(prow[j]) != 0) row[j] -= f * prow[j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_rational()) {
    data_ = std::vector<mpq_class>(rows * cols);
  } else {
    data_ = std::vector<std::uint32_t>(rows * cols, 0);
  }
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1L);
  return m;
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  Matrix m(field, rows.size(), cols);
  std::size_t i = 0;
  for (auto const& row : rows) {
    if (row.size() != cols) throw DomainError("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m.set(i, j++, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(Field field, std::vector<std::vector<Scalar>> const& rows,
                         std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  if (field_.is_rational()) return Scalar(rationals()[i * cols_ + j]);
  return Scalar::residue(residues()[i * cols_ + j], field_.characteristic());
}

void Matrix::set(std::size_t i, std::size_t j, Scalar const& value) {
  if (value.field() != field_)
    throw FieldMismatch("storing " + value.field().name() + " entry in " + field_.name() + " matrix");
  if (field_.is_rational()) {
    rationals()[i * cols_ + j] = value.rational();
  } else {
    residues()[i * cols_ + j] = value.residue_value();
  }
}

void Matrix::set(std::size_t i, std::size_t j, long value) {
  if (field_.is_rational()) {
    rationals()[i * cols_ + j] = value;
  } else {
    residues()[i * cols_ + j] = detail::mod_reduce(value, field_.characteristic());
  }
}

void Matrix::add(std::size_t i, std::size_t j, long value) {
  if (field_.is_rational()) {
    rationals()[i * cols_ + j] += value;
  } else {
    auto p = field_.characteristic();
    auto& e = residues()[i * cols_ + j];
    e = mod_add(e, detail::mod_reduce(value, p), p);
  }
}

void Matrix::add(std::size_t i, std::size_t j, Scalar const& value) {
  if (value.field() != field_)
    throw FieldMismatch("adding " + value.field().name() + " entry to " + field_.name() + " matrix");
  if (field_.is_rational()) {
    rationals()[i * cols_ + j] += value.rational();
  } else {
    auto& e = residues()[i * cols_ + j];
    e = mod_add(e, value.residue_value(), field_.characteristic());
  }
}

bool Matrix::is_zero_at(std::size_t i, std::size_t j) const {
  if (field_.is_rational()) return sgn(rationals()[i * cols_ + j]) == 0;
  return residues()[i * cols_ + j] == 0;
}

bool Matrix::is_zero() const {
  if (field_.is_rational())
    return std::all_of(rationals().begin(), rationals().end(),
                       [](mpq_class const& q) { return sgn(q) == 0; });
  return std::all_of(residues().begin(), residues().end(), [](std::uint32_t v) { return v == 0; });
}

void Matrix::require_same_field(Matrix const& other, char const* what) const {
  if (field_ != other.field_)
    throw FieldMismatch(std::string(what) + " of " + field_.name() + " and " +
                        other.field_.name() + " matrices");
}

Matrix Matrix::operator*(Matrix const& other) const {
  require_same_field(other, "product");
  if (cols_ != other.rows_)
    throw DomainError("cannot multiply " + shape(*this) + " by " + shape(other));
  Matrix out(field_, rows_, other.cols_);
  std::size_t n = other.cols_;
  if (field_.is_rational()) {
    auto const& a = rationals();
    auto const& b = other.rationals();
    auto& c = out.rationals();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        mpq_class const& x = a[i * cols_ + k];
        if (sgn(x) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (sgn(b[k * n + j]) != 0) c[i * n + j] += x * b[k * n + j];
      }
  } else {
    std::uint64_t p = field_.characteristic();
    auto const& a = residues();
    auto const& b = other.residues();
    auto& c = out.residues();
    std::vector<std::uint64_t> acc(n);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t x = a[i * cols_ + k];
        if (x == 0) continue;
        std::uint32_t const* brow = &b[k * n];
        for (std::size_t j = 0; j < n; ++j) acc[j] = (acc[j] + x * brow[j]) % p;
      }
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = static_cast<std::uint32_t>(acc[j]);
    }
  }
  return out;
}

Matrix Matrix::operator+(Matrix const& other) const {
  require_same_field(other, "sum");
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DomainError("cannot add " + shape(*this) + " and " + shape(other));
  Matrix out = *this;
  if (field_.is_rational()) {
    for (std::size_t k = 0; k < rows_ * cols_; ++k) out.rationals()[k] += other.rationals()[k];
  } else {
    auto p = field_.characteristic();
    for (std::size_t k = 0; k < rows_ * cols_; ++k)
      out.residues()[k] = mod_add(out.residues()[k], other.residues()[k], p);
  }
  return out;
}

Matrix Matrix::operator-(Matrix const& other) const { return *this + (-other); }

Matrix Matrix::operator-() const {
  Matrix out = *this;
  if (field_.is_rational()) {
    for (auto& q : out.rationals()) q = -q;
  } else {
    auto p = field_.characteristic();
    for (auto& v : out.residues()) v = v ? p - v : 0;
  }
  return out;
}

Matrix Matrix::scaled(Scalar const& s) const {
  if (s.field() != field_) throw FieldMismatch("scaling " + field_.name() + " matrix");
  Matrix out = *this;
  if (field_.is_rational()) {
    for (auto& q : out.rationals()) q *= s.rational();
  } else {
    auto p = field_.characteristic();
    for (auto& v : out.residues()) v = mod_mul(v, s.residue_value(), p);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_rational()) {
        out.rationals()[j * rows_ + i] = rationals()[i * cols_ + j];
      } else {
        out.residues()[j * rows_ + i] = residues()[i * cols_ + j];
      }
    }
  return out;
}

Matrix Matrix::row(std::size_t i) const { return block(i, 0, 1, cols_); }

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw DomainError("block out of range");
  Matrix out(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) {
      if (field_.is_rational()) {
        out.rationals()[i * ncols + j] = rationals()[(row0 + i) * cols_ + col0 + j];
      } else {
        out.residues()[i * ncols + j] = residues()[(row0 + i) * cols_ + col0 + j];
      }
    }
  return out;
}

Matrix Matrix::select_rows(std::vector<std::size_t> const& idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) out.paste(row(idx[i]), i, 0);
  return out;
}

Matrix Matrix::select_columns(std::vector<std::size_t> const& idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (field_.is_rational()) {
        out.rationals()[i * idx.size() + j] = rationals()[i * cols_ + idx[j]];
      } else {
        out.residues()[i * idx.size() + j] = residues()[i * cols_ + idx[j]];
      }
    }
  return out;
}

void Matrix::paste(Matrix const& other, std::size_t row0, std::size_t col0) {
  require_same_field(other, "paste");
  if (row0 + other.rows_ > rows_ || col0 + other.cols_ > cols_)
    throw DomainError("paste of " + shape(other) + " out of range of " + shape(*this));
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) {
      if (field_.is_rational()) {
        rationals()[(row0 + i) * cols_ + col0 + j] = other.rationals()[i * other.cols_ + j];
      } else {
        residues()[(row0 + i) * cols_ + col0 + j] = other.residues()[i * other.cols_ + j];
      }
    }
}

void Matrix::append_row(Matrix const& r) {
  if (rows_ == 0 && cols_ == 0 && r.cols_ > 0) *this = Matrix(r.field_, 0, r.cols_);
  *this = vstack(*this, r);
}

Matrix vstack(Matrix const& top, Matrix const& bottom) {
  top.require_same_field(bottom, "vstack");
  if (top.cols_ != bottom.cols_)
    throw DomainError("vstack of " + shape(top) + " and " + shape(bottom));
  Matrix out = top;
  out.rows_ += bottom.rows_;
  if (out.field_.is_rational()) {
    auto& v = out.rationals();
    v.insert(v.end(), bottom.rationals().begin(), bottom.rationals().end());
  } else {
    auto& v = out.residues();
    v.insert(v.end(), bottom.residues().begin(), bottom.residues().end());
  }
  return out;
}

Matrix hstack(Matrix const& left, Matrix const& right) {
  left.require_same_field(right, "hstack");
  if (left.rows_ != right.rows_)
    throw DomainError("hstack of " + shape(left) + " and " + shape(right));
  Matrix out(left.field_, left.rows_, left.cols_ + right.cols_);
  out.paste(left, 0, 0);
  out.paste(right, 0, left.cols_);
  return out;
}

bool operator==(Matrix const& a, Matrix const& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.data_ == b.data_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << '\n';
  }
  return os.str();
}

namespace {

// Reduced echelon form in place; returns pivots. `full` = Gauss-Jordan.
std::vector<std::size_t> reduce_in_place(Matrix& m, bool full) {
  if (m.field().is_rational()) return reduce_rat(m.rationals(), m.rows(), m.cols(), full);
  if (m.field().characteristic() == 2) {
    BitRows b(m);
    auto pivots = b.reduce(full);
    auto& r = m.residues();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r[i * m.cols() + j] = b.test(i, j) ? 1 : 0;
    return pivots;
  }
  return reduce_mod(m.residues(), m.rows(), m.cols(), m.field().characteristic(), full);
}

}  // namespace

RowReduction row_reduce(Matrix const& m) {
  RowReduction out;
  Matrix a = m;
  out.pivots = reduce_in_place(a, true);
  out.rank = out.pivots.size();
  out.rref = a.block(0, 0, out.rank, a.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : out.pivots) is_pivot[c] = true;
  std::size_t nfree = m.cols() - out.rank;
  out.kernel = Matrix(m.field(), nfree, m.cols());
  std::size_t k = 0, n = m.cols();
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    if (m.field().is_rational()) {
      out.kernel.set(k, f, 1L);
      for (std::size_t i = 0; i < out.rank; ++i)
        if (!out.rref.is_zero_at(i, f)) out.kernel.set(k, out.pivots[i], -out.rref.at(i, f));
    } else {
      std::uint32_t p = m.field().characteristic();
      auto const& r = out.rref.residues();
      auto& kr = out.kernel.residues();
      kr[k * n + f] = 1;
      for (std::size_t i = 0; i < out.rank; ++i)
        if (std::uint32_t v = r[i * n + f]) kr[k * n + out.pivots[i]] = p - v;
    }
    ++k;
  }
  return out;
}

std::size_t rank(Matrix const& m) {
  if (m.empty()) return 0;
  if (m.field().characteristic() == 2) {
    // pack the shorter side
    BitRows b(m.rows() < m.cols() ? m : m.transpose());
    return b.reduce(false).size();
  }
  Matrix a = m;
  return reduce_in_place(a, false).size();
}

Matrix kernel_basis(Matrix const& m) { return row_reduce(m).kernel; }

Matrix row_space_basis(Matrix const& m) {
  Matrix a = m;
  auto pivots = reduce_in_place(a, true);
  return a.block(0, 0, pivots.size(), a.cols());
}

Matrix subspace_sum(Matrix const& a, Matrix const& b) { return row_space_basis(vstack(a, b)); }

Matrix subspace_intersection(Matrix const& a, Matrix const& b) {
  // x a = y b  <=>  (x, -y) in the left kernel of [a; b]
  if (a.rows() == 0 || b.rows() == 0) return Matrix(a.field(), 0, a.cols());
  Matrix stacked = vstack(a, -b);
  Matrix left = kernel_basis(stacked.transpose());
  Matrix coeff = left.block(0, 0, left.rows(), a.rows());
  return row_space_basis(coeff * a);
}

Matrix subspace_image(Matrix const& f, Matrix const& s) {
  if (s.rows() == 0) return Matrix(f.field(), 0, f.rows());
  return row_space_basis(s * f.transpose());
}

Matrix subspace_preimage(Matrix const& f, Matrix const& s) {
  // v with f v = s^T y: kernel of [f | -s^T], keep the v part
  Matrix aug = hstack(f, -s.transpose());
  Matrix k = kernel_basis(aug);
  return row_space_basis(k.block(0, 0, k.rows(), f.cols()));
}

bool subspace_contains(Matrix const& basis, Matrix const& v) {
  if (v.rows() == 0) return true;
  return rank(vstack(basis, v)) == rank(basis);
}

Matrix complement_in(Matrix const& a, Matrix const& b) {
  Matrix ea = row_space_basis(a);
  Matrix current = row_space_basis(b);
  std::size_t r = current.rows();
  Matrix out(a.field(), 0, a.cols());
  for (std::size_t i = 0; i < ea.rows(); ++i) {
    Matrix candidate = vstack(current, ea.row(i));
    std::size_t rc = rank(candidate);
    if (rc > r) {
      current = candidate;
      r = rc;
      out = vstack(out, ea.row(i));
    }
  }
  return out;
}

Matrix kronecker(Matrix const& a, Matrix const& b) {
  if (a.field() != b.field()) throw FieldMismatch("kronecker: fields differ");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.is_zero_at(i, j)) continue;
      out.paste(b.scaled(a.at(i, j)), i * b.rows(), j * b.cols());
    }
  return out;
}

Matrix inverse(Matrix const& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  std::size_t n = m.rows();
  auto red = row_reduce(hstack(m, Matrix::identity(m.field(), n)));
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
    throw DomainError("matrix is singular");
  return red.rref.block(0, n, n, n);
}

Matrix from_columns(Field field, std::size_t length, std::vector<ResidueColumn> const& columns) {
  Matrix out(field, length, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (auto const& [r, v] : columns[c]) out.add(r, c, static_cast<long>(v));
  return out;
}

std::size_t rank_of_columns(Field field, std::size_t length, std::vector<ResidueColumn> const& columns) {
  if (field.is_rational()) throw DomainError("rank_of_columns works over F_p");
  std::uint32_t p = field.characteristic();
  if (p == 2) {
    BitRows b(columns.size(), length);
    for (std::size_t i = 0; i < columns.size(); ++i)
      for (auto const& [row, v] : columns[i])
        if (v & 1U) b.flip(i, row);
    return b.reduce(false).size();
  }
  std::vector<std::uint32_t> buf(columns.size() * length, 0);
  for (std::size_t i = 0; i < columns.size(); ++i)
    for (auto const& [row, v] : columns[i]) {
      auto& e = buf[i * length + row];
      e = mod_add(e, v % p, p);
    }
  return reduce_mod(buf, columns.size(), length, p, false).size();
}

}  // namespace whlab
