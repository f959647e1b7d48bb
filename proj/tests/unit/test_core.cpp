#include <catch_amalgamated.hpp>

#include <random>

#include "whlab/core/errors.hpp"
#include "whlab/core/matrix.hpp"
#include "whlab/core/series.hpp"
#include "whlab/core/sparse.hpp"

using namespace whlab;

namespace {

Field const Q = Field::rationals();
Field const F2 = Field::prime(2);

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937& rng, int lo = -3,
                     int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<long>(d(rng)));
  return m;
}

TruncatedSeries random_series(Field f, std::size_t alphabet, std::size_t cap, std::mt19937& rng,
                              bool constant = true) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> deg(0, static_cast<int>(cap));
  std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet) - 1);
  TruncatedSeries s(f, alphabet, cap);
  for (int t = 0; t < 5; ++t) {
    Monomial m(deg(rng));
    for (auto& l : m) l = static_cast<std::uint16_t>(letter(rng));
    if (!constant && m.empty()) continue;
    s.add_term(m, Scalar(f, static_cast<long>(coeff(rng))));
  }
  return s;
}

// Kernel dimension over F_2 by enumerating every vector.
std::size_t brute_kernel_dim_f2(Matrix const& m) {
  std::size_t count = 0;
  for (std::size_t v = 0; v < (std::size_t{1} << m.cols()); ++v) {
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i) {
      unsigned s = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) s ^= ((v >> j) & 1U) & m.at(i, j).residue_value();
      zero = s == 0;
    }
    count += zero;
  }
  std::size_t dim = 0;
  while ((std::size_t{1} << dim) < count) ++dim;
  return dim;
}

}  // namespace

TEST_CASE("field parsing and names") {
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("F7").characteristic() == 7);
  CHECK(Field::parse("F7").name() == "F7");
  CHECK_THROWS_AS(Field::parse("F6"), DomainError);
  CHECK_THROWS_AS(Field::parse("R"), DomainError);
}

TEST_CASE("scalar arithmetic") {
  Scalar half = Scalar::parse(Q, "2/4");
  CHECK(half.str() == "1/2");
  CHECK((half + half).is_one());
  CHECK(Scalar::parse(Q, "-3/6").str() == "-1/2");
  Field f5 = Field::prime(5);
  CHECK((Scalar(f5, 3L) * Scalar(f5, 2L)).is_one());
  CHECK(Scalar(f5, -1L).str() == "4");
  CHECK(Scalar::parse(f5, "1/2").str() == "3");
  CHECK_THROWS_AS(Scalar(f5, 1L) + Scalar(Q, 1L), FieldMismatch);
  CHECK_THROWS_AS(Scalar(f5, 0L).inverse(), DomainError);
}

TEST_CASE("row_reduce on small cases") {
  auto id = row_reduce(Matrix::identity(Q, 2));
  CHECK(id.rank == 2);
  CHECK(id.kernel.rows() == 0);

  auto zero = row_reduce(Matrix(Q, 2, 3));
  CHECK(zero.rank == 0);
  CHECK(zero.kernel.rows() == 3);

  auto ones = row_reduce(Matrix::from_rows(F2, {{1, 1}, {1, 1}}));
  CHECK(ones.rank == 1);
  REQUIRE(ones.kernel.rows() == 1);
  CHECK(ones.kernel == Matrix::from_rows(F2, {{1, 1}}));
}

TEST_CASE("mixed-field matrices are rejected") {
  CHECK_THROWS_AS(Matrix::identity(Q, 2) * Matrix::identity(F2, 2), FieldMismatch);
  Matrix m(Q, 1, 1);
  CHECK_THROWS_AS(m.set(0, 0, Scalar(F2, 1L)), FieldMismatch);
}

TEST_CASE("random matrices: rank of transpose, exact kernels") {
  std::mt19937 rng(11);
  for (Field f : {Q, F2, Field::prime(3), Field::prime(7)}) {
    for (int t = 0; t < 40; ++t) {
      std::uniform_int_distribution<int> dim(1, 12);
      std::size_t r = dim(rng), c = dim(rng);
      // sparse-ish entries give a spread of ranks
      Matrix m = random_matrix(f, r, c, rng, -1, 1);
      auto red = row_reduce(m);
      CHECK(red.rank == rank(m));
      CHECK(red.rank == rank(m.transpose()));
      CHECK(red.rank + red.kernel.rows() == c);
      if (red.kernel.rows()) CHECK((m * red.kernel.transpose()).is_zero());
      CHECK(rank(vstack(red.rref, m)) == red.rank);
    }
  }
}

TEST_CASE("F2 kernels agree with exhaustive enumeration") {
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<int> dim(1, 9);
    Matrix m = random_matrix(F2, dim(rng), dim(rng), rng, 0, 1);
    CHECK(kernel_basis(m).rows() == brute_kernel_dim_f2(m));
  }
}

TEST_CASE("subspace operations") {
  Matrix a = Matrix::from_rows(Q, {{1, 0, 0}, {0, 1, 0}});
  Matrix b = Matrix::from_rows(Q, {{0, 1, 0}, {0, 0, 1}});
  CHECK(subspace_sum(a, b).rows() == 3);
  CHECK(subspace_intersection(a, b) == Matrix::from_rows(Q, {{0, 1, 0}}));
  Matrix proj = Matrix::from_rows(Q, {{1, 0, 0}, {0, 0, 0}});
  CHECK(subspace_preimage(proj, Matrix(Q, 0, 2)).rows() == 2);
  CHECK(subspace_image(proj, b).rows() == 0);
  CHECK(complement_in(subspace_sum(a, b), a) == Matrix::from_rows(Q, {{0, 0, 1}}));
}

TEST_CASE("sparse kernel matches dense kernel") {
  std::mt19937 rng(17);
  for (Field f : {Q, Field::prime(3)}) {
    for (int t = 0; t < 30; ++t) {
      Matrix m = random_matrix(f, 6, 8, rng, -1, 1);
      std::vector<SparseVector> cols(m.cols());
      for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
          if (!m.is_zero_at(i, j)) cols[j].emplace(i, m.at(i, j));
      Matrix k = sparse_kernel(f, cols);
      CHECK(k.rows() == kernel_basis(m).rows());
      if (k.rows()) CHECK((m * k.transpose()).is_zero());
      CHECK(sparse_rank(f, cols) == rank(m));
    }
  }
}

TEST_CASE("series multiplication") {
  auto X = TruncatedSeries::letter(Q, 2, 2, 0);
  auto Y = TruncatedSeries::letter(Q, 2, 2, 1);
  auto one = TruncatedSeries::one(Q, 2, 2);
  CHECK(((one + X) * (one + Y)).str() == "1 + X0 + X1 + X0.X1");
  CHECK(!(X * Y == Y * X));
  std::mt19937 rng(3);
  auto a = random_series(Q, 2, 2, rng);
  CHECK(a * one == a);
  CHECK_THROWS_AS(X * TruncatedSeries::letter(Q, 2, 3, 0), DomainError);
  CHECK_THROWS_AS(X * TruncatedSeries::letter(F2, 2, 2, 0), FieldMismatch);
}

TEST_CASE("series ring axioms on random triples") {
  std::mt19937 rng(23);
  for (Field f : {Q, Field::prime(3)}) {
    for (int t = 0; t < 100; ++t) {
      auto a = random_series(f, 3, 4, rng);
      auto b = random_series(f, 3, 4, rng);
      auto c = random_series(f, 3, 4, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
    }
  }
}

TEST_CASE("exp, log and inverse") {
  auto X = TruncatedSeries::letter(Q, 1, 3, 0);
  CHECK(X.exp().str() == "1 + X0 + 1/2*X0.X0 + 1/6*X0.X0.X0");

  for (std::size_t n = 1; n <= 6; ++n) {
    auto x = TruncatedSeries::letter(Q, 1, n, 0);
    CHECK(x.exp().log() == x);
  }

  auto Y = TruncatedSeries::letter(Q, 1, 2, 0);
  auto one = TruncatedSeries::one(Q, 1, 2);
  CHECK((one + Y).inverse().str() == "1 - X0 + X0.X0");

  std::mt19937 rng(29);
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<int> cap(1, 6);
    std::size_t n = cap(rng);
    auto a = random_series(Q, 2, n, rng, false);
    auto unit = TruncatedSeries::one(Q, 2, n);
    CHECK(a.exp().log() == a);
    CHECK(a.exp() * (-a).exp() == unit);
    CHECK((unit + a).log().exp() == unit + a);
    CHECK((unit + a) * (unit + a).inverse() == unit);
  }
}

TEST_CASE("exp and log preconditions") {
  auto one = TruncatedSeries::one(Q, 1, 2);
  CHECK_THROWS_AS(one.exp(), DomainError);
  CHECK_THROWS_AS(one.scaled(Scalar(Q, 2L)).log(), DomainError);
  CHECK_THROWS_AS(one.scaled(Scalar(Q, 2L)).inverse(), DomainError);
  auto x3 = TruncatedSeries::letter(Field::prime(3), 1, 3, 0);
  CHECK_THROWS_AS(x3.exp(), DomainError);
  auto x2 = TruncatedSeries::letter(Field::prime(3), 1, 2, 0);
  CHECK(x2.exp().str() == "1 + X0 + 2*X0.X0");
}
