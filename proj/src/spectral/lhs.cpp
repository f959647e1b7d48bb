#include <vector>

#include "whlab/spectral/double_complex.hpp"

namespace whlab {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

// A^q: H-equivariant functions F(y0; y1..yq) into M, stored by their values at
// y0 = lift(t). Coordinate of (t, y1..yq, j) is (t |G|^q + ybar) d + j.
class Coefficients {
 public:
  Coefficients(GModule const& m, FiniteGroupTable const& g, FiniteGroupTable::Quotient const& quot)
      : m_(m), g_(g), quot_(quot), ng_(g.order()), nq_(quot.group.order()), d_(m.dimension()) {}

  std::size_t dim(std::size_t q) const { return nq_ * power(ng_, q) * d_; }

  // y0 = h lift(t)
  std::pair<std::size_t, std::size_t> decompose(std::size_t y0) const {
    std::size_t t = quot_.coset_of[y0];
    return {t, g_.mul(y0, g_.inv(quot_.lift[t]))};
  }

  // Pointwise bar coboundary A^q -> A^{q+1}.
  Matrix coboundary(std::size_t q) const {
    Field f = m_.field();
    std::size_t tuples = power(ng_, q + 1), inner = power(ng_, q);
    Matrix out(f, dim(q + 1), dim(q));
    std::vector<std::size_t> ys(q + 1);
    for (std::size_t t = 0; t < nq_; ++t)
      for (std::size_t y = 0; y < tuples; ++y) {
        for (std::size_t i = q + 1, rest = y; i-- > 0; rest /= ng_) ys[i] = rest % ng_;
        std::size_t row0 = (t * tuples + y) * d_;
        auto [t1, h] = decompose(g_.mul(quot_.lift[t], ys[0]));
        std::size_t col0 = (t1 * inner + y % inner) * d_;
        Matrix const& a = m_.action(h);
        for (std::size_t k = 0; k < d_; ++k)
          for (std::size_t j = 0; j < d_; ++j)
            if (!a.is_zero_at(k, j)) out.add(row0 + k, col0 + j, a.at(k, j));
        for (std::size_t i = 0; i < q; ++i) {
          std::size_t merged = 0;
          for (std::size_t s = 0; s <= q; ++s) {
            if (s == i + 1) continue;
            merged = merged * ng_ + (s == i ? g_.mul(ys[i], ys[i + 1]) : ys[s]);
          }
          long sign = (i + 1) % 2 ? -1 : 1;
          for (std::size_t j = 0; j < d_; ++j) out.add(row0 + j, (t * inner + merged) * d_ + j, sign);
        }
        long sign = (q + 1) % 2 ? -1 : 1;
        for (std::size_t j = 0; j < d_; ++j) out.add(row0 + j, (t * inner + y / ng_) * d_ + j, sign);
      }
    return out;
  }

  // gamma acts by (gamma F)(y0) = g F(g^-1 y0), g = lift(gamma); block (t, ybar)
  // of the image is action(source[t].second) applied to block (source[t].first, ybar).
  std::vector<std::pair<std::size_t, std::size_t>> sources(std::size_t gamma) const {
    std::size_t g = quot_.lift[gamma];
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t t = 0; t < nq_; ++t) {
      auto [t2, h] = decompose(g_.mul(g_.inv(g), quot_.lift[t]));
      out.push_back({t2, g_.mul(g, h)});
    }
    return out;
  }

  // Adds gamma F into `out` at rows row0.., reading F at columns col0...
  void add_action(Matrix& out, std::size_t q, std::size_t gamma, std::size_t row0, std::size_t col0) const {
    std::size_t inner = power(ng_, q);
    auto src = sources(gamma);
    for (std::size_t t = 0; t < nq_; ++t) {
      Matrix const& a = m_.action(src[t].second);
      for (std::size_t y = 0; y < inner; ++y) {
        std::size_t r = row0 + (t * inner + y) * d_, c = col0 + (src[t].first * inner + y) * d_;
        for (std::size_t k = 0; k < d_; ++k)
          for (std::size_t j = 0; j < d_; ++j)
            if (!a.is_zero_at(k, j)) out.add(r + k, c + j, a.at(k, j));
      }
    }
  }

 private:
  GModule const& m_;
  FiniteGroupTable const& g_;
  FiniteGroupTable::Quotient const& quot_;
  std::size_t ng_, nq_, d_;
};

}  // namespace

DoubleComplex lhs_double_complex(GModule const& m, std::vector<std::size_t> const& subgroup, std::size_t p_max,
                                 std::size_t q_max, std::size_t n_max, Budget const& budget) {
  FiniteGroupTable const& g = m.group();
  auto quot = g.quotient(subgroup);
  FiniteGroupTable const& qg = quot.group;
  Coefficients coeff(m, g, quot);
  std::size_t nq = qg.order();
  Field f = m.field();

  std::vector<std::vector<std::size_t>> dims(p_max + 1, std::vector<std::size_t>(q_max + 1, 0));
  for (std::size_t p = 0; p <= p_max; ++p)
    for (std::size_t q = 0; q <= q_max && p + q <= n_max; ++q) {
      dims[p][q] = power(nq, p) * coeff.dim(q);
      budget.check(dims[p][q], "LHS cell");
    }
  DoubleComplex dc(f, p_max, q_max, n_max, dims, true);

  for (std::size_t q = 0; q < q_max && q < n_max; ++q) {
    budget.check_dense(coeff.dim(q + 1), coeff.dim(q), 32, "LHS vertical map");
    Matrix delta = coeff.coboundary(q);
    for (std::size_t p = 0; p <= p_max && p + q + 1 <= n_max; ++p) {
      budget.check_dense(dims[p][q + 1], dims[p][q], 32, "LHS vertical map");
      Matrix d0 = kronecker(Matrix::identity(f, power(nq, p)), delta);
      dc.set_vertical(p, q, p % 2 ? -d0 : d0);
    }
  }

  // bar coboundary of G/H with coefficients in A^q
  for (std::size_t p = 0; p < p_max; ++p)
    for (std::size_t q = 0; q <= q_max && p + q + 1 <= n_max; ++q) {
      std::size_t da = coeff.dim(q), in_tuples = power(nq, p), out_tuples = in_tuples * nq;
      budget.check_dense(out_tuples * da, in_tuples * da, 32, "LHS horizontal map");
      Matrix d1(f, out_tuples * da, in_tuples * da);
      std::vector<std::size_t> gs(p + 1);
      for (std::size_t x = 0; x < out_tuples; ++x) {
        for (std::size_t i = p + 1, rest = x; i-- > 0; rest /= nq) gs[i] = rest % nq;
        std::size_t row0 = x * da;
        coeff.add_action(d1, q, gs[0], row0, (x % in_tuples) * da);
        for (std::size_t i = 0; i < p; ++i) {
          std::size_t merged = 0;
          for (std::size_t s = 0; s <= p; ++s) {
            if (s == i + 1) continue;
            merged = merged * nq + (s == i ? qg.mul(gs[i], gs[i + 1]) : gs[s]);
          }
          long sign = (i + 1) % 2 ? -1 : 1;
          for (std::size_t a = 0; a < da; ++a) d1.add(row0 + a, merged * da + a, sign);
        }
        long sign = (p + 1) % 2 ? -1 : 1;
        for (std::size_t a = 0; a < da; ++a) d1.add(row0 + a, (x / nq) * da + a, sign);
      }
      dc.set_horizontal(p, q, std::move(d1));
    }
  return dc;
}

}  // namespace whlab
