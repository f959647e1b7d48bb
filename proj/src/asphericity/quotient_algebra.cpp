#include "whlab/asphericity/quotient_algebra.hpp"

#include <deque>
#include <limits>
#include <string>

#include "whlab/hopf/tensor_hopf.hpp"

namespace whlab {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

}  // namespace

QuotientAlgebra::QuotientAlgebra(Presentation const& presentation, Field field, std::size_t cap,
                                 Budget const& budget)
    : presentation_(presentation), field_(field), cap_(cap), alphabet_(presentation.generators.size()) {
  presentation_.validate();
  presentation_.field = field;
  presentation_.truncation = cap;
  if (cap == 0) throw DomainError("truncation cap must be at least 1");

  offsets_.push_back(0);
  std::size_t layer = 1;
  for (std::size_t d = 0; d <= cap; ++d) {
    budget.check(offsets_.back() + layer, "monomials of degree <= " + std::to_string(cap));
    offsets_.push_back(offsets_.back() + layer);
    layer *= std::max<std::size_t>(alphabet_, 1);
    if (alphabet_ == 0) layer = 0;
  }
  std::size_t total = offsets_.back();

  std::vector<Monomial> monomials(total);
  for (std::size_t d = 0; d <= cap; ++d)
    for (std::size_t idx = offsets_[d]; idx < offsets_[d + 1]; ++idx) {
      Monomial m(d);
      std::size_t r = idx - offsets_[d];
      for (std::size_t i = d; i-- > 0;) {
        m[i] = static_cast<std::uint16_t>(r % alphabet_);
        r /= alphabet_;
      }
      monomials[idx] = std::move(m);
    }

  auto to_vector = [&](TruncatedSeries const& s) {
    SparseVector v;
    for (auto const& [m, c] : s.terms()) v.emplace(monomial_index(m), c);
    return v;
  };
  auto shift = [&](SparseVector const& v, std::uint16_t letter, bool on_left) {
    SparseVector out;
    for (auto const& [idx, c] : v) {
      Monomial const& m = monomials[idx];
      if (m.size() >= cap) continue;
      Monomial mm = on_left ? concat(Monomial{letter}, m) : concat(m, Monomial{letter});
      out.emplace(monomial_index(mm), c);
    }
    return out;
  };

  // close the span of {magnus(r) - 1} under multiplication by letters on both sides
  SparseEchelon ideal(field);
  std::deque<SparseVector> queue;
  TruncatedSeries unit = TruncatedSeries::one(field, alphabet_, cap);
  for (auto const& r : presentation_.relators)
    queue.push_back(to_vector(magnus_embed(r.word, field, alphabet_, cap) - unit));
  while (!queue.empty()) {
    SparseVector v = ideal.reduce(std::move(queue.front()));
    queue.pop_front();
    if (v.empty()) continue;
    for (std::uint16_t i = 0; i < alphabet_; ++i) {
      queue.push_back(shift(v, i, true));
      queue.push_back(shift(v, i, false));
    }
    ideal.insert(std::move(v));
  }
  ideal.interreduce();

  position_.assign(total, npos);
  for (std::size_t idx = 0; idx < total; ++idx)
    if (!ideal.is_pivot(idx)) {
      position_[idx] = basis_.size();
      basis_.push_back(monomials[idx]);
    }
  reduction_.resize(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (position_[idx] != npos) {
      reduction_[idx].emplace(position_[idx], Scalar::one(field));
      continue;
    }
    for (auto const& [j, c] : ideal.rows().at(idx))
      if (j != idx) reduction_[idx].emplace(position_[j], -c);
  }
}

std::size_t QuotientAlgebra::monomial_index(Monomial const& m) const {
  std::size_t r = 0;
  for (auto l : m) r = r * alphabet_ + l;
  return offsets_[m.size()] + r;
}

std::size_t QuotientAlgebra::dimension_through(std::size_t k) const {
  std::size_t count = 0;
  for (auto const& m : basis_) count += m.size() <= k;
  return count;
}

TruncatedSeries QuotientAlgebra::zero() const { return TruncatedSeries(field_, alphabet_, cap_); }
TruncatedSeries QuotientAlgebra::one() const { return normal_form(TruncatedSeries::one(field_, alphabet_, cap_)); }

SparseVector QuotientAlgebra::coordinates(TruncatedSeries const& s) const {
  if (s.alphabet() != alphabet_ || s.cap() != cap_ || s.field() != field_)
    throw DomainError("series does not belong to this quotient algebra");
  SparseVector out;
  for (auto const& [m, c] : s.terms()) axpy(out, c, reduction_[monomial_index(m)]);
  return out;
}

TruncatedSeries QuotientAlgebra::element(SparseVector const& coordinates) const {
  TruncatedSeries out = zero();
  for (auto const& [pos, c] : coordinates) out.add_term(basis_.at(pos), c);
  return out;
}

TruncatedSeries QuotientAlgebra::normal_form(TruncatedSeries const& s) const { return element(coordinates(s)); }

TruncatedSeries QuotientAlgebra::multiply(TruncatedSeries const& a, TruncatedSeries const& b) const {
  return normal_form(a * b);
}

TruncatedSeries QuotientAlgebra::project(GroupWord const& w) const {
  if (w.generator_bound() > alphabet_) throw DomainError("word uses generators outside the presentation");
  return normal_form(magnus_embed(w, field_, alphabet_, cap_));
}

TruncatedSeries QuotientAlgebra::project(GroupRingElement const& e) const {
  TruncatedSeries out = zero();
  for (auto const& [w, c] : e.terms()) out = out + project(w).scaled(Scalar(field_, c));
  return out;
}

std::size_t QuotientAlgebra::valuation(TruncatedSeries const& s) const {
  std::size_t v = cap_ + 1;
  for (auto const& [pos, c] : coordinates(s)) v = std::min(v, basis_[pos].size());
  return v;
}

SparseVector QuotientAlgebra::basis_times(std::size_t k, TruncatedSeries const& s) const {
  SparseVector out;
  Monomial const& b = basis_.at(k);
  for (auto const& [m, c] : s.terms()) {
    if (b.size() + m.size() > cap_) continue;
    axpy(out, c, reduction_[monomial_index(concat(b, m))]);
  }
  return out;
}

}  // namespace whlab
