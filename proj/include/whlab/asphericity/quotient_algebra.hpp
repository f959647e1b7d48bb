#pragma once

#include <cstddef>
#include <vector>

#include "whlab/core/errors.hpp"
#include "whlab/core/series.hpp"
#include "whlab/core/sparse.hpp"
#include "whlab/words/presentation.hpp"
#include "whlab/words/word.hpp"

namespace whlab {

/// A = k<X>/(degree > N, two-sided ideal of {magnus(r) - 1}): the completed
/// group algebra of a presented group truncated at degree N.
///
/// Elements are TruncatedSeries in normal form, i.e. supported on the
/// standard monomials. Each ideal element is solved for its lowest monomial in
/// (degree, lex) order, so the standard monomials of degree >= k span the k-th
/// power of the augmentation ideal.
class QuotientAlgebra {
 public:
  QuotientAlgebra(Presentation const& presentation, Field field, std::size_t cap,
                  Budget const& budget = Budget::from_environment());

  Field field() const noexcept { return field_; }
  std::size_t cap() const noexcept { return cap_; }
  std::size_t alphabet() const noexcept { return alphabet_; }
  Presentation const& presentation() const noexcept { return presentation_; }

  std::size_t dimension() const noexcept { return basis_.size(); }
  /// Standard monomials in (degree, lex) order; basis()[0] is the unit.
  std::vector<Monomial> const& basis() const noexcept { return basis_; }
  /// Number of standard monomials of degree <= k.
  std::size_t dimension_through(std::size_t k) const;

  TruncatedSeries zero() const;
  TruncatedSeries one() const;
  TruncatedSeries normal_form(TruncatedSeries const& s) const;
  TruncatedSeries multiply(TruncatedSeries const& a, TruncatedSeries const& b) const;
  /// Magnus image of a word, reduced.
  TruncatedSeries project(GroupWord const& w) const;
  TruncatedSeries project(GroupRingElement const& e) const;

  /// Coordinates of the normal form over basis().
  SparseVector coordinates(TruncatedSeries const& s) const;
  TruncatedSeries element(SparseVector const& coordinates) const;
  /// Lowest degree present in the normal form; cap() + 1 for zero.
  std::size_t valuation(TruncatedSeries const& s) const;

  /// Coordinates of basis()[k] * s.
  SparseVector basis_times(std::size_t k, TruncatedSeries const& s) const;

 private:
  std::size_t monomial_index(Monomial const& m) const;

  Presentation presentation_;
  Field field_;
  std::size_t cap_;
  std::size_t alphabet_;
  std::vector<std::size_t> offsets_;     // index of the first monomial of each degree
  std::vector<std::size_t> position_;    // monomial index -> basis position or npos
  std::vector<SparseVector> reduction_;  // monomial index -> normal form over basis positions
  std::vector<Monomial> basis_;
};

}  // namespace whlab
