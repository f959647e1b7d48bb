#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "whlab/core/scalar.hpp"

namespace whlab {

/// Word in noncommuting letters 0..alphabet-1. The empty word is the unit.
using Monomial = std::vector<std::uint16_t>;

/// Degree first, then lexicographic.
struct MonomialLess {
  bool operator()(Monomial const& a, Monomial const& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

Monomial concat(Monomial const& a, Monomial const& b);
/// "1" for the unit, otherwise letters joined by '.', e.g. "X0.X1".
std::string monomial_str(Monomial const& m, std::string const& prefix = "X");
/// All monomials of the given degree in lexicographic order.
std::vector<Monomial> monomials_of_degree(std::size_t alphabet, std::size_t degree);

using Coefficients = std::map<Monomial, Scalar, MonomialLess>;

/// Noncommutative polynomial with every term of degree > cap discarded.
class TruncatedSeries {
 public:
  TruncatedSeries(Field field, std::size_t alphabet, std::size_t cap);

  static TruncatedSeries one(Field field, std::size_t alphabet, std::size_t cap);
  /// The single letter X_i.
  static TruncatedSeries letter(Field field, std::size_t alphabet, std::size_t cap, std::size_t i);
  static TruncatedSeries monomial(Field field, std::size_t alphabet, std::size_t cap,
                                  Monomial const& m, Scalar const& c);

  Field field() const noexcept { return field_; }
  std::size_t alphabet() const noexcept { return alphabet_; }
  std::size_t cap() const noexcept { return cap_; }
  Coefficients const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coefficient(Monomial const& m) const;
  Scalar constant_term() const { return coefficient({}); }
  /// Adds c * m; terms above the cap are dropped.
  void add_term(Monomial const& m, Scalar const& c);
  /// Lowest degree with a nonzero term; cap + 1 for the zero series.
  std::size_t valuation() const;

  TruncatedSeries operator+(TruncatedSeries const& other) const;
  TruncatedSeries operator-(TruncatedSeries const& other) const;
  TruncatedSeries operator-() const;
  TruncatedSeries operator*(TruncatedSeries const& other) const;
  TruncatedSeries scaled(Scalar const& s) const;
  TruncatedSeries pow(std::size_t n) const;
  friend bool operator==(TruncatedSeries const& a, TruncatedSeries const& b);

  /// Sum of a^n / n! for n <= cap. Needs zero constant term, and cap < p in
  /// characteristic p.
  TruncatedSeries exp() const;
  /// Sum of (-1)^(n+1) u^n / n for a = 1 + u. Needs constant term 1, and
  /// cap < p in characteristic p.
  TruncatedSeries log() const;
  /// Needs constant term 1.
  TruncatedSeries inverse() const;

  /// Canonical text: terms in (degree, lex) order, e.g. "1 + X0 + 1/2*X0.X0".
  std::string str(std::string const& prefix = "X") const;

 private:
  void require_compatible(TruncatedSeries const& other, char const* what) const;
  void require_small_degrees(char const* what) const;

  Field field_;
  std::size_t alphabet_;
  std::size_t cap_;
  Coefficients terms_;
};

/// Renders a scalar-weighted list of monomials in canonical form.
std::string render_terms(Coefficients const& terms, std::string const& prefix);

}  // namespace whlab
