#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "whlab/core/scalar.hpp"
#include "whlab/core/series.hpp"
#include "whlab/words/word.hpp"

namespace whlab {

/// Element of the tensor algebra on letters e0, e1, ... equipped with the
/// shuffle product and the deconcatenation coproduct.
class TensorHopfElement {
 public:
  TensorHopfElement(Field field, std::size_t alphabet);

  static TensorHopfElement unit(Field field, std::size_t alphabet);
  static TensorHopfElement word(Field field, std::size_t alphabet, Monomial const& w,
                                Scalar const& c);
  /// Word spelled in single-character letters; letter i of the alphabet is
  /// letters[i].
  static TensorHopfElement from_letters(Field field, std::string const& letters,
                                        std::string const& w);

  Field field() const noexcept { return field_; }
  std::size_t alphabet() const noexcept { return alphabet_; }
  Coefficients const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(Monomial const& m) const;
  void add_term(Monomial const& m, Scalar const& c);

  TensorHopfElement operator+(TensorHopfElement const& other) const;
  TensorHopfElement operator-(TensorHopfElement const& other) const;
  TensorHopfElement scaled(Scalar const& s) const;
  friend bool operator==(TensorHopfElement const&, TensorHopfElement const&) = default;

  void require_compatible(TensorHopfElement const& other) const;

  /// Canonical text. With a letter string, words print as "abxy"; otherwise
  /// as "e0.e1". The empty word prints as "1".
  std::string str(std::string const& letters = "") const;

 private:
  Field field_;
  std::size_t alphabet_;
  Coefficients terms_;
};

/// Formal sum of k-fold tensors of monomials.
class TensorPower {
 public:
  using Key = std::vector<Monomial>;

  TensorPower(Field field, std::size_t alphabet, std::size_t factors);

  Field field() const noexcept { return field_; }
  std::size_t alphabet() const noexcept { return alphabet_; }
  std::size_t factors() const noexcept { return factors_; }
  std::map<Key, Scalar> const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(Key const& key, Scalar const& c);
  Scalar coefficient(Key const& key) const;

  TensorPower operator+(TensorPower const& other) const;
  TensorPower operator-(TensorPower const& other) const;
  friend bool operator==(TensorPower const&, TensorPower const&) = default;

  std::string str(std::string const& prefix = "e") const;

 private:
  Field field_;
  std::size_t alphabet_;
  std::size_t factors_;
  std::map<Key, Scalar> terms_;
};

/// Shuffle of two words, computed by the inductive rule
/// ua o vb = (u o vb)a + (ua o v)b.
Coefficients shuffle_words(Field field, Monomial const& u, Monomial const& v);
TensorHopfElement shuffle(TensorHopfElement const& a, TensorHopfElement const& b);
/// Infiltration product: the shuffle plus the terms where equal last letters
/// merge, ua ^ vb = (u ^ vb)a + (ua ^ v)b + [a = b](u ^ v)a.
Coefficients infiltrate_words(Field field, Monomial const& u, Monomial const& v);
TensorHopfElement infiltration(TensorHopfElement const& a, TensorHopfElement const& b);

/// Sum over splittings w = jk of e_j (x) e_k.
TensorPower deconcatenate(TensorHopfElement const& a);
TensorHopfElement antipode(TensorHopfElement const& a);
/// Coefficient of the empty word.
Scalar counit(TensorHopfElement const& a);

TensorPower as_tensor(TensorHopfElement const& a);
TensorHopfElement from_tensor(TensorPower const& t);
/// Applies the coproduct to factor i of every term.
TensorPower coproduct_at(TensorPower const& t, std::size_t i);
/// Applies the counit to factor i, removing that factor.
TensorPower counit_at(TensorPower const& t, std::size_t i);
/// Applies the antipode to factor i.
TensorPower antipode_at(TensorPower const& t, std::size_t i);
/// Shuffles factors i and i+1 together.
TensorPower shuffle_at(TensorPower const& t, std::size_t i);
/// Factorwise shuffle of two tensors with the same number of factors.
TensorPower shuffle_tensors(TensorPower const& a, TensorPower const& b);

/// Dual-basis pairing <e_I, X_J> = [I = J].
Scalar pairing(TensorHopfElement const& a, TruncatedSeries const& f);
Scalar pairing(TensorPower const& a, TensorPower const& f);
/// u (x) v for series, all terms kept (total degree at most 2N).
TensorPower series_tensor(TruncatedSeries const& u, TruncatedSeries const& v);

enum class SeriesCoproduct {
  primitive,  // X -> X(x)1 + 1(x)X, dual to the shuffle product
  grouplike,  // X -> X(x)1 + 1(x)X + X(x)X, dual to the infiltration product
};

/// Algebra map on series determined by its value on letters; terms of total
/// degree above the cap are dropped, since those are the ones the truncation
/// of the argument leaves undetermined.
TensorPower series_coproduct(TruncatedSeries const& f, SeriesCoproduct kind);

/// Image of a free-group word in truncated series: generators go to exp(X)
/// over Q and to 1 + X over F_p (inverses to the geometric series).
TruncatedSeries magnus_embed(GroupWord const& w, Field field, std::size_t alphabet,
                             std::size_t cap);

}  // namespace whlab
