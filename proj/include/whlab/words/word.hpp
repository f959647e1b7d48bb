#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace whlab {

struct Letter {
  std::uint16_t gen;
  std::int8_t sign;  // +1 or -1

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  friend auto operator<=>(Letter const&, Letter const&) = default;
};

/// Freely reduced word in a free group. The empty word is the identity.
class GroupWord {
 public:
  GroupWord() = default;
  /// Freely reduces the given letters.
  explicit GroupWord(std::vector<Letter> const& letters);

  static GroupWord generator(std::size_t gen, int sign = 1);
  /// Generator raised to an integer power.
  static GroupWord power(std::size_t gen, long exponent);

  std::vector<Letter> const& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  /// Largest generator index used plus one.
  std::size_t generator_bound() const;

  GroupWord operator*(GroupWord const& other) const;
  GroupWord inverse() const;
  /// First n letters.
  GroupWord prefix(std::size_t n) const;

  friend auto operator<=>(GroupWord const&, GroupWord const&) = default;
  friend bool operator==(GroupWord const&, GroupWord const&) = default;

  /// Runs collapse to powers: "x^2*y^-1"; the identity renders as "1".
  std::string str(std::vector<std::string> const& names) const;

 private:
  std::vector<Letter> letters_;
};

GroupWord commutator(GroupWord const& u, GroupWord const& v);

/// Element of the integral group ring of a free group.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement of(GroupWord const& w, long coefficient = 1);

  std::map<GroupWord, mpz_class> const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(GroupWord const& w, mpz_class const& c);

  GroupRingElement operator+(GroupRingElement const& other) const;
  GroupRingElement operator-(GroupRingElement const& other) const;
  GroupRingElement operator*(GroupRingElement const& other) const;
  friend bool operator==(GroupRingElement const&, GroupRingElement const&) = default;

  std::string str(std::vector<std::string> const& names) const;

 private:
  std::map<GroupWord, mpz_class> terms_;
};

/// Left Fox derivative: d(uv) = du + u dv, dx/dx = 1, dx^-1/dx = -x^-1.
GroupRingElement fox_derivative(GroupWord const& w, std::size_t gen);

}  // namespace whlab
