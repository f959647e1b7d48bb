#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace whlab {

/// The base field: either the rationals or a prime field F_p (p < 2^31).
class Field {
 public:
  Field() = default;

  static Field rationals() noexcept { return Field(0); }
  /// Throws DomainError unless p is prime.
  static Field prime(std::uint32_t p);
  /// Parses "Q" or "F<p>" (e.g. "F2").
  static Field parse(std::string_view spec);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact element of Q or F_p. Rationals are kept in lowest terms with a
/// positive denominator (mpq canonical form); residues lie in [0, p).
/// Arithmetic between different fields throws FieldMismatch.
class Scalar {
 public:
  /// Zero of Q.
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, mpz_class const& value);
  explicit Scalar(mpq_class value);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }
  static Scalar residue(std::uint64_t value, std::uint32_t p);
  /// Parses an integer or a fraction "a/b" into the given field.
  static Scalar parse(Field field, std::string_view text);

  Field field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  mpq_class const& rational() const;
  std::uint32_t residue_value() const;

  Scalar operator-() const;
  Scalar& operator+=(Scalar const& other);
  Scalar& operator-=(Scalar const& other);
  Scalar& operator*=(Scalar const& other);
  Scalar& operator/=(Scalar const& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, Scalar const& b) { return a += b; }
  friend Scalar operator-(Scalar a, Scalar const& b) { return a -= b; }
  friend Scalar operator*(Scalar a, Scalar const& b) { return a *= b; }
  friend Scalar operator/(Scalar a, Scalar const& b) { return a /= b; }
  friend bool operator==(Scalar const& a, Scalar const& b);

  /// "3", "-1/2" over Q; "0".."p-1" over F_p.
  std::string str() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
  };

  void require_same_field(Scalar const& other) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, Scalar const& s);

namespace detail {

inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);

inline std::uint32_t mod_reduce(long long v, std::uint32_t p) noexcept {
  long long r = v % static_cast<long long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace detail

}  // namespace whlab
