#include "whlab/core/scalar.hpp"

#include <charconv>
#include <ostream>

#include "whlab/core/errors.hpp"

namespace whlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p)) {
    throw DomainError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "Q") return rationals();
  if (spec.size() >= 2 && spec.front() == 'F') {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(spec.data() + 1, spec.data() + spec.size(), p);
    if (ec == std::errc() && ptr == spec.data() + spec.size()) return prime(p);
  }
  throw DomainError("unknown field '" + std::string(spec) + "' (expected Q or F<p>)");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

namespace detail {

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("division by zero in F" + std::to_string(p));
  // extended Euclid on signed 64-bit values
  long long t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return mod_reduce(t, p);
}

}  // namespace detail

Scalar::Scalar(Field field, long value) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = Residue{detail::mod_reduce(value, field.characteristic()), field.characteristic()};
  }
}

Scalar::Scalar(Field field, mpz_class const& value) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    mpz_class r = value % field.characteristic();
    if (r < 0) r += field.characteristic();
    value_ = Residue{static_cast<std::uint32_t>(r.get_ui()), field.characteristic()};
  }
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::residue(std::uint64_t value, std::uint32_t p) {
  Scalar s;
  s.value_ = Residue{static_cast<std::uint32_t>(value % p), p};
  return s;
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("not a number: '" + s + "'");
  q.canonicalize();
  if (field.is_rational()) return Scalar(q);
  Scalar num(field, mpz_class(q.get_num()));
  Scalar den(field, mpz_class(q.get_den()));
  return num / den;
}

Field Scalar::field() const noexcept {
  if (auto const* r = std::get_if<Residue>(&value_)) return Field::prime(r->p);
  return Field::rationals();
}

bool Scalar::is_zero() const noexcept {
  if (auto const* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto const* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

mpq_class const& Scalar::rational() const {
  if (auto const* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("scalar is not rational");
}

std::uint32_t Scalar::residue_value() const {
  if (auto const* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldMismatch("scalar is not a residue");
}

void Scalar::require_same_field(Scalar const& other) const {
  auto const* a = std::get_if<Residue>(&value_);
  auto const* b = std::get_if<Residue>(&other.value_);
  if ((a == nullptr) != (b == nullptr) || (a && a->p != b->p)) {
    throw FieldMismatch("arithmetic between " + field().name() + " and " + other.field().name());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    r->value = r->value == 0 ? 0 : r->p - r->value;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator+=(Scalar const& other) {
  require_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = detail::mod_add(r->value, std::get<Residue>(other.value_).value, r->p);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(Scalar const& other) {
  require_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = detail::mod_sub(r->value, std::get<Residue>(other.value_).value, r->p);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(Scalar const& other) {
  require_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = detail::mod_mul(r->value, std::get<Residue>(other.value_).value, r->p);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(Scalar const& other) { return *this *= other.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    r->value = detail::mod_inv(r->value, r->p);
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  }
  return out;
}

bool operator==(Scalar const& a, Scalar const& b) {
  a.require_same_field(b);
  if (auto const* r = std::get_if<Scalar::Residue>(&a.value_)) {
    return r->value == std::get<Scalar::Residue>(b.value_).value;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::str() const {
  if (auto const* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, Scalar const& s) { return os << s.str(); }

}  // namespace whlab
