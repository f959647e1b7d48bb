#include "whlab/core/series.hpp"

#include "whlab/core/errors.hpp"

namespace whlab {

Monomial concat(Monomial const& a, Monomial const& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string monomial_str(Monomial const& m, std::string const& prefix) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += '.';
    out += prefix + std::to_string(m[i]);
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t alphabet, std::size_t degree) {
  std::vector<Monomial> out{Monomial{}};
  for (std::size_t d = 0; d < degree; ++d) {
    std::vector<Monomial> next;
    next.reserve(out.size() * alphabet);
    for (auto const& m : out)
      for (std::size_t a = 0; a < alphabet; ++a) {
        Monomial w = m;
        w.push_back(static_cast<std::uint16_t>(a));
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

TruncatedSeries::TruncatedSeries(Field field, std::size_t alphabet, std::size_t cap)
    : field_(field), alphabet_(alphabet), cap_(cap) {}

TruncatedSeries TruncatedSeries::one(Field field, std::size_t alphabet, std::size_t cap) {
  return monomial(field, alphabet, cap, {}, Scalar::one(field));
}

TruncatedSeries TruncatedSeries::letter(Field field, std::size_t alphabet, std::size_t cap,
                                        std::size_t i) {
  if (i >= alphabet) throw DomainError("letter index out of range");
  return monomial(field, alphabet, cap, Monomial{static_cast<std::uint16_t>(i)},
                  Scalar::one(field));
}

TruncatedSeries TruncatedSeries::monomial(Field field, std::size_t alphabet, std::size_t cap,
                                          Monomial const& m, Scalar const& c) {
  TruncatedSeries s(field, alphabet, cap);
  s.add_term(m, c);
  return s;
}

Scalar TruncatedSeries::coefficient(Monomial const& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void TruncatedSeries::add_term(Monomial const& m, Scalar const& c) {
  if (m.size() > cap_ || c.is_zero()) return;
  for (auto letter : m)
    if (letter >= alphabet_) throw DomainError("letter index out of range");
  if (c.field() != field_) throw FieldMismatch("term over " + c.field().name() + " in " + field_.name() + " series");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t TruncatedSeries::valuation() const {
  return terms_.empty() ? cap_ + 1 : terms_.begin()->first.size();
}

void TruncatedSeries::require_compatible(TruncatedSeries const& other, char const* what) const {
  if (field_ != other.field_)
    throw FieldMismatch(std::string(what) + " of series over " + field_.name() + " and " +
                        other.field_.name());
  if (alphabet_ != other.alphabet_ || cap_ != other.cap_)
    throw DomainError(std::string(what) + " of series with alphabet/cap " +
                      std::to_string(alphabet_) + "/" + std::to_string(cap_) + " and " +
                      std::to_string(other.alphabet_) + "/" + std::to_string(other.cap_));
}

TruncatedSeries TruncatedSeries::operator+(TruncatedSeries const& other) const {
  require_compatible(other, "sum");
  TruncatedSeries out = *this;
  for (auto const& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

TruncatedSeries TruncatedSeries::operator-(TruncatedSeries const& other) const {
  return *this + (-other);
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

TruncatedSeries TruncatedSeries::operator*(TruncatedSeries const& other) const {
  require_compatible(other, "product");
  TruncatedSeries out(field_, alphabet_, cap_);
  for (auto const& [u, a] : terms_)
    for (auto const& [v, b] : other.terms_) {
      if (u.size() + v.size() > cap_) break;  // degrees of v only increase
      out.add_term(concat(u, v), a * b);
    }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(Scalar const& s) const {
  TruncatedSeries out(field_, alphabet_, cap_);
  for (auto const& [m, c] : terms_) out.add_term(m, c * s);
  return out;
}

TruncatedSeries TruncatedSeries::pow(std::size_t n) const {
  TruncatedSeries out = one(field_, alphabet_, cap_);
  for (std::size_t i = 0; i < n; ++i) out = out * *this;
  return out;
}

bool operator==(TruncatedSeries const& a, TruncatedSeries const& b) {
  return a.field_ == b.field_ && a.alphabet_ == b.alphabet_ && a.cap_ == b.cap_ &&
         a.terms_ == b.terms_;
}

void TruncatedSeries::require_small_degrees(char const* what) const {
  auto p = field_.characteristic();
  if (p != 0 && cap_ >= p)
    throw DomainError(std::string(what) + " needs division by " + std::to_string(p) +
                      " at truncation " + std::to_string(cap_) + " in " + field_.name());
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!constant_term().is_zero()) throw DomainError("exp needs a zero constant term");
  require_small_degrees("exp");
  TruncatedSeries out = one(field_, alphabet_, cap_);
  TruncatedSeries power = out;
  for (std::size_t n = 1; n <= cap_ && !power.is_zero(); ++n) {
    power = (power * *this).scaled(Scalar(field_, static_cast<long>(n)).inverse());
    out = out + power;
  }
  return out;
}

TruncatedSeries TruncatedSeries::log() const {
  if (!constant_term().is_one()) throw DomainError("log needs constant term 1");
  require_small_degrees("log");
  TruncatedSeries u = *this - one(field_, alphabet_, cap_);
  TruncatedSeries out(field_, alphabet_, cap_);
  TruncatedSeries power = one(field_, alphabet_, cap_);
  for (std::size_t n = 1; n <= cap_; ++n) {
    power = power * u;
    if (power.is_zero()) break;
    long sign = n % 2 ? 1 : -1;
    out = out + power.scaled(Scalar(field_, sign) / Scalar(field_, static_cast<long>(n)));
  }
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (!constant_term().is_one()) throw DomainError("inverse needs constant term 1");
  TruncatedSeries neg_u = one(field_, alphabet_, cap_) - *this;
  TruncatedSeries out = one(field_, alphabet_, cap_);
  TruncatedSeries power = out;
  for (std::size_t n = 1; n <= cap_; ++n) {
    power = power * neg_u;
    if (power.is_zero()) break;
    out = out + power;
  }
  return out;
}

std::string render_terms(Coefficients const& terms, std::string const& prefix) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto const& [m, c] : terms) {
    bool negative = c.field().is_rational() && sgn(c.rational()) < 0;
    Scalar mag = negative ? -c : c;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += monomial_str(m, prefix);
    } else {
      out += mag.str() + "*" + monomial_str(m, prefix);
    }
  }
  return out;
}

std::string TruncatedSeries::str(std::string const& prefix) const {
  return render_terms(terms_, prefix);
}

}  // namespace whlab
