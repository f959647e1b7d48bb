#include "whlab/words/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "whlab/core/errors.hpp"

namespace whlab {

GroupWord::GroupWord(std::vector<Letter> const& letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter exponent must be +1 or -1");
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

GroupWord GroupWord::generator(std::size_t gen, int sign) {
  return GroupWord({Letter{static_cast<std::uint16_t>(gen), static_cast<std::int8_t>(sign)}});
}

GroupWord GroupWord::power(std::size_t gen, long exponent) {
  Letter l{static_cast<std::uint16_t>(gen), static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
  return GroupWord(std::vector<Letter>(static_cast<std::size_t>(std::labs(exponent)), l));
}

std::size_t GroupWord::generator_bound() const {
  std::size_t bound = 0;
  for (Letter l : letters_) bound = std::max<std::size_t>(bound, l.gen + 1U);
  return bound;
}

GroupWord GroupWord::operator*(GroupWord const& other) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), other.letters_.begin(), other.letters_.end());
  return GroupWord(all);
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
  return out;
}

GroupWord GroupWord::prefix(std::size_t n) const {
  GroupWord out;
  out.letters_.assign(letters_.begin(), letters_.begin() + static_cast<long>(std::min(n, length())));
  return out;
}

std::string GroupWord::str(std::vector<std::string> const& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long exponent = static_cast<long>(j - i) * letters_[i].sign;
    if (!out.empty()) out += '*';
    std::size_t g = letters_[i].gen;
    out += g < names.size() ? names[g] : "g" + std::to_string(g);
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i = j;
  }
  return out;
}

GroupWord commutator(GroupWord const& u, GroupWord const& v) {
  return u * v * u.inverse() * v.inverse();
}

GroupRingElement GroupRingElement::of(GroupWord const& w, long coefficient) {
  GroupRingElement e;
  e.add_term(w, coefficient);
  return e;
}

void GroupRingElement::add_term(GroupWord const& w, mpz_class const& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(GroupRingElement const& other) const {
  GroupRingElement out = *this;
  for (auto const& [w, c] : other.terms_) out.add_term(w, c);
  return out;
}

GroupRingElement GroupRingElement::operator-(GroupRingElement const& other) const {
  GroupRingElement out = *this;
  for (auto const& [w, c] : other.terms_) out.add_term(w, -c);
  return out;
}

GroupRingElement GroupRingElement::operator*(GroupRingElement const& other) const {
  GroupRingElement out;
  for (auto const& [u, a] : terms_)
    for (auto const& [v, b] : other.terms_) out.add_term(u * v, a * b);
  return out;
}

std::string GroupRingElement::str(std::vector<std::string> const& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto const& [w, c] : terms_) {
    bool negative = c < 0;
    mpz_class mag = abs(c);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (w.is_identity()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += w.str(names);
    }
  }
  return out;
}

GroupRingElement fox_derivative(GroupWord const& w, std::size_t gen) {
  GroupRingElement out;
  auto const& letters = w.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].gen != gen) continue;
    if (letters[i].sign > 0) {
      out.add_term(w.prefix(i), 1);
    } else {
      out.add_term(w.prefix(i + 1), -1);
    }
  }
  return out;
}

}  // namespace whlab
