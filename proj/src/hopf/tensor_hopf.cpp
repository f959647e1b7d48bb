#include "whlab/hopf/tensor_hopf.hpp"

#include <algorithm>

#include "whlab/core/errors.hpp"

namespace whlab {

namespace {

void add_to(Coefficients& terms, Monomial const& m, Scalar const& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Coefficients append_letter(Coefficients const& in, std::uint16_t letter) {
  Coefficients out;
  for (auto const& [m, c] : in) {
    Monomial w = m;
    w.push_back(letter);
    out.emplace(std::move(w), c);
  }
  return out;
}

void require_alphabet(std::size_t alphabet, Monomial const& m) {
  for (auto l : m)
    if (l >= alphabet) throw DomainError("letter index out of range");
}

}  // namespace

TensorHopfElement::TensorHopfElement(Field field, std::size_t alphabet)
    : field_(field), alphabet_(alphabet) {}

TensorHopfElement TensorHopfElement::unit(Field field, std::size_t alphabet) {
  return word(field, alphabet, {}, Scalar::one(field));
}

TensorHopfElement TensorHopfElement::word(Field field, std::size_t alphabet, Monomial const& w,
                                          Scalar const& c) {
  TensorHopfElement e(field, alphabet);
  e.add_term(w, c);
  return e;
}

TensorHopfElement TensorHopfElement::from_letters(Field field, std::string const& letters,
                                                  std::string const& w) {
  Monomial m;
  for (char ch : w) {
    auto pos = letters.find(ch);
    if (pos == std::string::npos) throw DomainError(std::string("letter '") + ch + "' not in alphabet");
    m.push_back(static_cast<std::uint16_t>(pos));
  }
  return word(field, letters.size(), m, Scalar::one(field));
}

Scalar TensorHopfElement::coefficient(Monomial const& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void TensorHopfElement::add_term(Monomial const& m, Scalar const& c) {
  require_alphabet(alphabet_, m);
  if (c.field() != field_) throw FieldMismatch("term over " + c.field().name() + " in " + field_.name() + " element");
  add_to(terms_, m, c);
}

void TensorHopfElement::require_compatible(TensorHopfElement const& other) const {
  if (field_ != other.field_) throw FieldMismatch("elements over " + field_.name() + " and " + other.field_.name());
  if (alphabet_ != other.alphabet_) throw DomainError("alphabet mismatch");
}

TensorHopfElement TensorHopfElement::operator+(TensorHopfElement const& other) const {
  require_compatible(other);
  TensorHopfElement out = *this;
  for (auto const& [m, c] : other.terms_) add_to(out.terms_, m, c);
  return out;
}

TensorHopfElement TensorHopfElement::operator-(TensorHopfElement const& other) const {
  return *this + other.scaled(Scalar(field_, -1L));
}

TensorHopfElement TensorHopfElement::scaled(Scalar const& s) const {
  TensorHopfElement out(field_, alphabet_);
  for (auto const& [m, c] : terms_) add_to(out.terms_, m, c * s);
  return out;
}

std::string TensorHopfElement::str(std::string const& letters) const {
  if (letters.empty()) return render_terms(terms_, "e");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto const& [m, c] : terms_) {
    bool negative = c.field().is_rational() && sgn(c.rational()) < 0;
    Scalar mag = negative ? -c : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string w;
    for (auto l : m) w += letters.at(l);
    if (m.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += w;
    } else {
      out += mag.str() + "*" + w;
    }
  }
  return out;
}

TensorPower::TensorPower(Field field, std::size_t alphabet, std::size_t factors)
    : field_(field), alphabet_(alphabet), factors_(factors) {}

void TensorPower::add_term(Key const& key, Scalar const& c) {
  if (key.size() != factors_) throw DomainError("tensor key has the wrong number of factors");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar TensorPower::coefficient(Key const& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

TensorPower TensorPower::operator+(TensorPower const& other) const {
  if (factors_ != other.factors_ || alphabet_ != other.alphabet_) throw DomainError("tensor shape mismatch");
  TensorPower out = *this;
  for (auto const& [k, c] : other.terms_) out.add_term(k, c);
  return out;
}

TensorPower TensorPower::operator-(TensorPower const& other) const {
  if (factors_ != other.factors_ || alphabet_ != other.alphabet_) throw DomainError("tensor shape mismatch");
  TensorPower out = *this;
  for (auto const& [k, c] : other.terms_) out.add_term(k, -c);
  return out;
}

std::string TensorPower::str(std::string const& prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto const& [key, c] : terms_) {
    bool negative = c.field().is_rational() && sgn(c.rational()) < 0;
    Scalar mag = negative ? -c : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (!mag.is_one()) out += mag.str() + "*";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) out += " (x) ";
      out += monomial_str(key[i], prefix);
    }
  }
  return out;
}

Coefficients shuffle_words(Field field, Monomial const& u, Monomial const& v) {
  if (u.empty() || v.empty()) {
    Coefficients out;
    out.emplace(u.empty() ? v : u, Scalar::one(field));
    return out;
  }
  Monomial u0(u.begin(), u.end() - 1), v0(v.begin(), v.end() - 1);
  Coefficients out = append_letter(shuffle_words(field, u0, v), u.back());
  for (auto const& [m, c] : append_letter(shuffle_words(field, u, v0), v.back())) add_to(out, m, c);
  return out;
}

Coefficients infiltrate_words(Field field, Monomial const& u, Monomial const& v) {
  if (u.empty() || v.empty()) {
    Coefficients out;
    out.emplace(u.empty() ? v : u, Scalar::one(field));
    return out;
  }
  Monomial u0(u.begin(), u.end() - 1), v0(v.begin(), v.end() - 1);
  Coefficients out = append_letter(infiltrate_words(field, u0, v), u.back());
  for (auto const& [m, c] : append_letter(infiltrate_words(field, u, v0), v.back())) add_to(out, m, c);
  if (u.back() == v.back())
    for (auto const& [m, c] : append_letter(infiltrate_words(field, u0, v0), u.back())) add_to(out, m, c);
  return out;
}

namespace {

template <class WordProduct>
TensorHopfElement bilinear(TensorHopfElement const& a, TensorHopfElement const& b,
                           WordProduct product) {
  a.require_compatible(b);
  TensorHopfElement out(a.field(), a.alphabet());
  for (auto const& [u, x] : a.terms())
    for (auto const& [v, y] : b.terms())
      for (auto const& [w, c] : product(a.field(), u, v)) out.add_term(w, x * y * c);
  return out;
}

}  // namespace

TensorHopfElement shuffle(TensorHopfElement const& a, TensorHopfElement const& b) {
  return bilinear(a, b, shuffle_words);
}

TensorHopfElement infiltration(TensorHopfElement const& a, TensorHopfElement const& b) {
  return bilinear(a, b, infiltrate_words);
}

TensorPower as_tensor(TensorHopfElement const& a) {
  TensorPower t(a.field(), a.alphabet(), 1);
  for (auto const& [m, c] : a.terms()) t.add_term({m}, c);
  return t;
}

TensorHopfElement from_tensor(TensorPower const& t) {
  if (t.factors() != 1) throw DomainError("expected a single tensor factor");
  TensorHopfElement a(t.field(), t.alphabet());
  for (auto const& [k, c] : t.terms()) a.add_term(k[0], c);
  return a;
}

TensorPower coproduct_at(TensorPower const& t, std::size_t i) {
  TensorPower out(t.field(), t.alphabet(), t.factors() + 1);
  for (auto const& [key, c] : t.terms()) {
    Monomial const& w = key[i];
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      TensorPower::Key k;
      k.insert(k.end(), key.begin(), key.begin() + static_cast<long>(i));
      k.emplace_back(w.begin(), w.begin() + static_cast<long>(cut));
      k.emplace_back(w.begin() + static_cast<long>(cut), w.end());
      k.insert(k.end(), key.begin() + static_cast<long>(i) + 1, key.end());
      out.add_term(k, c);
    }
  }
  return out;
}

TensorPower counit_at(TensorPower const& t, std::size_t i) {
  TensorPower out(t.field(), t.alphabet(), t.factors() - 1);
  for (auto const& [key, c] : t.terms()) {
    if (!key[i].empty()) continue;
    TensorPower::Key k = key;
    k.erase(k.begin() + static_cast<long>(i));
    out.add_term(k, c);
  }
  return out;
}

TensorPower antipode_at(TensorPower const& t, std::size_t i) {
  TensorPower out(t.field(), t.alphabet(), t.factors());
  for (auto const& [key, c] : t.terms()) {
    TensorPower::Key k = key;
    std::reverse(k[i].begin(), k[i].end());
    out.add_term(k, k[i].size() % 2 ? -c : c);
  }
  return out;
}

TensorPower shuffle_at(TensorPower const& t, std::size_t i) {
  TensorPower out(t.field(), t.alphabet(), t.factors() - 1);
  for (auto const& [key, c] : t.terms()) {
    for (auto const& [w, s] : shuffle_words(t.field(), key[i], key[i + 1])) {
      TensorPower::Key k;
      k.insert(k.end(), key.begin(), key.begin() + static_cast<long>(i));
      k.push_back(w);
      k.insert(k.end(), key.begin() + static_cast<long>(i) + 2, key.end());
      out.add_term(k, c * s);
    }
  }
  return out;
}

TensorPower shuffle_tensors(TensorPower const& a, TensorPower const& b) {
  if (a.factors() != b.factors()) throw DomainError("tensor shape mismatch");
  TensorPower out(a.field(), a.alphabet(), a.factors());
  for (auto const& [ka, x] : a.terms())
    for (auto const& [kb, y] : b.terms()) {
      // expand the factorwise shuffles one factor at a time
      std::map<TensorPower::Key, Scalar> partial{{TensorPower::Key{}, x * y}};
      for (std::size_t f = 0; f < a.factors(); ++f) {
        std::map<TensorPower::Key, Scalar> next;
        auto sh = shuffle_words(a.field(), ka[f], kb[f]);
        for (auto const& [k, c] : partial)
          for (auto const& [w, s] : sh) {
            TensorPower::Key nk = k;
            nk.push_back(w);
            auto [it, inserted] = next.emplace(nk, c * s);
            if (!inserted) it->second += c * s;
          }
        partial = std::move(next);
      }
      for (auto const& [k, c] : partial) out.add_term(k, c);
    }
  return out;
}

TensorPower deconcatenate(TensorHopfElement const& a) { return coproduct_at(as_tensor(a), 0); }

TensorHopfElement antipode(TensorHopfElement const& a) {
  return from_tensor(antipode_at(as_tensor(a), 0));
}

Scalar counit(TensorHopfElement const& a) { return a.coefficient({}); }

Scalar pairing(TensorHopfElement const& a, TruncatedSeries const& f) {
  if (a.field() != f.field()) throw FieldMismatch("pairing over " + a.field().name() + " and " + f.field().name());
  if (a.alphabet() != f.alphabet()) throw DomainError("pairing with mismatched alphabets");
  Scalar out = Scalar::zero(a.field());
  for (auto const& [m, c] : a.terms()) {
    if (m.size() > f.cap()) throw DomainError("pairing a word of degree " + std::to_string(m.size()) + " with a series truncated at " + std::to_string(f.cap()));
    out += c * f.coefficient(m);
  }
  return out;
}

Scalar pairing(TensorPower const& a, TensorPower const& f) {
  if (a.field() != f.field()) throw FieldMismatch("pairing over " + a.field().name() + " and " + f.field().name());
  if (a.alphabet() != f.alphabet() || a.factors() != f.factors()) throw DomainError("pairing with mismatched tensor shapes");
  Scalar out = Scalar::zero(a.field());
  for (auto const& [k, c] : a.terms()) out += c * f.coefficient(k);
  return out;
}

TensorPower series_tensor(TruncatedSeries const& u, TruncatedSeries const& v) {
  if (u.field() != v.field()) throw FieldMismatch("tensor of series over different fields");
  if (u.alphabet() != v.alphabet()) throw DomainError("tensor of series with mismatched alphabets");
  TensorPower out(u.field(), u.alphabet(), 2);
  for (auto const& [a, x] : u.terms())
    for (auto const& [b, y] : v.terms()) out.add_term({a, b}, x * y);
  return out;
}

TensorPower series_coproduct(TruncatedSeries const& f, SeriesCoproduct kind) {
  TensorPower out(f.field(), f.alphabet(), 2);
  std::size_t cap = f.cap();
  for (auto const& [m, c] : f.terms()) {
    std::map<TensorPower::Key, Scalar> partial{{TensorPower::Key{Monomial{}, Monomial{}}, c}};
    for (auto letter : m) {
      std::map<TensorPower::Key, Scalar> next;
      auto push = [&](TensorPower::Key k, Scalar const& s) {
        if (k[0].size() + k[1].size() > cap) return;
        auto [it, inserted] = next.emplace(std::move(k), s);
        if (!inserted) it->second += s;
      };
      for (auto const& [k, s] : partial) {
        auto left = k, right = k, both = k;
        left[0].push_back(letter);
        right[1].push_back(letter);
        push(left, s);
        push(right, s);
        if (kind == SeriesCoproduct::grouplike) {
          both[0].push_back(letter);
          both[1].push_back(letter);
          push(both, s);
        }
      }
      partial = std::move(next);
    }
    for (auto const& [k, s] : partial) out.add_term(k, s);
  }
  return out;
}

TruncatedSeries magnus_embed(GroupWord const& w, Field field, std::size_t alphabet,
                             std::size_t cap) {
  if (w.generator_bound() > alphabet) throw DomainError("word uses a generator outside the alphabet");
  std::map<std::pair<std::uint16_t, int>, TruncatedSeries> images;
  auto image = [&](Letter l) -> TruncatedSeries const& {
    auto key = std::make_pair(l.gen, static_cast<int>(l.sign));
    auto it = images.find(key);
    if (it != images.end()) return it->second;
    TruncatedSeries x = TruncatedSeries::letter(field, alphabet, cap, l.gen);
    TruncatedSeries one = TruncatedSeries::one(field, alphabet, cap);
    TruncatedSeries img(field, alphabet, cap);
    if (field.is_rational()) {
      img = (l.sign > 0 ? x : -x).exp();
    } else {
      img = one + x;
      if (l.sign < 0) img = img.inverse();
    }
    return images.emplace(key, img).first->second;
  };
  TruncatedSeries out = TruncatedSeries::one(field, alphabet, cap);
  for (Letter l : w.letters()) out = out * image(l);
  return out;
}

}  // namespace whlab
