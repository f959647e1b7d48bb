#include "whlab/hopf/function_hopf.hpp"

#include "whlab/core/errors.hpp"

namespace whlab {

namespace {

std::string key_str(std::vector<std::size_t> const& key, FiniteGroupTable const& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) out += (i ? "," : "") + g.label(key[i]);
  return out + ")";
}

}  // namespace

FunctionHopf::FunctionHopf(FiniteGroupTable group, Field field)
    : group_(std::move(group)), field_(field) {
  if (field.is_rational()) throw DomainError("function Hopf algebras are built over F_p");
  std::size_t n = group_.order();
  product_ = Matrix(field, n, n * n);
  unit_ = Matrix(field, n, 1);
  coproduct_ = Matrix(field, n * n, n);
  counit_ = Matrix(field, 1, n);
  antipode_ = Matrix(field, n, n);
  for (std::size_t g = 0; g < n; ++g) {
    product_.set(g, g * n + g, 1L);
    unit_.set(g, 0, 1L);
    antipode_.set(group_.inv(g), g, 1L);
    for (std::size_t h = 0; h < n; ++h) coproduct_.set(g * n + h, group_.mul(g, h), 1L);
  }
  counit_.set(0, group_.identity(), 1L);
  auto bad = violations();
  if (!bad.empty()) throw DomainError("Hopf axiom fails: " + bad.front());
}

FunctionHopf::Tensor FunctionHopf::basis(std::vector<std::size_t> const& key) const {
  return Tensor{{key, Scalar::one(field_)}};
}

FunctionHopf::Tensor FunctionHopf::apply_at(Tensor const& t, Matrix const& map, std::size_t in,
                                            std::size_t out, std::size_t pos) const {
  std::size_t n = group_.order();
  Tensor result;
  for (auto const& [key, c] : t) {
    std::size_t col = 0;
    for (std::size_t i = 0; i < in; ++i) col = col * n + key[pos + i];
    for (std::size_t row = 0; row < map.rows(); ++row) {
      if (map.is_zero_at(row, col)) continue;
      std::vector<std::size_t> digits(out);
      std::size_t r = row;
      for (std::size_t i = out; i-- > 0;) {
        digits[i] = r % n;
        r /= n;
      }
      std::vector<std::size_t> k(key.begin(), key.begin() + static_cast<long>(pos));
      k.insert(k.end(), digits.begin(), digits.end());
      k.insert(k.end(), key.begin() + static_cast<long>(pos + in), key.end());
      Scalar v = c * map.at(row, col);
      auto [it, inserted] = result.emplace(k, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) result.erase(it);
      }
    }
  }
  return result;
}

std::vector<std::string> FunctionHopf::violations() const {
  std::vector<std::string> bad;
  std::size_t n = group_.order();
  auto const& m = product_;
  auto const& d = coproduct_;
  for (std::size_t a = 0; a < n; ++a) {
    auto e = basis({a});
    if (apply_at(apply_at(e, unit_, 0, 1, 0), m, 2, 1, 0) != e ||
        apply_at(apply_at(e, unit_, 0, 1, 1), m, 2, 1, 0) != e)
      bad.push_back("unit law at " + key_str({a}, group_));
    auto de = apply_at(e, d, 1, 2, 0);
    if (apply_at(de, d, 1, 2, 0) != apply_at(de, d, 1, 2, 1))
      bad.push_back("coassociativity at " + key_str({a}, group_));
    if (apply_at(de, counit_, 1, 0, 0) != e || apply_at(de, counit_, 1, 0, 1) != e)
      bad.push_back("counit law at " + key_str({a}, group_));
    auto eps = apply_at(apply_at(e, counit_, 1, 0, 0), unit_, 0, 1, 0);
    if (apply_at(apply_at(de, antipode_, 1, 1, 0), m, 2, 1, 0) != eps ||
        apply_at(apply_at(de, antipode_, 1, 1, 1), m, 2, 1, 0) != eps)
      bad.push_back("antipode law at " + key_str({a}, group_));
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = basis({a, b});
      auto lhs = apply_at(apply_at(ab, m, 2, 1, 0), d, 1, 2, 0);
      auto dd = apply_at(apply_at(ab, d, 1, 2, 1), d, 1, 2, 0);
      Tensor swapped;
      for (auto const& [k, c] : dd) swapped.emplace(std::vector<std::size_t>{k[0], k[2], k[1], k[3]}, c);
      auto rhs = apply_at(apply_at(swapped, m, 2, 1, 2), m, 2, 1, 0);
      if (lhs != rhs) bad.push_back("coproduct is not multiplicative at " + key_str({a, b}, group_));
      if (apply_at(apply_at(ab, m, 2, 1, 0), counit_, 1, 0, 0) !=
          apply_at(apply_at(ab, counit_, 1, 0, 1), counit_, 1, 0, 0))
        bad.push_back("counit is not multiplicative at " + key_str({a, b}, group_));
      for (std::size_t c = 0; c < n; ++c) {
        auto abc = basis({a, b, c});
        if (apply_at(apply_at(abc, m, 2, 1, 0), m, 2, 1, 0) !=
            apply_at(apply_at(abc, m, 2, 1, 1), m, 2, 1, 0))
          bad.push_back("associativity at " + key_str({a, b, c}, group_));
      }
    }
  }
  Tensor empty{{std::vector<std::size_t>{}, Scalar::one(field_)}};
  auto one = apply_at(empty, unit_, 0, 1, 0);
  if (apply_at(one, d, 1, 2, 0) != apply_at(one, unit_, 0, 1, 1))
    bad.push_back("coproduct of the unit");
  return bad;
}

}  // namespace whlab
