#include <catch_amalgamated.hpp>

#include <random>

#include "whlab/core/errors.hpp"
#include "whlab/core/matrix.hpp"
#include "whlab/core/sparse.hpp"
#include "whlab/hopf/finite_group.hpp"
#include "whlab/hopf/function_hopf.hpp"
#include "whlab/hopf/tensor_hopf.hpp"

using namespace whlab;

namespace {

Field const Q = Field::rationals();
Field const F2 = Field::prime(2);
Field const F3 = Field::prime(3);

// All interleavings of u and v, enumerated by the positions taken by u.
Coefficients interleavings(Field f, Monomial const& u, Monomial const& v) {
  Coefficients out;
  std::size_t n = u.size() + v.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != u.size()) continue;
    Monomial w;
    std::size_t i = 0, j = 0;
    for (std::size_t pos = 0; pos < n; ++pos) w.push_back((mask >> pos) & 1U ? u[i++] : v[j++]);
    auto [it, inserted] = out.emplace(w, Scalar::one(f));
    if (!inserted) it->second += Scalar::one(f);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Monomial random_monomial(std::mt19937& rng, std::size_t alphabet, std::size_t max_deg) {
  std::uniform_int_distribution<std::size_t> deg(0, max_deg);
  std::uniform_int_distribution<std::uint16_t> letter(0, static_cast<std::uint16_t>(alphabet - 1));
  Monomial m(deg(rng));
  for (auto& l : m) l = letter(rng);
  return m;
}

TensorHopfElement random_element(Field f, std::size_t alphabet, std::size_t max_deg,
                                 std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  TensorHopfElement a(f, alphabet);
  for (int t = 0; t < 4; ++t) a.add_term(random_monomial(rng, alphabet, max_deg), Scalar(f, static_cast<long>(coeff(rng))));
  return a;
}

TruncatedSeries random_series(Field f, std::size_t alphabet, std::size_t cap, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  TruncatedSeries s(f, alphabet, cap);
  for (int t = 0; t < 6; ++t) s.add_term(random_monomial(rng, alphabet, cap), Scalar(f, static_cast<long>(coeff(rng))));
  return s;
}

GroupWord random_word(std::mt19937& rng, std::size_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> gen(0, gens - 1);
  std::bernoulli_distribution sign;
  std::vector<Letter> letters(len(rng));
  for (auto& l : letters) l = Letter{static_cast<std::uint16_t>(gen(rng)), static_cast<std::int8_t>(sign(rng) ? 1 : -1)};
  return GroupWord(letters);
}

TensorPower tensor(TensorHopfElement const& a, TensorHopfElement const& b) {
  TensorPower out(a.field(), a.alphabet(), 2);
  for (auto const& [u, x] : a.terms())
    for (auto const& [v, y] : b.terms()) out.add_term({u, v}, x * y);
  return out;
}

}  // namespace

TEST_CASE("shuffle examples") {
  std::string const letters = "abxy";
  auto ab = TensorHopfElement::from_letters(Q, letters, "ab");
  auto xy = TensorHopfElement::from_letters(Q, letters, "xy");
  CHECK(shuffle(ab, xy).str(letters) == "abxy + axby + axyb + xaby + xayb + xyab");

  for (auto [f, expected] : {std::pair{Q, std::string("10*aaaaa")}, std::pair{F2, std::string("0")},
                             std::pair{F3, std::string("aaaaa")}}) {
    auto aaa = TensorHopfElement::from_letters(f, "a", "aaa");
    auto aa = TensorHopfElement::from_letters(f, "a", "aa");
    CHECK(shuffle(aaa, aa).str("a") == expected);
  }
  auto unit = TensorHopfElement::unit(Q, 4);
  CHECK(shuffle(ab, unit) == ab);
  CHECK(shuffle(unit, ab) == ab);
}

TEST_CASE("shuffle agrees with interleaving enumeration") {
  std::mt19937 rng(41);
  for (int t = 0; t < 200; ++t) {
    Monomial u = random_monomial(rng, 3, 4), v = random_monomial(rng, 3, 3);
    for (Field f : {Q, F2}) {
      CHECK(shuffle_words(f, u, v) == interleavings(f, u, v));
      CHECK(shuffle_words(f, u, v) == shuffle_words(f, v, u));
    }
  }
}

TEST_CASE("deconcatenation examples") {
  auto e12 = TensorHopfElement::word(Q, 3, {1, 2}, Scalar::one(Q));
  auto d = deconcatenate(e12);
  CHECK(d.terms().size() == 3);
  CHECK(d.str() == "1 (x) e1.e2 + e1 (x) e2 + e1.e2 (x) 1");
  CHECK(deconcatenate(TensorHopfElement::unit(Q, 3)).str() == "1 (x) 1");
  CHECK(deconcatenate(TensorHopfElement::word(Q, 3, {1}, Scalar::one(Q))).str() == "1 (x) e1 + e1 (x) 1");
}

TEST_CASE("tensor Hopf axioms on random elements") {
  std::mt19937 rng(43);
  for (Field f : {Q, F2, F3}) {
    for (int t = 0; t < 100; ++t) {
      auto a = random_element(f, 3, 5, rng);
      auto da = deconcatenate(a);
      CHECK(coproduct_at(da, 0) == coproduct_at(da, 1));
      CHECK(from_tensor(counit_at(da, 0)) == a);
      CHECK(from_tensor(counit_at(da, 1)) == a);
      auto eta_eps = TensorHopfElement::unit(f, 3).scaled(counit(a));
      CHECK(from_tensor(shuffle_at(antipode_at(da, 0), 0)) == eta_eps);
      CHECK(from_tensor(shuffle_at(antipode_at(da, 1), 0)) == eta_eps);
      auto b = random_element(f, 3, 3, rng);
      CHECK(deconcatenate(shuffle(a, b)) == shuffle_tensors(da, deconcatenate(b)));
    }
  }
}

TEST_CASE("primitives are the letters") {
  // kernel of a -> da - a(x)1 - 1(x)a on words of degree <= 4 over two letters
  std::vector<Monomial> basis;
  for (std::size_t d = 0; d <= 4; ++d)
    for (auto const& m : monomials_of_degree(2, d)) basis.push_back(m);
  std::map<TensorPower::Key, std::size_t> index;
  std::vector<SparseVector> images;
  for (auto const& m : basis) {
    auto e = TensorHopfElement::word(Q, 2, m, Scalar::one(Q));
    auto r = deconcatenate(e);
    r.add_term({m, {}}, Scalar(Q, -1L));
    r.add_term({{}, m}, Scalar(Q, -1L));
    SparseVector v;
    for (auto const& [k, c] : r.terms()) v.emplace(index.emplace(k, index.size()).first->second, c);
    images.push_back(v);
  }
  Matrix k = sparse_kernel(Q, images);
  REQUIRE(k.rows() == 2);
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j)
      if (!k.is_zero_at(i, j)) CHECK(basis[j].size() == 1);
}

TEST_CASE("pairing examples and dualities") {
  auto e1 = TensorHopfElement::word(Q, 3, {1}, Scalar::one(Q));
  CHECK(pairing(e1, TruncatedSeries::letter(Q, 3, 2, 1)).is_one());
  auto e12 = TensorHopfElement::word(Q, 3, {1, 2}, Scalar::one(Q));
  auto X1 = TruncatedSeries::letter(Q, 3, 2, 1), X2 = TruncatedSeries::letter(Q, 3, 2, 2);
  CHECK(pairing(e12, X2 * X1).is_zero());
  CHECK(pairing(deconcatenate(e12), series_tensor(X1, X2)).is_one());
  CHECK(pairing(e12, X1 * X2).is_one());
  CHECK_THROWS_AS(pairing(e12, TruncatedSeries::letter(Q, 2, 2, 1)), DomainError);
  CHECK_THROWS_AS(pairing(e12, TruncatedSeries::letter(Q, 3, 1, 1)), DomainError);

  std::mt19937 rng(47);
  for (Field f : {Q, F2, F3}) {
    for (int t = 0; t < 60; ++t) {
      auto a = random_element(f, 2, 4, rng);
      auto b = random_element(f, 2, 4, rng);
      auto u = random_series(f, 2, 4, rng), v = random_series(f, 2, 4, rng);
      CHECK(pairing(deconcatenate(a), series_tensor(u, v)) == pairing(a, u * v));
      auto g = random_series(f, 2, 8, rng);
      CHECK(pairing(shuffle(a, b), g) ==
            pairing(tensor(a, b), series_coproduct(g, SeriesCoproduct::primitive)));
      CHECK(pairing(infiltration(a, b), g) ==
            pairing(tensor(a, b), series_coproduct(g, SeriesCoproduct::grouplike)));
    }
  }
}

TEST_CASE("magnus embedding") {
  auto x = GroupWord::generator(0), y = GroupWord::generator(1);
  CHECK(magnus_embed(x, Q, 1, 2).str() == "1 + X0 + 1/2*X0.X0");
  CHECK(magnus_embed(x.inverse(), F2, 1, 2).str() == "1 + X0 + X0.X0");
  CHECK(magnus_embed(commutator(x, y), Q, 2, 2).str() == "1 + X0.X1 - X1.X0");
  CHECK(magnus_embed(GroupWord(), F3, 2, 3) == TruncatedSeries::one(F3, 2, 3));

  std::mt19937 rng(53);
  for (Field f : {Q, F2, F3}) {
    for (int t = 0; t < 100; ++t) {
      auto u = random_word(rng, 3, 8), v = random_word(rng, 3, 8);
      CHECK(magnus_embed(u * v, f, 3, 4) == magnus_embed(u, f, 3, 4) * magnus_embed(v, f, 3, 4));
    }
  }
}

TEST_CASE("magnus images are grouplike for the matching coproduct") {
  std::mt19937 rng(59);
  for (Field f : {Q, F2, F3}) {
    auto kind = f.is_rational() ? SeriesCoproduct::primitive : SeriesCoproduct::grouplike;
    for (int t = 0; t < 30; ++t) {
      auto w = random_word(rng, 2, 6);
      auto m = magnus_embed(w, f, 2, 4);
      auto lhs = series_coproduct(m, kind);
      // f (x) f restricted to total degree <= 4
      TensorPower rhs(f, 2, 2);
      auto square = series_tensor(m, m);
      for (auto const& [k, c] : square.terms())
        if (k[0].size() + k[1].size() <= 4) rhs.add_term(k, c);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("finite group tables") {
  auto z4 = FiniteGroupTable::named("Z4");
  CHECK(z4.order() == 4);
  CHECK(z4.p_group_prime() == 2u);
  CHECK(FiniteGroupTable::named("Z6").p_group_prime() == std::nullopt);
  auto d8 = FiniteGroupTable::named("D8");
  auto q8 = FiniteGroupTable::named("Q8");
  auto k = FiniteGroupTable::named("Z2^3");
  CHECK(k.order() == 8);
  CHECK(FiniteGroupTable::named("Z4xZ2").order() == 8);
  // D8 and Q8 are nonabelian, with 5 and 1 involutions respectively
  auto involutions = [](FiniteGroupTable const& g) {
    std::size_t c = 0;
    for (std::size_t a = 0; a < g.order(); ++a) c += a != g.identity() && g.mul(a, a) == g.identity();
    return c;
  };
  CHECK(involutions(d8) == 5);
  CHECK(involutions(q8) == 1);
  auto r = *d8.index_of("r"), s = *d8.index_of("s");
  CHECK(d8.mul(r, s) != d8.mul(s, r));
  CHECK(d8.subgroup_generated({r}).size() == 4);
  CHECK(d8.is_normal(d8.subgroup_generated({r})));
  CHECK(!d8.is_normal(d8.subgroup_generated({s})));
  CHECK_THROWS_AS(d8.quotient(d8.subgroup_generated({s})), DomainError);
  auto quot = z4.quotient(z4.subgroup_generated({2}));
  CHECK(quot.group.order() == 2);
  CHECK(quot.coset_of[1] == quot.coset_of[3]);
  CHECK_THROWS_AS(FiniteGroupTable::named("Z2y"), DomainError);
}

TEST_CASE("group table files") {
  auto g = FiniteGroupTable::parse("order: 2\nlabels: e a\ntable:\n0 1\n1 0\n");
  CHECK(g.label(1) == "a");
  CHECK_THROWS_AS(FiniteGroupTable::parse("order: 2\ntable:\n0 1\n0 1\n"), DomainError);
  CHECK_THROWS_AS(FiniteGroupTable::parse("order: 2\ntable:\n0 1\n"), ParseError);
  // a loop that is not associative (no identity-preserving group)
  CHECK_THROWS_AS(FiniteGroupTable::parse("order: 3\ntable:\n0 1 2\n1 0 0\n2 2 0\n"), DomainError);
  auto loaded = FiniteGroupTable::load(WHLAB_DATA_DIR "/groups/klein4.grp");
  CHECK(loaded.order() == 4);
  CHECK(loaded.name() == "klein4");
}

TEST_CASE("function Hopf algebras") {
  FunctionHopf trivial(FiniteGroupTable::trivial(), F2);
  CHECK(trivial.coproduct() == Matrix::identity(F2, 1));
  CHECK(trivial.antipode() == Matrix::identity(F2, 1));

  FunctionHopf z2(FiniteGroupTable::cyclic(2), F2);
  auto d_a = z2.apply_at(z2.basis({1}), z2.coproduct(), 1, 2, 0);
  CHECK(d_a == FunctionHopf::Tensor{{{0, 1}, Scalar::one(F2)}, {{1, 0}, Scalar::one(F2)}});
  auto d_1 = z2.apply_at(z2.basis({0}), z2.coproduct(), 1, 2, 0);
  CHECK(d_1 == FunctionHopf::Tensor{{{0, 0}, Scalar::one(F2)}, {{1, 1}, Scalar::one(F2)}});

  for (char const* name : {"Z4", "Z2xZ2", "D8", "Q8", "Z9", "Z2^4", "Z4xZ4"}) {
    auto g = FiniteGroupTable::named(name);
    FunctionHopf h(g, Field::prime(*g.p_group_prime()));
    CHECK(h.violations().empty());
  }
}
