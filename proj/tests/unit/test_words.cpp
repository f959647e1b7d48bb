#include <catch_amalgamated.hpp>

#include <filesystem>
#include <random>

#include "whlab/core/errors.hpp"
#include "whlab/words/presentation.hpp"
#include "whlab/words/word.hpp"

using namespace whlab;

namespace {

std::vector<std::string> const names{"x", "y", "z"};

GroupWord random_word(std::mt19937& rng, std::size_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> gen(0, gens - 1);
  std::bernoulli_distribution sign;
  std::vector<Letter> letters(len(rng));
  for (auto& l : letters)
    l = Letter{static_cast<std::uint16_t>(gen(rng)), static_cast<std::int8_t>(sign(rng) ? 1 : -1)};
  return GroupWord(letters);
}

GroupWord const x = GroupWord::generator(0);
GroupWord const y = GroupWord::generator(1);

}  // namespace

TEST_CASE("free reduction and word algebra") {
  GroupWord w({{0, 1}, {0, -1}, {1, 1}});
  CHECK(w == y);
  CHECK((x * y).inverse() == y.inverse() * x.inverse());
  CHECK((x * y).inverse().str(names) == "y^-1*x^-1");
  CHECK((x * y) * y.inverse() == x);
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto u = random_word(rng, 3, 10);
    CHECK((u * u.inverse()).is_identity());
  }
}

TEST_CASE("fox derivatives on small words") {
  CHECK(fox_derivative(x * y, 0) == GroupRingElement::of(GroupWord()));
  CHECK(fox_derivative(x.inverse(), 0) == GroupRingElement::of(x.inverse(), -1));
  auto d = fox_derivative(commutator(x, y), 0);
  CHECK(d == GroupRingElement::of(GroupWord()) - GroupRingElement::of(x * y * x.inverse()));
  CHECK(d.str(names) == "1 - x*y*x^-1");
}

TEST_CASE("fox fundamental identity and product rule") {
  std::mt19937 rng(7);
  GroupRingElement one = GroupRingElement::of(GroupWord());
  for (int t = 0; t < 200; ++t) {
    auto w = random_word(rng, 3, 12);
    GroupRingElement sum;
    for (std::size_t g = 0; g < 3; ++g)
      sum = sum + fox_derivative(w, g) * (GroupRingElement::of(GroupWord::generator(g)) - one);
    CHECK(sum == GroupRingElement::of(w) - one);
  }
  for (int t = 0; t < 100; ++t) {
    auto u = random_word(rng, 3, 8);
    auto v = random_word(rng, 3, 8);
    for (std::size_t g = 0; g < 3; ++g)
      CHECK(fox_derivative(u * v, g) ==
            fox_derivative(u, g) + GroupRingElement::of(u) * fox_derivative(v, g));
  }
}

TEST_CASE("parse presentations") {
  auto p = parse_presentation("gens: x y\nrels: r1 = [x,y]");
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0].word == commutator(x, y));
  CHECK(p.field == Field::rationals());
  CHECK(p.truncation == 4);

  auto t = parse_presentation("gens: x\nrels: r1 = x");
  CHECK(t.relators[0].word == x);

  auto q = parse_presentation("# comment\ngens: a b\nrels: r = a^3 b^-2 ; s = [a^2, b] * a\nfield: F3\ntrunc: 2\n");
  CHECK(q.field == Field::prime(3));
  CHECK(q.truncation == 2);
  CHECK(q.relators[0].word.str(q.generators) == "a^3*b^-2");
  CHECK(q.relators[1].word.str(q.generators) == "a^2*b*a^-2*b^-1*a");

  auto e = parse_presentation("gens: x\nrels: r = 1 ; s = x x^-1");
  CHECK(e.relators[0].word.is_identity());
  CHECK(e.relators[1].word.is_identity());
}

TEST_CASE("parse errors carry location") {
  try {
    parse_presentation("gens: x\nrels: r1 = z");
    FAIL("expected a parse error");
  } catch (ParseError const& err) {
    CHECK(std::string(err.what()).find("undeclared generator z") != std::string::npos);
    CHECK(err.line() == 2);
    CHECK(err.column() == 12);
  }
  CHECK_THROWS_AS(parse_presentation("gens: x x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x\nrels: r = x ; r = x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x\nrels: r = [x, x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x\nfield: F4"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x\ntrunc: 0"), ParseError);
  CHECK_THROWS_AS(parse_presentation("rels: r = x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x\ncolour: red"), ParseError);
}

TEST_CASE("render round-trip") {
  std::mt19937 rng(13);
  for (int t = 0; t < 50; ++t) {
    Presentation p;
    p.generators = {"x", "y", "z"};
    for (int r = 0; r < 3; ++r) p.relators.push_back({"r" + std::to_string(r), random_word(rng, 3, 10)});
    p.field = t % 2 ? Field::prime(5) : Field::rationals();
    p.truncation = 1 + t % 6;
    CHECK(parse_presentation(render_presentation(p)) == p);
  }
}

TEST_CASE("bundled corpus round-trips") {
  std::size_t count = 0;
  for (auto const& entry : std::filesystem::recursive_directory_iterator(WHLAB_DATA_DIR "/presentations")) {
    if (entry.path().extension() != ".pres") continue;
    auto p = load_presentation(entry.path().string());
    CHECK(parse_presentation(render_presentation(p)) == p);
    ++count;
  }
  CHECK(count >= 5);
}

TEST_CASE("subpresentations") {
  auto p = parse_presentation("gens: x y\nrels: a = x ; b = y");
  CHECK(subpresentation(p, {"a", "b"}) == p);
  CHECK(subpresentation(p, {}).relators.empty());
  auto s = subpresentation(p, {"a"});
  REQUIRE(s.relators.size() == 1);
  CHECK(s.relators[0].word == x);
  CHECK(s.generators == p.generators);
  CHECK_THROWS_AS(subpresentation(p, {"c"}), DomainError);
}
