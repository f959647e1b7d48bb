#include <functional>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "whlab/asphericity/probe.hpp"
#include "whlab/cohomology/hochschild.hpp"
#include "whlab/hopf/function_hopf.hpp"
#include "whlab/hopf/tensor_hopf.hpp"
#include "whlab/spectral/double_complex.hpp"

namespace whlab::cli {

namespace {

struct Check {
  std::string name;
  std::function<std::string(std::mt19937_64&, Budget const&)> run;  // empty string = pass
};

GroupWord random_word(std::mt19937_64& rng, std::size_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, gens - 1);
  std::bernoulli_distribution sign;
  std::vector<Letter> letters(len(rng));
  for (auto& l : letters) l = Letter{static_cast<std::uint16_t>(gen(rng)), static_cast<std::int8_t>(sign(rng) ? 1 : -1)};
  return GroupWord(letters);
}

TensorHopfElement random_element(Field f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> deg(0, 5);
  std::uniform_int_distribution<std::uint16_t> letter(0, 2);
  std::uniform_int_distribution<long> coeff(-3, 3);
  TensorHopfElement a(f, 3);
  for (int t = 0; t < 4; ++t) {
    Monomial m(deg(rng));
    for (auto& l : m) l = letter(rng);
    a.add_term(m, Scalar(f, coeff(rng)));
  }
  return a;
}

std::string shuffle_example(std::mt19937_64&, Budget const&) {
  Field q = Field::rationals();
  auto ab = TensorHopfElement::from_letters(q, "abxy", "ab"), xy = TensorHopfElement::from_letters(q, "abxy", "xy");
  std::string got = shuffle(ab, xy).str("abxy");
  if (got != "abxy + axby + axyb + xaby + xayb + xyab") return "ab o xy = " + got;
  auto aaa = TensorHopfElement::from_letters(q, "a", "aaa"), aa = TensorHopfElement::from_letters(q, "a", "aa");
  if (shuffle(aaa, aa).coefficient({0, 0, 0, 0, 0}) != Scalar(q, 10L)) return "aaa o aa is not 10 aaaaa";
  return "";
}

std::string hopf_axioms(std::mt19937_64& rng, Budget const&) {
  for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3)})
    for (int t = 0; t < 20; ++t) {
      auto a = random_element(f, rng);
      auto da = deconcatenate(a);
      if (coproduct_at(da, 0) != coproduct_at(da, 1)) return "coassociativity fails over " + f.name();
      if (from_tensor(counit_at(da, 0)) != a || from_tensor(counit_at(da, 1)) != a) return "counit fails";
      auto unit = TensorHopfElement::unit(f, 3).scaled(counit(a));
      if (from_tensor(shuffle_at(antipode_at(da, 0), 0)) != unit) return "antipode fails over " + f.name();
    }
  for (char const* name : {"Z4", "Z2xZ2", "D8", "Q8", "Z9"}) {
    auto g = FiniteGroupTable::named(name);
    auto bad = FunctionHopf(g, Field::prime(*g.p_group_prime())).violations();
    if (!bad.empty()) return std::string("functions on ") + name + ": " + bad.front();
  }
  return "";
}

std::string fox_identity(std::mt19937_64& rng, Budget const&) {
  auto one = GroupRingElement::of(GroupWord());
  for (int t = 0; t < 100; ++t) {
    auto w = random_word(rng, 3, 12);
    GroupRingElement sum;
    for (std::size_t x = 0; x < 3; ++x) sum = sum + fox_derivative(w, x) * (GroupRingElement::of(GroupWord::generator(x)) - one);
    if (sum != GroupRingElement::of(w) - one) return "fails for " + w.str({"x", "y", "z"});
  }
  return "";
}

std::string magnus(std::mt19937_64& rng, Budget const&) {
  for (Field f : {Field::rationals(), Field::prime(2)})
    for (int t = 0; t < 30; ++t) {
      auto u = random_word(rng, 3, 8), v = random_word(rng, 3, 8);
      if (magnus_embed(u * v, f, 3, 4) != magnus_embed(u, f, 3, 4) * magnus_embed(v, f, 3, 4))
        return "not multiplicative over " + f.name();
    }
  return "";
}

std::string cohomology_oracles(std::mt19937_64&, Budget const& budget) {
  for (char const* name : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
    auto g = FiniteGroupTable::named(name);
    Field f = Field::prime(*g.p_group_prime());
    std::vector<std::size_t> hoch;
    for (auto const& h : hochschild_cohomology(GModule::trivial(g, f), 3, false, budget)) hoch.push_back(h.dimension);
    if (hoch != minimal_resolution(g, f, 3, budget)) return std::string("methods disagree on ") + name;
  }
  return "";
}

std::string lhs_z4(std::mt19937_64&, Budget const& budget) {
  auto g = FiniteGroupTable::named("Z4");
  auto m = GModule::trivial(g, Field::prime(2));
  auto s = spectral_pages(lhs_double_complex(m, g.subgroup_generated({2}), 3, 3, 3, budget), 3, budget);
  for (auto const& c : s.pages[2].cells)
    if (c.reliable && c.dimension != 1) return "E2 is not 1 everywhere";
  for (auto const& t : s.totals)
    if (t.reliable && t.dimension != 1) return "H^n(Tot) is not 1";
  auto const* d2 = s.pages[2].find(0, 1);
  if (!d2 || d2->rank_out != 1) return "d2 from (0,1) vanishes";
  return "";
}

std::string asphericity(std::mt19937_64&, Budget const& budget) {
  Field q = Field::rationals();
  if (asphericity_probe(parse_presentation("gens: x y\nrels: r = [x,y]"), q, 4, budget).verdict != Verdict::no_obstruction)
    return "<x,y | [x,y]> is flagged";
  if (asphericity_probe(parse_presentation("gens: x\nrels: r = x"), q, 4, budget).verdict != Verdict::no_obstruction)
    return "<x | x> is flagged";
  if (asphericity_probe(parse_presentation("gens: x\nrels: r1 = x ; r2 = x"), q, 4, budget).verdict !=
      Verdict::relators_dependent)
    return "<x | x, x> is not relators-dependent";
  return "";
}

std::string round_trip(std::mt19937_64&, Budget const&) {
  for (char const* text : {"gens: a b\nrels: r = a b a^-1 b^-2\nfield: F3\ntrunc: 5", "gens: x y z\nrels: r1 = [x,y] ; r2 = [y,z]^2"}) {
    auto p = parse_presentation(text);
    if (parse_presentation(render_presentation(p)) != p) return "render/parse changes a presentation";
  }
  return "";
}

}  // namespace

Report selftest_command(Common const& c) {
  std::vector<Check> checks{{"shuffle-example", shuffle_example}, {"hopf-axioms", hopf_axioms},
                            {"fox-identity", fox_identity},       {"magnus-multiplicative", magnus},
                            {"cohomology-oracles", cohomology_oracles}, {"lhs-z4", lhs_z4},
                            {"asphericity-examples", asphericity}, {"presentation-round-trip", round_trip}};
  std::mt19937_64 rng(c.seed);
  Report r;
  Json results = Json::array();
  std::ostringstream text;
  std::size_t passed = 0;
  for (auto const& check : checks) {
    std::string problem = check.run(rng, c.budget);
    passed += problem.empty();
    Json j{{"name", check.name}, {"passed", problem.empty()}};
    if (!problem.empty()) j["detail"] = problem;
    results.push_back(j);
    text << (problem.empty() ? "ok    " : "FAIL  ") << check.name << (problem.empty() ? "" : ": " + problem) << "\n";
  }
  text << "selftest: " << passed << "/" << checks.size() << " passed (seed " << c.seed << ")\n";
  r.json = Json{{"command", "selftest"}, {"seed", c.seed}, {"checks", results}, {"passed", passed == checks.size()}};
  r.text = text.str();
  r.exit_code = passed == checks.size() ? 0 : 1;
  return r;
}

}  // namespace whlab::cli
