// One line per acceptance criterion; exit status 1 when any fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "whlab/asphericity/probe.hpp"
#include "whlab/cli/cli.hpp"
#include "whlab/cohomology/hochschild.hpp"
#include "whlab/hopf/function_hopf.hpp"
#include "whlab/hopf/tensor_hopf.hpp"
#include "whlab/spectral/double_complex.hpp"

using namespace whlab;

namespace {

Field const Q = Field::rationals();
Field const F2 = Field::prime(2);
Field const F3 = Field::prime(3);

// Thrown by the checks; the message becomes the failure detail.
struct Failed {
  std::string what;
};

void require(bool ok, std::string const& what) {
  if (!ok) throw Failed{what};
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void()> check;
};

Monomial random_monomial(std::mt19937& rng, std::size_t alphabet, std::size_t max_deg) {
  std::uniform_int_distribution<std::size_t> deg(0, max_deg);
  std::uniform_int_distribution<std::uint16_t> letter(0, static_cast<std::uint16_t>(alphabet - 1));
  Monomial m(deg(rng));
  for (auto& l : m) l = letter(rng);
  return m;
}

TensorHopfElement random_element(Field f, std::size_t alphabet, std::size_t max_deg, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  TensorHopfElement a(f, alphabet);
  for (int t = 0; t < 5; ++t) a.add_term(random_monomial(rng, alphabet, max_deg), Scalar(f, static_cast<long>(coeff(rng))));
  return a;
}

TruncatedSeries random_series(Field f, std::size_t alphabet, std::size_t cap, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  TruncatedSeries s(f, alphabet, cap);
  for (int t = 0; t < 6; ++t) s.add_term(random_monomial(rng, alphabet, cap), Scalar(f, static_cast<long>(coeff(rng))));
  return s;
}

GroupWord random_word(std::mt19937& rng, std::size_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, gens - 1);
  std::bernoulli_distribution sign;
  std::vector<Letter> letters(len(rng));
  for (auto& l : letters) l = Letter{static_cast<std::uint16_t>(gen(rng)), static_cast<std::int8_t>(sign(rng) ? 1 : -1)};
  return GroupWord(letters);
}

// 1. shuffle products of the worked examples
void shuffle_products() {
  auto word = [](Field f, std::string const& letters, std::string const& w) {
    return TensorHopfElement::from_letters(f, letters, w);
  };
  auto ab_xy = shuffle(word(Q, "abxy", "ab"), word(Q, "abxy", "xy"));
  require(ab_xy.str("abxy") == "abxy + axby + axyb + xaby + xayb + xyab", "ab o xy = " + ab_xy.str("abxy"));
  Monomial a5{0, 0, 0, 0, 0};
  auto coefficient = [&](Field f) { return shuffle(word(f, "a", "aaa"), word(f, "a", "aa")).coefficient(a5); };
  require(coefficient(Q) == Scalar(Q, 10L), "aaa o aa over Q is not 10 aaaaa");
  require(coefficient(F2).is_zero(), "aaa o aa over F2 is not 0");
  require(coefficient(F3).is_one(), "aaa o aa over F3 is not aaaaa");
}

// 2. Hopf axioms: tensor Hopf algebra and functions on groups of order <= 16
void hopf_axioms() {
  std::mt19937 rng(2);
  for (Field f : {Q, F2, F3}) {
    for (int t = 0; t < 100; ++t) {
      auto a = random_element(f, 3, 5, rng);
      auto da = deconcatenate(a);
      require(coproduct_at(da, 0) == coproduct_at(da, 1), "coassociativity over " + f.name());
      require(from_tensor(counit_at(da, 0)) == a && from_tensor(counit_at(da, 1)) == a, "counit over " + f.name());
      auto unit = TensorHopfElement::unit(f, 3).scaled(counit(a));
      require(from_tensor(shuffle_at(antipode_at(da, 0), 0)) == unit, "m(S x id)D over " + f.name());
      require(from_tensor(shuffle_at(antipode_at(da, 1), 0)) == unit, "m(id x S)D over " + f.name());
    }
  }
  std::vector<std::pair<std::string, Field>> groups{
      {"1", F2},     {"Z2", F2},    {"Z3", F3},      {"Z4", F2},     {"Z5", Field::prime(5)},
      {"Z6", F2},    {"Z7", F3},    {"Z8", F2},      {"Z9", F3},     {"Z12", F3},
      {"Z16", F2},   {"Z2xZ2", F2}, {"Z2^3", F2},    {"Z2^4", F2},   {"Z4xZ2", F2},
      {"Z4xZ4", F2}, {"Z8xZ2", F2}, {"Z3xZ3", F3},   {"Z2xZ3", F3},  {"D8", F2},
      {"Q8", F2},    {"D8xZ2", F2}, {"Q8xZ2", F2},   {"Z2xZ5", Field::prime(5)}};
  for (auto const& [name, f] : groups) {
    auto bad = FunctionHopf(FiniteGroupTable::named(name), f).violations();
    require(bad.empty(), "functions on " + name + ": " + (bad.empty() ? "" : bad.front()));
  }
  for (char const* file : {"d8.grp", "klein4.grp"}) {
    auto g = FiniteGroupTable::load(std::string(WHLAB_DATA_DIR) + "/groups/" + file);
    require(FunctionHopf(g, F2).violations().empty(), std::string("functions on ") + file);
  }
}

// 3. sum_x (dw/dx)(x - 1) = w - 1
void fox_identity() {
  std::mt19937 rng(3);
  auto one = GroupRingElement::of(GroupWord());
  for (int t = 0; t < 200; ++t) {
    std::size_t gens = 1 + t % 4;
    auto w = random_word(rng, gens, 16);
    GroupRingElement sum;
    for (std::size_t x = 0; x < gens; ++x)
      sum = sum + fox_derivative(w, x) * (GroupRingElement::of(GroupWord::generator(x)) - one);
    require(sum == GroupRingElement::of(w) - one, "fundamental identity fails for " + w.str({"a", "b", "c", "d"}));
  }
}

// 4. Magnus is multiplicative, the pairing makes deconcatenation dual to concatenation
void magnus_and_duality() {
  std::mt19937 rng(4);
  for (Field f : {Q, F2, F3})
    for (int t = 0; t < 100; ++t) {
      auto u = random_word(rng, 3, 10), v = random_word(rng, 3, 10);
      require(magnus_embed(u * v, f, 3, 5) == magnus_embed(u, f, 3, 5) * magnus_embed(v, f, 3, 5),
              "magnus(uv) != magnus(u) magnus(v) over " + f.name());
    }
  for (Field f : {Q, F2, F3})
    for (int t = 0; t < 100; ++t) {
      auto a = random_element(f, 3, 4, rng);
      auto u = random_series(f, 3, 4, rng), v = random_series(f, 3, 4, rng);
      require(pairing(deconcatenate(a), series_tensor(u, v)) == pairing(a, u * v), "duality fails over " + f.name());
    }
}

// 5. bar complex and minimal resolution against the known Betti numbers
void cohomology_methods() {
  std::vector<std::pair<std::string, std::vector<std::size_t>>> known{
      {"Z2", {1, 1, 1, 1}}, {"Z3", {1, 1, 1, 1}}, {"Z4", {1, 1, 1, 1}}, {"Z2xZ2", {1, 2, 3, 4}}};
  for (auto const& [name, betti] : known) {
    auto g = FiniteGroupTable::named(name);
    Field f = Field::prime(*g.p_group_prime());
    std::vector<std::size_t> hoch;
    for (auto const& h : hochschild_cohomology(GModule::trivial(g, f), 3)) hoch.push_back(h.dimension);
    require(hoch == betti, "bar complex for " + name);
    require(minimal_resolution(g, f, 3) == betti, "minimal resolution for " + name);
  }
}

// 6. LHS for Z4 > Z2 and Z2xZ2 > Z2 over F2
void lhs_sequences() {
  std::size_t const P = 4, Qw = 4, N = 5;
  for (auto const& [name, label, expect_higher] :
       std::vector<std::tuple<std::string, std::string, bool>>{{"Z4", "2", true}, {"Z2xZ2", "1.0", false}}) {
    auto g = FiniteGroupTable::named(name);
    auto m = GModule::trivial(g, F2);
    auto h = g.subgroup_generated({*g.index_of(label)});
    auto s = spectral_pages(lhs_double_complex(m, h, P, Qw, N), 4);
    auto oracle = testing::lhs_e2_oracle(m, h, P, Qw);
    std::size_t compared = 0;
    for (auto const& c : s.pages[2].cells)
      if (c.reliable) {
        require(c.dimension == oracle[c.p][c.q], name + ": E2 at (" + std::to_string(c.p) + "," + std::to_string(c.q) + ")");
        ++compared;
      }
    require(compared >= 6, name + ": fewer than 6 reliable E2 cells");
    auto hoch = hochschild_cohomology(m, 2);
    for (std::size_t n = 0; n <= 2; ++n) {
      std::size_t sum = 0;
      for (auto const& c : s.infinity)
        if (c.p + c.q == n) {
          require(c.reliable, name + ": Einf cell in total degree " + std::to_string(n) + " is not reliable");
          sum += c.dimension;
        }
      require(sum == hoch[n].dimension, name + ": Einf total in degree " + std::to_string(n));
    }
    bool higher = false;
    for (auto const& page : s.pages)
      for (auto const& c : page.cells) higher = higher || (page.r >= 2 && c.reliable && c.rank_out > 0);
    require(higher == expect_higher, name + (expect_higher ? ": no nonzero higher differential" : ": unexpected higher differential"));
  }
}

// 7. asphericity probe
void asphericity_probe_checks() {
  auto verdict = [](std::string const& text) { return asphericity_probe(parse_presentation(text), Q, 4).verdict; };
  require(verdict("gens: x y\nrels: r = [x,y]") == Verdict::no_obstruction, "<x,y | [x,y]> is flagged");
  require(verdict("gens: x\nrels: r = x") == Verdict::no_obstruction, "<x | x> is flagged");
  require(verdict("gens: x\nrels: r1 = x ; r2 = x") == Verdict::relators_dependent, "<x | x, x> is not relators-dependent");
  std::size_t corpus = 0;
  for (auto const& entry : std::filesystem::directory_iterator(std::string(WHLAB_DATA_DIR) + "/presentations/aspherical")) {
    auto p = load_presentation(entry.path().string());
    if (p.relators.size() > 3) continue;
    ++corpus;
    for (std::size_t cap = 1; cap <= 6; ++cap) {
      auto inst = theorem_instances(p, p.field, cap);
      require(inst.contradictions.empty(),
              entry.path().filename().string() + " at N = " + std::to_string(cap) + ": " +
                  (inst.contradictions.empty() ? "" : inst.contradictions.front()));
    }
  }
  require(corpus >= 5, "fewer than 5 aspherical presentations");
}

// 8. parser round trip and deterministic reports
void round_trip_and_determinism() {
  std::vector<std::string> files;
  for (auto const& entry : std::filesystem::recursive_directory_iterator(std::string(WHLAB_DATA_DIR) + "/presentations"))
    if (entry.path().extension() == ".pres") files.push_back(entry.path().string());
  require(files.size() >= 10, "corpus is missing files");
  for (auto const& file : files) {
    auto p = load_presentation(file);
    auto text = render_presentation(p);
    require(parse_presentation(text) == p, file + " changes under render and parse");
    require(render_presentation(parse_presentation(text)) == text, file + " renders differently twice");
  }
  std::vector<std::vector<std::string>> commands{
      {"--json", "--seed", "11", "selftest"},
      {"--seed", "11", "cohomology", "--group", "Z4", "--coeff", "random", "--nmax", "2"},
      {"--json", "--seed", "11", "lhs", "--group", "Q8", "--subgroup", "-1", "--coeff", "random", "--window", "2,2"},
      {"--json", "shuffle", "abc", "cab", "--field", "F5"}};
  for (auto const& file : files) {
    commands.push_back({"--json", "asphericity", file});
    commands.push_back({"fox", file});
  }
  for (auto const& args : commands) {
    auto first = cli::run(args), second = cli::run(args);
    std::string shown;
    for (auto const& a : args) shown += " " + a;
    require(first.exit_code == 0, "whlab" + shown + " failed: " + first.err);
    require(first.out == second.out && !first.out.empty(), "whlab" + shown + " is not deterministic");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "shuffle products", 1, shuffle_products},
      {2, "Hopf axioms", 30, hopf_axioms},
      {3, "Fox fundamental identity", 5, fox_identity},
      {4, "Magnus multiplicativity and pairing duality", 30, magnus_and_duality},
      {5, "bar complex equals minimal resolution", 120, cohomology_methods},
      {6, "LHS spectral sequences", 300, lhs_sequences},
      {7, "asphericity probe", 300, asphericity_probe_checks},
      {8, "presentation round trip and determinism", 120, round_trip_and_determinism},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    try {
      c.check();
    } catch (Failed const& e) {
      detail = e.what;
    } catch (std::exception const& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && seconds > c.limit_seconds) detail = "too slow";
    failures += !detail.empty();
    std::ostringstream line;
    line << "criterion " << c.number << " " << (detail.empty() ? "PASS" : "FAIL") << "  " << c.title << "  ("
         << std::fixed << std::setprecision(2) << seconds << " s, limit " << std::defaultfloat << c.limit_seconds << " s)";
    if (!detail.empty()) line << ": " << detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures ? "acceptance: FAILED " + std::to_string(failures) + " of 8" : std::string("acceptance: all 8 passed"))
            << std::endl;
  return failures ? 1 : 0;
}
