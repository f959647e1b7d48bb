#include <catch_amalgamated.hpp>

#include <filesystem>
#include <random>

#include "whlab/asphericity/probe.hpp"
#include "whlab/asphericity/quotient_algebra.hpp"
#include "whlab/cohomology/presentation_complex.hpp"
#include "whlab/hopf/tensor_hopf.hpp"

using namespace whlab;

namespace {

Field const Q = Field::rationals();
Field const F2 = Field::prime(2);
Field const F3 = Field::prime(3);

Presentation pres(char const* text) { return parse_presentation(text); }

std::vector<Presentation> aspherical_corpus() {
  std::vector<Presentation> out;
  std::vector<std::filesystem::path> files;
  for (auto const& e : std::filesystem::directory_iterator(WHLAB_DATA_DIR "/presentations/aspherical"))
    files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (auto const& f : files) out.push_back(load_presentation(f.string()));
  return out;
}

GroupWord random_word(std::mt19937& rng, std::size_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, gens - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> letters;
  for (std::size_t i = len(rng); i > 0; --i)
    letters.push_back({static_cast<std::uint16_t>(gen(rng)), static_cast<std::int8_t>(sign(rng) ? 1 : -1)});
  return GroupWord(letters);
}

}  // namespace

TEST_CASE("quotient algebra dimensions") {
  QuotientAlgebra free1(pres("gens: x"), Q, 2);
  CHECK(free1.dimension() == 3);
  CHECK(free1.basis() == std::vector<Monomial>{{}, {0}, {0, 0}});

  for (Field f : {Q, F2, F3}) CHECK(QuotientAlgebra(pres("gens: x\nrels: r = x"), f, 2).dimension() == 1);

  CHECK(QuotientAlgebra(pres("gens: x y\nrels: r = [x,y]"), Q, 2).dimension() == 6);
  // Z^2: the completion is a commutative power series ring in two variables
  for (Field f : {Q, F2, F3})
    for (std::size_t n = 1; n <= 5; ++n)
      CHECK(QuotientAlgebra(pres("gens: x y\nrels: r = [x,y]"), f, n).dimension() == (n + 1) * (n + 2) / 2);
  // Z/2 over F2: F2[Z/2] has dimension 2
  CHECK(QuotientAlgebra(pres("gens: x\nrels: r = x^2"), F2, 4).dimension() == 2);
  // Z/2 over F3: the completion of a group of order prime to p is k
  CHECK(QuotientAlgebra(pres("gens: x\nrels: r = x^2"), F3, 4).dimension() == 1);
  CHECK_THROWS_AS(QuotientAlgebra(pres("gens: x"), Q, 0), DomainError);
  CHECK_THROWS_AS(QuotientAlgebra(pres("gens: x y z"), Q, 12, Budget{1000}), BudgetExceeded);
}

TEST_CASE("relators and their conjugates project to 1") {
  std::mt19937 rng(21);
  for (auto const& p : aspherical_corpus()) {
    for (Field f : {Q, F2}) {
      QuotientAlgebra a(p, f, 4);
      for (int trial = 0; trial < 20; ++trial) {
        GroupWord w;
        for (int k = 0; k < 3; ++k) {
          auto const& r = p.relators[rng() % p.relators.size()].word;
          GroupWord u = random_word(rng, p.generators.size(), 4);
          w = w * u * (rng() % 2 ? r : r.inverse()) * u.inverse();
        }
        INFO(p.relators.front().label << " " << w.str(p.generators));
        CHECK(a.project(w) == a.one());
      }
    }
  }
}

TEST_CASE("projection is multiplicative and the product associative") {
  std::mt19937 rng(4);
  auto p = pres("gens: a b\nrels: r = a b a^-1 b^-2");
  for (Field f : {Q, F3}) {
    QuotientAlgebra a(p, f, 5);
    for (int trial = 0; trial < 30; ++trial) {
      auto u = random_word(rng, 2, 5), v = random_word(rng, 2, 5);
      CHECK(a.project(u * v) == a.multiply(a.project(u), a.project(v)));
    }
    std::size_t d = a.dimension();
    for (int trial = 0; trial < 30; ++trial) {
      auto e = [&](std::size_t i) { return a.element(SparseVector{{i, Scalar::one(f)}}); };
      auto x = e(rng() % d), y = e(rng() % d), z = e(rng() % d);
      CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
    }
  }
}

TEST_CASE("fox jacobians") {
  auto one = pres("gens: x\nrels: r = x");
  QuotientAlgebra a1(one, Q, 3);
  auto j1 = fox_jacobian(one, a1);
  REQUIRE(j1.size() == 1);
  CHECK(j1[0][0] == a1.one());

  auto comm = pres("gens: x y\nrels: r = [x,y]");
  QuotientAlgebra a2(comm, Q, 4);
  auto j2 = fox_jacobian(comm, a2);
  auto x = a2.project(GroupWord::generator(0)), y = a2.project(GroupWord::generator(1));
  CHECK(j2[0][0] == a2.one() - y);
  CHECK(j2[0][1] == x - a2.one());

  auto twice = pres("gens: x\nrels: r1 = x ; r2 = x");
  QuotientAlgebra a3(twice, Q, 3);
  auto j3 = fox_jacobian(twice, a3);
  REQUIRE(j3.size() == 2);
  CHECK(j3[0][0] == a3.one());
  CHECK(j3[1][0] == a3.one());

  CHECK_THROWS_AS(fox_jacobian(comm, a1), DomainError);
}

TEST_CASE("presentation chain complexes") {
  auto free1 = presentation_chain_complex(pres("gens: x"), Q, 2);
  CHECK(free1.d2.empty());
  REQUIRE(free1.d1.size() == 1);
  CHECK(free1.d1[0].str() == "-X0 - 1/2*X0.X0");

  auto killed = presentation_chain_complex(pres("gens: x\nrels: r = x"), Q, 3);
  CHECK(killed.d2[0][0] == killed.algebra.one());
  CHECK(killed.d1[0].is_zero());
  auto h = graded_homology(killed);
  CHECK(h.back().h2 == 0);
  CHECK(h.back().h1 == 0);
  CHECK(h.back().h0 == 1);

  auto comm = presentation_chain_complex(pres("gens: x y\nrels: r = [x,y]"), Q, 3);
  auto& a = comm.algebra;
  CHECK(comm.d2[0][0] == a.one() - a.project(GroupWord::generator(1)));
  CHECK(comm.d2[0][1] == a.project(GroupWord::generator(0)) - a.one());

  for (auto const& p : aspherical_corpus())
    for (Field f : {Q, F2, F3}) CHECK(presentation_chain_complex(p, f, 4).violations().empty());
  for (char const* other : {"trefoil", "z3", "repeated", "z2_mod2", "free2"}) {
    auto p = load_presentation(std::string(WHLAB_DATA_DIR "/presentations/other/") + other + ".pres");
    CHECK(presentation_chain_complex(p, p.field, 4).violations().empty());
  }
}

TEST_CASE("asphericity probe examples") {
  auto comm = asphericity_probe(pres("gens: x y\nrels: r = [x,y]"), Q, 4);
  CHECK(comm.per_degree_kernel == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(comm.coinvariants == 1);
  CHECK(comm.verdict == Verdict::no_obstruction);
  CHECK_FALSE(comm.witness.has_value());

  auto killed = asphericity_probe(pres("gens: x\nrels: r = x"), Q, 4);
  CHECK(killed.algebra_dimension == 1);
  CHECK(killed.per_degree_kernel == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(killed.coinvariants == 1);
  CHECK(killed.verdict == Verdict::no_obstruction);

  auto twice = asphericity_probe(pres("gens: x\nrels: r1 = x ; r2 = x"), Q, 4);
  CHECK(twice.coinvariants == 1);
  CHECK_FALSE(twice.relators_independent);
  CHECK(twice.verdict == Verdict::relators_dependent);
  REQUIRE(twice.witness.has_value());
  CHECK((*twice.witness)[0] == -(*twice.witness)[1]);
  CHECK(verdict_name(twice.verdict) == "relators-dependent");
}

TEST_CASE("per-degree kernels agree with probes at smaller caps") {
  std::vector<Presentation> all = aspherical_corpus();
  all.push_back(load_presentation(WHLAB_DATA_DIR "/presentations/other/z3.pres"));
  all.push_back(load_presentation(WHLAB_DATA_DIR "/presentations/other/repeated.pres"));
  for (auto const& p : all) {
    auto top = asphericity_probe(p, Q, 4);
    for (std::size_t k = 1; k < 4; ++k) {
      auto lower = asphericity_probe(p, Q, k);
      INFO(render_presentation(p) << " at cap " << k);
      CHECK(lower.per_degree_kernel.back() == top.per_degree_kernel[k - 1]);
    }
  }
}

TEST_CASE("theorem instances") {
  auto two = theorem_instances(pres("gens: x y\nrels: rx = x ; ry = y"), Q, 3);
  REQUIRE(two.rows.size() == 4);
  CHECK(two.rows[0].labels.empty());
  CHECK(two.rows[3].labels == std::vector<std::string>{"rx", "ry"});
  for (auto const& row : two.rows) CHECK(row.report.verdict == Verdict::no_obstruction);
  CHECK(two.contradictions.empty());

  auto comm = theorem_instances(pres("gens: x y\nrels: r = [x,y]"), Q, 4);
  REQUIRE(comm.rows.size() == 2);
  for (auto const& row : comm.rows) CHECK(row.report.verdict == Verdict::no_obstruction);

  auto free2 = theorem_instances(pres("gens: x y"), Q, 4);
  REQUIRE(free2.rows.size() == 1);
  CHECK(free2.rows[0].report.verdict == Verdict::no_obstruction);

  for (auto const& p : aspherical_corpus())
    for (Field f : {Q, F2}) {
      auto t = theorem_instances(p, f, 4);
      INFO(render_presentation(p));
      CHECK(t.contradictions.empty());
      CHECK(t.rows.back().report.verdict == Verdict::no_obstruction);
    }
}

TEST_CASE("non-aspherical presentations are flagged") {
  // 2-skeleton of the 3-torus: pi_2 is free of rank one over the group ring,
  // generated in degree 1 of the domain, so the kernel grows like C(k+1, 3)
  auto z3 = load_presentation(WHLAB_DATA_DIR "/presentations/other/z3.pres");
  for (Field f : {Q, F2, F3}) {
    auto rep = asphericity_probe(z3, f, 6);
    CHECK(rep.verdict == Verdict::kernel_detected);
    CHECK(rep.per_degree_kernel == std::vector<std::size_t>{0, 1, 4, 10, 20, 35});
    CHECK(rep.kernel_generators == 1);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->size() == 3);
  }
  // the projective plane over F2
  auto rp2 = load_presentation(WHLAB_DATA_DIR "/presentations/other/z2_mod2.pres");
  auto rep = asphericity_probe(rp2, F2, 4);
  CHECK(rep.verdict == Verdict::kernel_detected);
  CHECK(rep.per_degree_kernel == std::vector<std::size_t>{0, 1, 1, 1});
  // over Q the same group has a trivial completion
  CHECK(asphericity_probe(rp2, Q, 4).verdict == Verdict::no_obstruction);
}
