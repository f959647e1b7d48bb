#include "whlab/cohomology/presentation_complex.hpp"

namespace whlab {

std::vector<std::string> PresentationChainComplex::violations() const {
  std::vector<std::string> bad;
  auto const& p = algebra.presentation();
  for (std::size_t y = 0; y < d2.size(); ++y) {
    TruncatedSeries sum = algebra.zero();
    for (std::size_t x = 0; x < d1.size(); ++x) sum = sum + algebra.multiply(d2[y][x], d1[x]);
    if (!algebra.normal_form(sum).is_zero()) bad.push_back("d1 d2 != 0 on relator " + p.relators[y].label);
  }
  return bad;
}

PresentationChainComplex presentation_chain_complex(Presentation const& p, Field field, std::size_t cap,
                                                    Budget const& budget) {
  QuotientAlgebra a(p, field, cap, budget);
  FoxJacobian j = fox_jacobian(p, a);
  std::vector<TruncatedSeries> d1;
  for (std::size_t x = 0; x < p.generators.size(); ++x)
    d1.push_back(a.one() - a.project(GroupWord::generator(x)));
  return PresentationChainComplex{std::move(a), std::move(j), std::move(d1)};
}

std::vector<GradedHomology> graded_homology(PresentationChainComplex const& c) {
  QuotientAlgebra const& a = c.algebra;
  Field field = a.field();
  std::vector<GradedHomology> out;
  for (std::size_t k = 0; k <= a.cap(); ++k) {
    std::size_t dk = a.dimension_through(k);  // basis positions [0, dk) have degree <= k
    auto cut = [&](SparseVector const& v, std::size_t block) {
      SparseVector w;
      for (auto const& [pos, s] : v)
        if (pos < dk) w.emplace(block * dk + pos, s);
      return w;
    };
    std::vector<SparseVector> d2_images, d1_images;
    for (std::size_t y = 0; y < c.d2.size(); ++y)
      for (std::size_t b = 0; b < dk; ++b) {
        SparseVector img;
        for (std::size_t x = 0; x < c.d1.size(); ++x)
          for (auto const& [t, s] : cut(a.basis_times(b, c.d2[y][x]), x)) img.emplace(t, s);
        d2_images.push_back(std::move(img));
      }
    for (std::size_t x = 0; x < c.d1.size(); ++x)
      for (std::size_t b = 0; b < dk; ++b) d1_images.push_back(cut(a.basis_times(b, c.d1[x]), 0));
    std::size_t r2 = sparse_rank(field, d2_images), r1 = sparse_rank(field, d1_images);
    GradedHomology h;
    h.level = k;
    h.h2 = c.d2.size() * dk - r2;
    h.h1 = c.d1.size() * dk - r1 - r2;
    h.h0 = dk - r1;
    out.push_back(h);
  }
  return out;
}

}  // namespace whlab
