#include "whlab/asphericity/probe.hpp"

#include <algorithm>

namespace whlab {

FoxJacobian fox_jacobian(Presentation const& p, QuotientAlgebra const& a) {
  if (p.generators != a.presentation().generators || p.relators != a.presentation().relators)
    throw DomainError("the algebra was built from a different presentation");
  FoxJacobian j;
  for (auto const& r : p.relators) {
    std::vector<TruncatedSeries> row;
    for (std::size_t x = 0; x < p.generators.size(); ++x) row.push_back(a.project(fox_derivative(r.word, x)));
    j.push_back(std::move(row));
  }
  return j;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::no_obstruction:
      return "no-obstruction-to-degree-N";
    case Verdict::kernel_detected:
      return "kernel-detected";
    case Verdict::relators_dependent:
      return "relators-dependent";
  }
  return "?";
}

namespace {

// Image of one domain basis vector: basis element `k` placed in relator slot `y`.
struct DomainVector {
  std::size_t slot;
  std::size_t basis;
  std::size_t degree;
  SparseVector image;  // over (generator, basis position) -> generator * dim + position
};

}  // namespace

AsphericityReport asphericity_probe(QuotientAlgebra const& a) {
  Presentation const& p = a.presentation();
  FoxJacobian jac = fox_jacobian(p, a);
  std::size_t dim = a.dimension(), cap = a.cap(), nx = p.generators.size(), ny = p.relators.size();
  Field field = a.field();

  AsphericityReport rep;
  rep.algebra_dimension = dim;
  rep.relators = ny;
  for (auto const& row : jac) {
    std::size_t v = cap + 1;
    for (auto const& e : row) v = std::min(v, a.valuation(e));
    rep.row_valuations.push_back(v > cap ? 0 : v);
  }

  std::vector<DomainVector> domain;
  for (std::size_t y = 0; y < ny; ++y) {
    std::size_t v = rep.row_valuations[y];
    for (std::size_t k = 0; k < dim; ++k) {
      std::size_t deg = a.basis()[k].size();
      if (deg + v > cap) continue;
      DomainVector dv{y, k, deg, {}};
      for (std::size_t x = 0; x < nx; ++x)
        for (auto const& [pos, c] : a.basis_times(k, jac[y][x])) dv.image.emplace(x * dim + pos, c);
      domain.push_back(std::move(dv));
    }
  }

  for (std::size_t k = 1; k <= cap; ++k) {
    std::vector<SparseVector> images;
    for (auto const& dv : domain) {
      if (dv.degree + rep.row_valuations[dv.slot] > k) continue;
      SparseVector cut;
      for (auto const& [t, c] : dv.image)
        if (a.basis()[t % dim].size() <= k) cut.emplace(t, c);
      images.push_back(std::move(cut));
    }
    rep.per_degree_kernel.push_back(images.size() - sparse_rank(field, images));
  }

  std::vector<SparseVector> all, positive;
  for (auto const& dv : domain) {
    all.push_back(dv.image);
    if (dv.degree >= 1) positive.push_back(dv.image);
  }
  rep.coinvariants = sparse_rank(field, all) - sparse_rank(field, positive);
  rep.relators_independent = rep.coinvariants == ny;

  std::size_t top_kernel = rep.per_degree_kernel.empty() ? 0 : rep.per_degree_kernel.back();
  if (top_kernel > 0) {
    Matrix kernel = sparse_kernel(field, all);
    std::vector<std::size_t> column_of(ny * dim, domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) column_of[domain[i].slot * dim + domain[i].basis] = i;

    auto as_elements = [&](Matrix const& row) {
      std::vector<TruncatedSeries> out(ny, a.zero());
      for (std::size_t i = 0; i < domain.size(); ++i)
        if (!row.is_zero_at(0, i)) out[domain[i].slot].add_term(a.basis()[domain[i].basis], row.at(0, i));
      return out;
    };
    rep.witness = as_elements(kernel.row(0));

    // letters times kernel, truncated to each slot's domain
    std::vector<SparseVector> moved;
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
      auto elems = as_elements(kernel.row(r));
      for (std::size_t i = 0; i < a.alphabet(); ++i) {
        SparseVector v;
        TruncatedSeries letter = TruncatedSeries::letter(field, a.alphabet(), cap, i);
        for (std::size_t y = 0; y < ny; ++y)
          for (auto const& [pos, c] : a.coordinates(letter * elems[y])) {
            std::size_t col = column_of[y * dim + pos];
            if (col < domain.size()) v.emplace(col, c);
          }
        moved.push_back(std::move(v));
      }
    }
    rep.kernel_generators = kernel.rows() - sparse_rank(field, moved);
  }

  if (!rep.relators_independent)
    rep.verdict = Verdict::relators_dependent;
  else if (top_kernel > 0)
    rep.verdict = Verdict::kernel_detected;
  else
    rep.verdict = Verdict::no_obstruction;
  return rep;
}

AsphericityReport asphericity_probe(Presentation const& p, Field field, std::size_t cap, Budget const& budget) {
  return asphericity_probe(QuotientAlgebra(p, field, cap, budget));
}

TheoremInstances theorem_instances(Presentation const& p, Field field, std::size_t cap, Budget const& budget) {
  std::size_t ny = p.relators.size();
  if (ny > 10) throw BudgetExceeded("theorem instances need 2^" + std::to_string(ny) + " probes; at most 10 relators");
  std::vector<std::size_t> masks;
  for (std::size_t m = 0; m < (std::size_t{1} << ny); ++m) masks.push_back(m);
  auto members = [&](std::size_t m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ny; ++i)
      if (m >> i & 1U) out.push_back(i);
    return out;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](std::size_t a, std::size_t b) {
    auto ma = members(a), mb = members(b);
    if (ma.size() != mb.size()) return ma.size() < mb.size();
    return ma < mb;
  });

  TheoremInstances out;
  for (auto m : masks) {
    InstanceRow row;
    for (auto i : members(m)) row.labels.push_back(p.relators[i].label);
    row.report = asphericity_probe(subpresentation(p, row.labels), field, cap, budget);
    out.rows.push_back(std::move(row));
  }
  auto braces = [](std::vector<std::string> const& labels) {
    std::string s = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
    return s + "}";
  };
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (out.rows[i].report.verdict != Verdict::no_obstruction) continue;
    for (std::size_t j = 0; j < masks.size(); ++j) {
      bool proper_child = (masks[j] & masks[i]) == masks[j] && masks[j] != masks[i];
      if (proper_child && out.rows[j].report.verdict == Verdict::kernel_detected)
        out.contradictions.push_back("parent " + braces(out.rows[i].labels) + " is no-obstruction but child " +
                                     braces(out.rows[j].labels) + " is kernel-detected");
    }
  }
  return out;
}

}  // namespace whlab
