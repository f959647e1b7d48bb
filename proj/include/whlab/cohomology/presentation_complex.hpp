#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "whlab/asphericity/probe.hpp"
#include "whlab/asphericity/quotient_algebra.hpp"

namespace whlab {

/// C_2 = A^Y -> C_1 = A^X -> C_0 = A of left A-modules:
/// d2(a e_y) = sum_x a J_yx e_x and d1(a e_x) = a (1 - x).
struct PresentationChainComplex {
  QuotientAlgebra algebra;
  FoxJacobian d2;                       // |Y| x |X|
  std::vector<TruncatedSeries> d1;      // |X| entries 1 - image(x)

  /// (y, x) pairs where sum_x d2[y][x] d1[x] != 0; empty when d1 d2 = 0.
  std::vector<std::string> violations() const;
};

struct GradedHomology {
  std::size_t level = 0;  // computed over A / F_{level+1}
  std::size_t h2 = 0, h1 = 0, h0 = 0;
};

PresentationChainComplex presentation_chain_complex(Presentation const& p, Field field, std::size_t cap,
                                                    Budget const& budget = Budget::from_environment());

/// Homology of the underlying vector-space complex over A / F_{k+1}, k = 0..N.
std::vector<GradedHomology> graded_homology(PresentationChainComplex const& c);

}  // namespace whlab
