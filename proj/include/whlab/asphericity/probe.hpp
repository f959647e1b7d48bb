#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "whlab/asphericity/quotient_algebra.hpp"

namespace whlab {

/// Entry (y, x) is the image in A of the left Fox derivative of relator y by
/// generator x. Rows follow the relator order, columns the generator order.
using FoxJacobian = std::vector<std::vector<TruncatedSeries>>;

/// Throws DomainError when the algebra was built from a different presentation.
FoxJacobian fox_jacobian(Presentation const& p, QuotientAlgebra const& a);

enum class Verdict { no_obstruction, kernel_detected, relators_dependent };
std::string verdict_name(Verdict v);

struct AsphericityReport {
  std::size_t algebra_dimension = 0;
  std::size_t relators = 0;
  /// Row valuations of the Jacobian (lowest degree of a nonzero entry).
  std::vector<std::size_t> row_valuations;
  /// per_degree_kernel[k - 1] = dim of the kernel of (a_y) -> sum_y a_y J_y with
  /// a_y in A/F_{k+1-v_y}, values in (A/F_{k+1})^X, for k = 1..N.
  std::vector<std::size_t> per_degree_kernel;
  /// dim of image / (augmentation ideal . image).
  std::size_t coinvariants = 0;
  /// Number of module generators of the kernel at cap N (kernel modulo letters . kernel).
  std::size_t kernel_generators = 0;
  bool relators_independent = true;
  Verdict verdict = Verdict::no_obstruction;
  /// A kernel element (a_y)_y at cap N, present whenever that kernel is nonzero.
  std::optional<std::vector<TruncatedSeries>> witness;
};

/// Verdict order: relators-dependent (coinvariants < |Y|), then kernel-detected
/// (nonzero kernel at cap N), otherwise no obstruction up to degree N.
AsphericityReport asphericity_probe(QuotientAlgebra const& a);
AsphericityReport asphericity_probe(Presentation const& p, Field field, std::size_t cap,
                                    Budget const& budget = Budget::from_environment());

struct InstanceRow {
  std::vector<std::string> labels;
  AsphericityReport report;
};

struct TheoremInstances {
  std::vector<InstanceRow> rows;  // subsets by size, then lexicographically by relator position
  /// "parent {..} is no-obstruction but child {..} is kernel-detected"
  std::vector<std::string> contradictions;
};

/// Probes p and every subpresentation; |Y| <= 10.
TheoremInstances theorem_instances(Presentation const& p, Field field, std::size_t cap,
                                   Budget const& budget = Budget::from_environment());

}  // namespace whlab
