#pragma once

#include <cstddef>
#include <vector>

#include "whlab/cohomology/gmodule.hpp"

namespace whlab::testing {

/// dims[p][q] = dim H^p(G/H, H^q(H, M)), built from the Hochschild complex of
/// the restriction to H with G/H acting by conjugation on a complement of the
/// coboundaries in the cocycles.
std::vector<std::vector<std::size_t>> lhs_e2_oracle(GModule const& m, std::vector<std::size_t> const& subgroup,
                                                    std::size_t p_max, std::size_t q_max);

}  // namespace whlab::testing
