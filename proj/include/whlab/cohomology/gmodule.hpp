#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "whlab/core/matrix.hpp"
#include "whlab/hopf/finite_group.hpp"

namespace whlab {

/// Finite-dimensional left module over F_p[G], given by one action matrix per
/// group element (column vectors). Equivalently a right comodule over the
/// function Hopf algebra of G.
class GModule {
 public:
  /// Checks action(1) = I and action(gh) = action(g) action(h).
  GModule(FiniteGroupTable group, Field field, std::vector<Matrix> action, std::string name = "M");

  static GModule trivial(FiniteGroupTable const& group, Field field, std::size_t dimension = 1);
  /// F_p[G] with basis e_h and g e_h = e_{gh}.
  static GModule regular(FiniteGroupTable const& group, Field field);
  /// Functions on G with basis the point indicators e_h and (g f)(x) = f(xg),
  /// so g e_h = e_{h g^-1}.
  static GModule functions(FiniteGroupTable const& group, Field field);
  /// Submodule of a few copies of the regular module generated by random
  /// vectors, in a random basis. Dimension is between 1 and max(1, max_dimension).
  static GModule random(FiniteGroupTable const& group, Field field, std::size_t max_dimension,
                        std::mt19937_64& rng);

  FiniteGroupTable const& group() const noexcept { return group_; }
  Field field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::string const& name() const noexcept { return name_; }
  Matrix const& action(std::size_t g) const { return action_[g]; }

  /// Contragredient module: g acts by action(g^-1)^T.
  GModule dual() const;
  /// Restriction along a subgroup given as a sorted element list.
  GModule restrict_to(std::vector<std::size_t> const& subgroup) const;
  /// Module on the row span of `basis`, which must be G-stable.
  GModule submodule(Matrix const& basis) const;
  /// Same module in the basis given by the columns of `change` (action P^-1 A P).
  GModule rebased(Matrix const& change) const;

  /// Empty when valid; otherwise one message per failed identity.
  std::vector<std::string> violations() const;

 private:
  FiniteGroupTable group_;
  Field field_;
  std::size_t dimension_;
  std::vector<Matrix> action_;
  std::string name_;
};

/// Row basis of {v : g v = v for all g}.
Matrix fixed_points(GModule const& m);

struct Coinvariants {
  std::size_t dimension = 0;
  Matrix projection;  // dimension x dim(M), kernel = span{g v - v}
};
Coinvariants coinvariants(GModule const& m);

/// Basis of Hom_G(a, b): each row is a flattened dim(b) x dim(a) matrix X
/// (row-major) with X a(g) = b(g) X for all g.
Matrix intertwiners(GModule const& a, GModule const& b);

/// The isomorphism N (x) O(G) -> N_triv (x) O(G), x (x) e_h -> h x (x) e_h, with
/// O(G) = GModule::functions. Basis index of x_i (x) e_h is i |G| + h.
Matrix untwist(GModule const& n);

/// Diagonal action on a (x) b, Kronecker ordered.
GModule tensor(GModule const& a, GModule const& b);

}  // namespace whlab
