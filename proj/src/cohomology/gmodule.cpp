#include "whlab/cohomology/gmodule.hpp"

#include "whlab/core/errors.hpp"

namespace whlab {

namespace {

Matrix random_matrix(Field field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coin(0, static_cast<long>(field.characteristic()) - 1);
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, coin(rng));
  return m;
}

}  // namespace

GModule::GModule(FiniteGroupTable group, Field field, std::vector<Matrix> action, std::string name)
    : group_(std::move(group)),
      field_(field),
      dimension_(action.empty() ? 0 : action.front().rows()),
      action_(std::move(action)),
      name_(std::move(name)) {
  if (field_.is_rational()) throw DomainError("G-modules are defined over F_p");
  auto bad = violations();
  if (!bad.empty()) throw DomainError("invalid G-module: " + bad.front());
}

std::vector<std::string> GModule::violations() const {
  std::vector<std::string> bad;
  std::size_t n = group_.order();
  if (action_.size() != n) {
    bad.push_back("expected " + std::to_string(n) + " action matrices");
    return bad;
  }
  for (std::size_t g = 0; g < n; ++g) {
    Matrix const& a = action_[g];
    if (a.rows() != dimension_ || a.cols() != dimension_ || a.field() != field_) {
      bad.push_back("action of " + group_.label(g) + " has the wrong shape or field");
      return bad;
    }
  }
  if (!(action_[group_.identity()] == Matrix::identity(field_, dimension_)))
    bad.push_back("identity does not act as the identity");
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (!(action_[group_.mul(g, h)] == action_[g] * action_[h]))
        bad.push_back("action(" + group_.label(g) + "*" + group_.label(h) + ") != product");
  return bad;
}

GModule GModule::trivial(FiniteGroupTable const& group, Field field, std::size_t dimension) {
  std::vector<Matrix> action(group.order(), Matrix::identity(field, dimension));
  return GModule(group, field, std::move(action), "trivial");
}

GModule GModule::regular(FiniteGroupTable const& group, Field field) {
  std::size_t n = group.order();
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < n; ++g) {
    Matrix a(field, n, n);
    for (std::size_t h = 0; h < n; ++h) a.set(group.mul(g, h), h, 1L);
    action.push_back(std::move(a));
  }
  return GModule(group, field, std::move(action), "regular");
}

GModule GModule::functions(FiniteGroupTable const& group, Field field) {
  std::size_t n = group.order();
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < n; ++g) {
    Matrix a(field, n, n);
    for (std::size_t h = 0; h < n; ++h) a.set(group.mul(h, group.inv(g)), h, 1L);
    action.push_back(std::move(a));
  }
  return GModule(group, field, std::move(action), "functions");
}

GModule GModule::random(FiniteGroupTable const& group, Field field, std::size_t max_dimension,
                        std::mt19937_64& rng) {
  std::size_t n = group.order();
  std::uniform_int_distribution<std::size_t> small(1, 2);
  std::uniform_int_distribution<std::size_t> element(0, n - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::size_t copies = small(rng);
    GModule reg = regular(group, field);
    std::vector<Matrix> action;
    for (std::size_t g = 0; g < n; ++g) {
      Matrix a(field, copies * n, copies * n);
      for (std::size_t c = 0; c < copies; ++c) a.paste(reg.action(g), c * n, c * n);
      action.push_back(std::move(a));
    }
    GModule ambient(group, field, action, "ambient");
    Matrix gens = random_matrix(field, small(rng), copies * n, rng);
    // push generators into powers of the augmentation ideal to shrink the span
    std::size_t pushes = attempt / 4;
    for (std::size_t k = 0; k < pushes; ++k) {
      std::size_t g = element(rng);
      gens = gens * (ambient.action(g) - Matrix::identity(field, copies * n)).transpose();
    }
    Matrix span(field, 0, copies * n);
    for (std::size_t g = 0; g < n; ++g) span = vstack(span, gens * ambient.action(g).transpose());
    span = row_space_basis(span);
    if (span.rows() == 0 || span.rows() > std::max<std::size_t>(1, max_dimension)) continue;
    GModule sub = ambient.submodule(span);
    Matrix change = random_matrix(field, sub.dimension(), sub.dimension(), rng);
    while (rank(change) < sub.dimension()) change = random_matrix(field, sub.dimension(), sub.dimension(), rng);
    GModule out = sub.rebased(change);
    out.name_ = "random";
    return out;
  }
  return trivial(group, field, 1);
}

GModule GModule::dual() const {
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < group_.order(); ++g) action.push_back(action_[group_.inv(g)].transpose());
  return GModule(group_, field_, std::move(action), name_ + "*");
}

GModule GModule::restrict_to(std::vector<std::size_t> const& subgroup) const {
  std::vector<Matrix> action;
  for (auto g : subgroup) action.push_back(action_[g]);
  return GModule(group_.restrict_to(subgroup), field_, std::move(action), name_);
}

GModule GModule::submodule(Matrix const& basis) const {
  Matrix s = row_space_basis(basis);
  auto pivots = row_reduce(s).pivots;
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < group_.order(); ++g) {
    Matrix images = s * action_[g].transpose();  // row j = g s_j
    Matrix coords = images.select_columns(pivots);
    if (!(coords * s == images)) throw DomainError("subspace is not G-stable");
    action.push_back(coords.transpose());
  }
  return GModule(group_, field_, std::move(action), name_ + "'");
}

GModule GModule::rebased(Matrix const& change) const {
  Matrix inv = inverse(change);
  std::vector<Matrix> action;
  for (auto const& a : action_) action.push_back(inv * a * change);
  return GModule(group_, field_, std::move(action), name_);
}

Matrix fixed_points(GModule const& m) {
  std::size_t d = m.dimension();
  Matrix stacked(m.field(), 0, d);
  Matrix id = Matrix::identity(m.field(), d);
  for (std::size_t g = 0; g < m.group().order(); ++g) stacked = vstack(stacked, m.action(g) - id);
  if (stacked.rows() == 0) return id;
  return kernel_basis(stacked);
}

Coinvariants coinvariants(GModule const& m) {
  std::size_t d = m.dimension();
  Matrix moved(m.field(), 0, d);  // rows g v - v over basis vectors v
  Matrix id = Matrix::identity(m.field(), d);
  for (std::size_t g = 0; g < m.group().order(); ++g)
    moved = vstack(moved, (m.action(g) - id).transpose());
  Coinvariants out;
  out.projection = moved.rows() == 0 ? id : kernel_basis(moved);
  out.dimension = out.projection.rows();
  return out;
}

Matrix intertwiners(GModule const& a, GModule const& b) {
  if (a.group().order() != b.group().order() || a.field() != b.field())
    throw DomainError("intertwiners: modules over different groups or fields");
  std::size_t da = a.dimension(), db = b.dimension(), n = a.group().order();
  Matrix system(a.field(), n * db * da, db * da);
  for (std::size_t g = 0; g < n; ++g) {
    Matrix const& ag = a.action(g);
    Matrix const& bg = b.action(g);
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t c = 0; c < da; ++c) {
        std::size_t eq = (g * db + r) * da + c;
        for (std::size_t k = 0; k < da; ++k)
          if (!ag.is_zero_at(k, c)) system.add(eq, r * da + k, ag.at(k, c));
        for (std::size_t k = 0; k < db; ++k)
          if (!bg.is_zero_at(r, k)) system.add(eq, k * da + c, -bg.at(r, k));
      }
  }
  return kernel_basis(system);
}

Matrix untwist(GModule const& module) {
  std::size_t n = module.group().order(), d = module.dimension();
  Matrix u(module.field(), d * n, d * n);
  for (std::size_t h = 0; h < n; ++h) {
    Matrix const& ah = module.action(h);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (!ah.is_zero_at(k, i)) u.set(k * n + h, i * n + h, ah.at(k, i));
  }
  return u;
}

GModule tensor(GModule const& a, GModule const& b) {
  if (a.group().order() != b.group().order()) throw DomainError("tensor: different groups");
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < a.group().order(); ++g) action.push_back(kronecker(a.action(g), b.action(g)));
  return GModule(a.group(), a.field(), std::move(action), a.name() + "(x)" + b.name());
}

}  // namespace whlab
