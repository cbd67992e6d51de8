#include "ncgeom/metric.hpp"

#include "ncgeom/errors.hpp"

namespace ncgeom {

BlockMetric::BlockMetric(Matrix<RationalFunction> horizontal, std::size_t nvars)
    : BlockMetric(std::move(horizontal), nvars, nullptr,
                  Matrix<GaussianRational>::zeros(0, 0, GaussianRational(0))) {}

BlockMetric::BlockMetric(Matrix<RationalFunction> horizontal, std::size_t nvars,
                         const LieAlgebra* lie, Matrix<GaussianRational> vertical)
    : nvars_(nvars), lie_(lie), gh_(std::move(horizontal)), gv_(std::move(vertical)) {
  validate();
}

BlockMetric BlockMetric::vertical_killing(const LieAlgebra* lie, std::size_t nvars) {
  if (lie == nullptr) throw ValidationError("vertical metric needs a Lie algebra");
  Matrix<RationalFunction> none =
      Matrix<RationalFunction>::zeros(0, 0, RationalFunction::zero(nvars));
  return BlockMetric(std::move(none), nvars, lie, lie->killing());
}

void BlockMetric::validate() {
  if (nvars_ == 0) throw DimensionMismatch("metric needs a base variable");
  if (gh_.rows() != gh_.cols()) throw DimensionMismatch("horizontal block must be square");
  if (gh_.rows() > nvars_) {
    throw DimensionMismatch("horizontal block larger than the coordinate count");
  }
  if (gv_.rows() != gv_.cols()) throw DimensionMismatch("vertical block must be square");
  if (gv_.rows() > 0) {
    if (lie_ == nullptr || lie_->dim() != gv_.rows()) {
      throw DimensionMismatch("vertical block must match the Lie algebra dimension");
    }
  }
  for (std::size_t i = 0; i < gh_.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gh_.at(i, j) != gh_.at(j, i)) {
        throw ValidationError("horizontal metric block is not symmetric");
      }
    }
  }
  for (std::size_t i = 0; i < gv_.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gv_.at(i, j) != gv_.at(j, i)) {
        throw ValidationError("vertical metric block is not symmetric");
      }
    }
  }
  if (gh_.rows() > 0 && determinant(gh_).is_zero()) {
    throw DegenerateMetric("horizontal metric block is degenerate");
  }
  if (gv_.rows() > 0 && determinant(gv_).is_zero()) {
    throw DegenerateMetric("vertical metric block is degenerate");
  }
  if (gh_.rows() == 0 && gv_.rows() == 0) {
    throw DimensionMismatch("metric has no directions at all");
  }
}

Derivation BlockMetric::basis(std::size_t k) const {
  std::size_t h = horizontal_count();
  if (k < h) {
    return Derivation::horizontal(BaseDerivation::coordinate(k, nvars_), lie_dim());
  }
  if (k < h + lie_dim()) {
    return Derivation::vertical(LieVector::basis(k - h, lie_dim(), nvars_), nvars_);
  }
  throw DimensionMismatch("metric basis index out of range");
}

RationalFunction BlockMetric::pair(const Derivation& u, const Derivation& v) const {
  if (u.nvars() != nvars_ || v.nvars() != nvars_ || u.lie_dim() != lie_dim() ||
      v.lie_dim() != lie_dim()) {
    throw DimensionMismatch("derivation does not match the metric's sectors");
  }
  RationalFunction acc = RationalFunction::zero(nvars_);
  std::size_t h = horizontal_count();
  // Only the first h horizontal coordinates are metrised; a derivation using
  // coordinates beyond them cannot be measured.
  for (std::size_t k = h; k < nvars_; ++k) {
    if (!u.h().coeff(k).is_zero() || !v.h().coeff(k).is_zero()) {
      throw SectorMismatch("derivation uses a coordinate outside the metrised block");
    }
  }
  for (std::size_t i = 0; i < h; ++i) {
    if (u.h().coeff(i).is_zero()) continue;
    for (std::size_t j = 0; j < h; ++j) {
      if (v.h().coeff(j).is_zero()) continue;
      acc += u.h().coeff(i) * gh_.at(i, j) * v.h().coeff(j);
    }
  }
  for (std::size_t i = 0; i < lie_dim(); ++i) {
    if (u.v().comp[i].is_zero()) continue;
    for (std::size_t j = 0; j < lie_dim(); ++j) {
      if (v.v().comp[j].is_zero()) continue;
      RationalFunction t = u.v().comp[i] * v.v().comp[j];
      t.scale(gv_.at(i, j));
      acc += t;
    }
  }
  return acc;
}

Matrix<RationalFunction> BlockMetric::full_matrix() const {
  std::size_t n = basis_count();
  Matrix<RationalFunction> g =
      Matrix<RationalFunction>::zeros(n, n, RationalFunction::zero(nvars_));
  std::size_t h = horizontal_count();
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) g.at(i, j) = gh_.at(i, j);
  }
  for (std::size_t i = 0; i < lie_dim(); ++i) {
    for (std::size_t j = 0; j < lie_dim(); ++j) {
      g.at(h + i, h + j) = RationalFunction::constant(gv_.at(i, j), nvars_);
    }
  }
  return g;
}

const Matrix<RationalFunction>& BlockMetric::full_inverse() const {
  if (!inv_) {
    auto maybe = inverse(full_matrix());
    if (!maybe) throw DegenerateMetric("metric matrix is singular");  // unreachable after validate
    inv_ = std::move(*maybe);
  }
  return *inv_;
}

}  // namespace ncgeom
