#pragma once

#include "ncgeom/derivation.hpp"
#include "ncgeom/linalg.hpp"

namespace ncgeom {

// Block-diagonal metric on the derivation module: a symmetric nondegenerate
// function-valued form on the first `horizontal_count` coordinate directions,
// plus a symmetric nondegenerate constant form on the Lie directions (by
// default the Killing form).  The two sectors are orthogonal.
class BlockMetric {
 public:
  // Horizontal-only metric (no vertical sector).
  BlockMetric(Matrix<RationalFunction> horizontal, std::size_t nvars);
  // Mixed or vertical-only metric; `vertical` must be dim x dim for the
  // given Lie algebra.  `horizontal` may be 0 x 0.
  BlockMetric(Matrix<RationalFunction> horizontal, std::size_t nvars,
              const LieAlgebra* lie, Matrix<GaussianRational> vertical);

  // Vertical metric equal to the Killing form of `lie`.
  static BlockMetric vertical_killing(const LieAlgebra* lie, std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  std::size_t horizontal_count() const { return gh_.rows(); }
  std::size_t lie_dim() const { return gv_.rows(); }
  // Total number of basis directions of the module.
  std::size_t basis_count() const { return horizontal_count() + lie_dim(); }
  const LieAlgebra* lie() const { return lie_; }

  const Matrix<RationalFunction>& horizontal_block() const { return gh_; }
  const Matrix<GaussianRational>& vertical_block() const { return gv_; }

  // Basis derivations of the module: first the horizontal coordinates, then
  // the Lie directions.
  Derivation basis(std::size_t k) const;

  // g(u, v): block-diagonal pairing with function values.
  RationalFunction pair(const Derivation& u, const Derivation& v) const;

  // The full (h+d) x (h+d) metric matrix over the scalar field, and its
  // exact inverse.
  Matrix<RationalFunction> full_matrix() const;
  const Matrix<RationalFunction>& full_inverse() const;

 private:
  void validate();

  std::size_t nvars_;
  const LieAlgebra* lie_;
  Matrix<RationalFunction> gh_;
  Matrix<GaussianRational> gv_;
  mutable std::optional<Matrix<RationalFunction>> inv_;  // cached exact inverse
};

}  // namespace ncgeom
