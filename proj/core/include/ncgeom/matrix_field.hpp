#pragma once

#include <string>
#include <vector>

#include "ncgeom/box.hpp"
#include "ncgeom/groupoid.hpp"
#include "ncgeom/linalg.hpp"
#include "ncgeom/rational_function.hpp"

namespace ncgeom {

// Element of the convolution algebra over a base patch: a square matrix of
// exact scalar fields, indexed by the discrete pair coordinates.  With
// counting measure on the fibres, convolution
//   (f * h)(a, b) = sum_z f(a, z) h(z, b)
// is exactly the pointwise matrix product, which is how it is implemented;
// an independent summation over composable arrow factorisations backs this
// up in the tests.
class MatrixField {
 public:
  MatrixField(std::size_t n, std::size_t nvars, Box domain);

  static MatrixField identity(std::size_t n, std::size_t nvars, Box domain);
  static MatrixField zero(std::size_t n, std::size_t nvars, Box domain);
  // Matrix unit supported on the single arrow (a, b).
  static MatrixField delta(const GroupArrow& arrow, std::size_t n, std::size_t nvars,
                           Box domain);
  static MatrixField from_entries(std::vector<std::vector<RationalFunction>> rows, Box domain);

  std::size_t size() const { return n_; }
  std::size_t nvars() const { return nvars_; }
  const Box& domain() const { return domain_; }

  const RationalFunction& entry(std::size_t a, std::size_t b) const;
  RationalFunction& entry(std::size_t a, std::size_t b);

  bool is_zero() const;

  MatrixField operator-() const;
  friend MatrixField operator+(MatrixField a, const MatrixField& b);
  friend MatrixField operator-(MatrixField a, const MatrixField& b);
  MatrixField& scale(const RationalFunction& f);
  MatrixField& scale(const GaussianRational& c);

  // The involution f^*(a, b) = conj(f(b, a)).
  MatrixField star() const;

  // Restriction to a subpatch; the entries are unchanged symbolically.
  MatrixField restrict(const Box& sub) const;

  // Exact pointwise evaluation at a base point inside the domain.
  Matrix<GaussianRational> eval(const std::vector<GaussianRational>& point) const;

  friend bool operator==(const MatrixField& a, const MatrixField& b);
  friend bool operator!=(const MatrixField& a, const MatrixField& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t n_;
  std::size_t nvars_;
  Box domain_;
  std::vector<RationalFunction> entries_;
};

MatrixField convolve(const MatrixField& a, const MatrixField& b);
MatrixField commutator(const MatrixField& a, const MatrixField& b);

// Geometry of the inner derivations, written on the algebra itself through
// the isomorphism a -> ad(a): the unique consistent connection is
// nabla_a b = 1/2 [a, b], and its curvature by the defining formula collapses
// to -1/4 [[a, b], c].  Both sides are exposed so the closed form can be
// checked as an identity.
MatrixField inner_connection(const MatrixField& a, const MatrixField& b);
MatrixField inner_curvature(const MatrixField& a, const MatrixField& b,
                            const MatrixField& c);

// Elementary tensor f (x) B of a scalar field and a constant matrix; these
// span the algebra and drive the intertwiner checks.
struct SimpleTensor {
  RationalFunction scalar;
  Matrix<GaussianRational> op;

  MatrixField embed(const Box& domain) const;
};

// Kernel in action coordinates: value at (p, g) is entry (p, g) of the
// matrix; convolution twists by the action.  to_pair_field pushes through the
// groupoid isomorphism j, under which this product becomes the plain one.
class ActionKernel {
 public:
  ActionKernel(const FiniteGroup* grp, std::size_t nvars, Box domain);

  const FiniteGroup& group() const { return *grp_; }
  const RationalFunction& value(std::size_t p, std::size_t g) const;
  RationalFunction& value(std::size_t p, std::size_t g);
  const Box& domain() const { return domain_; }
  std::size_t nvars() const { return nvars_; }

  MatrixField to_pair_field() const;
  static ActionKernel from_pair_field(const FiniteGroup* grp, const MatrixField& f);

  friend bool operator==(const ActionKernel& a, const ActionKernel& b) {
    return a.values_ == b.values_ && a.domain_ == b.domain_;
  }

 private:
  const FiniteGroup* grp_;
  std::size_t nvars_;
  Box domain_;
  std::vector<RationalFunction> values_;
};

// (f * h)(p, g) = sum over factorisations g = g1 g2 of f(p, g1) h(p g1, g2).
ActionKernel convolve_action(const ActionKernel& a, const ActionKernel& b);

// Z-module basis of the centre of the n x n convolution algebra with
// polynomial entries of total degree <= degree_bound over `nvars` base
// variables.  Computed as the exact nullspace of the commutation constraints
// against the matrix-unit generators; commutation against the scalar
// generators x_k * 1 holds identically and is verified rather than solved.
std::vector<MatrixField> center_basis(std::size_t n, std::size_t nvars,
                                      std::uint32_t degree_bound);

}  // namespace ncgeom
