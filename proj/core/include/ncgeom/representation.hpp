#pragma once

#include <string>
#include <vector>

#include "ncgeom/grid.hpp"
#include "ncgeom/matrix_field.hpp"
#include "ncgeom/spectral.hpp"

namespace ncgeom {

// A matrix field observed through a sample grid: one exact matrix per grid
// point.  This is the regular representation of the convolution algebra in
// finite, checkable form — an operator-valued random variable over the
// sampled base.
class RandomOperatorField {
 public:
  RandomOperatorField(SampleGrid grid, std::vector<Matrix<GaussianRational>> samples);

  const SampleGrid& grid() const { return grid_; }
  std::size_t operator_size() const;
  const Matrix<GaussianRational>& sample(std::size_t k) const { return samples_.at(k); }

  friend bool operator==(const RandomOperatorField& a, const RandomOperatorField& b) {
    return a.grid_ == b.grid_ && a.samples_ == b.samples_;
  }
  friend bool operator!=(const RandomOperatorField& a, const RandomOperatorField& b) {
    return !(a == b);
  }

  RandomOperatorField operator-() const;
  friend RandomOperatorField operator+(RandomOperatorField a, const RandomOperatorField& b);
  friend RandomOperatorField operator-(RandomOperatorField a, const RandomOperatorField& b);
  // Pointwise operator product, the image of convolution.
  friend RandomOperatorField operator*(const RandomOperatorField& a,
                                       const RandomOperatorField& b);

 private:
  SampleGrid grid_;
  std::vector<Matrix<GaussianRational>> samples_;
};

// Evaluation of a matrix field over a grid.  Every grid point must avoid the
// poles of every entry; otherwise PoleOnGrid identifies the first offender.
RandomOperatorField represent(const MatrixField& f, const SampleGrid& grid);

// Essential supremum of the operator norm over the sampled base: the maximum
// spectral norm across grid points.
double ess_sup_norm(const RandomOperatorField& f);

// Section of the trivial C^n bundle over a grid, with exact values.
class GridVector {
 public:
  GridVector(const SampleGrid* grid, std::vector<std::vector<GaussianRational>> values);

  const SampleGrid& grid() const { return *grid_; }
  std::size_t fibre_dim() const;
  const std::vector<GaussianRational>& value(std::size_t k) const { return values_.at(k); }

  friend bool operator==(const GridVector& a, const GridVector& b) {
    return a.values_ == b.values_;
  }
  friend bool operator!=(const GridVector& a, const GridVector& b) { return !(a == b); }

 private:
  const SampleGrid* grid_;
  std::vector<std::vector<GaussianRational>> values_;
};

// Weighted L^2 inner product, conjugate-linear in the first slot.
GaussianRational grid_inner(const GridVector& a, const GridVector& b);

// The vector side of the canonical intertwiner: psi (x) phi becomes the
// section x -> psi(x) * phi.
GridVector intertwine_vector(const RationalFunction& psi,
                             const std::vector<GaussianRational>& phi,
                             const SampleGrid& grid);

// Apply a represented field to a section pointwise.
GridVector apply(const RandomOperatorField& f, const GridVector& v);

struct IntertwinerReport {
  bool action_ok;
  bool inner_ok;
  std::string detail;
};

// Checks, over the given grid, that the elementary tensor f (x) B acts on
// psi (x) phi the same way through both routes (exactly), and that the
// intertwiner preserves the weighted L^2 inner product of the pair
// (psi (x) phi, psi2 (x) phi2).
IntertwinerReport tensor_vs_field_intertwiner(const RationalFunction& f,
                                              const Matrix<GaussianRational>& B,
                                              const SampleGrid& grid,
                                              const RationalFunction& psi,
                                              const std::vector<GaussianRational>& phi,
                                              const RationalFunction& psi2,
                                              const std::vector<GaussianRational>& phi2);

// Single-pair convenience: uses the pair against itself for the inner
// product preservation check.
IntertwinerReport tensor_vs_field_intertwiner(const RationalFunction& f,
                                              const Matrix<GaussianRational>& B,
                                              const SampleGrid& grid,
                                              const RationalFunction& psi,
                                              const std::vector<GaussianRational>& phi);

}  // namespace ncgeom
