#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncgeom/linalg.hpp"
#include "ncgeom/number.hpp"
#include "ncgeom/rational_function.hpp"

namespace ncgeom {

// Finite-dimensional Lie algebra given by exact structure constants:
// [e_i, e_j] = sum_k c[i][j][k] e_k.  Construction validates antisymmetry and
// the Jacobi identity unless the caller explicitly opts out (used by negative
// tests that need a broken table).
class LieAlgebra {
 public:
  struct StructureEntry {
    std::size_t i, j, k;
    GaussianRational value;
  };

  static LieAlgebra from_structure(std::size_t dim,
                                   const std::vector<StructureEntry>& entries);
  static LieAlgebra from_structure_unchecked(std::size_t dim,
                                             const std::vector<StructureEntry>& entries);

  // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2: the compact real form convention,
  // shared by the 3-d rotation algebra in this basis.
  static LieAlgebra su2();
  static LieAlgebra so3();
  // Basis {h, e, f} with [h,e]=2e, [h,f]=-2f, [e,f]=h.
  static LieAlgebra sl2();
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }

  const GaussianRational& c(std::size_t i, std::size_t j, std::size_t k) const;

  // [e_i, e_j] as a coordinate vector.
  std::vector<GaussianRational> bracket_basis(std::size_t i, std::size_t j) const;

  // Matrix of ad(e_i): column j holds the coordinates of [e_i, e_j].
  Matrix<GaussianRational> ad(std::size_t i) const;
  // Matrix of ad(v) for a constant coordinate vector v.
  Matrix<GaussianRational> ad(const std::vector<GaussianRational>& v) const;

  // Killing form B_ij = tr(ad e_i ad e_j).
  Matrix<GaussianRational> killing() const;
  // Nondegeneracy of the Killing form (Cartan's criterion).
  bool is_semisimple() const;

  // Throws ValidationError naming the first broken axiom, if any.
  void validate() const;

 private:
  LieAlgebra(std::size_t dim, const std::vector<StructureEntry>& entries, bool check);

  std::size_t dim_;
  std::vector<GaussianRational> c_;  // dim^3, c_[(i*dim + j)*dim + k]
};

// Element of the Lie algebra with scalar-field coefficients; this is how
// vertical vector fields are represented, the coefficients living over the
// base parameters.
struct LieVector {
  std::vector<RationalFunction> comp;

  static LieVector basis(std::size_t i, std::size_t dim, std::size_t nvars);
  static LieVector zero(std::size_t dim, std::size_t nvars);

  std::size_t dim() const { return comp.size(); }
  bool is_zero() const;

  LieVector operator-() const;
  friend LieVector operator+(LieVector a, const LieVector& b);
  friend LieVector operator-(LieVector a, const LieVector& b);
  LieVector& scale(const RationalFunction& f);

  friend bool operator==(const LieVector& a, const LieVector& b) { return a.comp == b.comp; }
  friend bool operator!=(const LieVector& a, const LieVector& b) { return !(a == b); }

  std::string to_string() const;
};

// Pointwise bracket of coefficient-valued vectors: bilinear over the scalar
// fields because the basis directions do not differentiate the base.
LieVector bracket(const LieAlgebra& g, const LieVector& u, const LieVector& v);

}  // namespace ncgeom
