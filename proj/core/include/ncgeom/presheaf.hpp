#pragma once

// Presheaves of finite-dimensional algebras over a finite topology, with the
// gluing axiom, germs/stalks, and the canonical sheafification.  Everything
// is exact linear algebra over Q(i): sections of an open are coefficient
// vectors against a chosen basis, restrictions are matrices, and products
// come from structure-constant tables.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncgeom/linalg.hpp"
#include "ncgeom/number.hpp"
#include "ncgeom/topology.hpp"

namespace ncgeom {

// A finite-dimensional algebra presented on a basis: left_mult[i] is the
// matrix of left multiplication by basis vector e_i, so the structure
// constant c^k_{ij} of e_i e_j sits at left_mult[i].at(k, j).
struct SectionAlgebra {
  std::size_t dim = 0;
  std::vector<Matrix<GaussianRational>> left_mult;

  static SectionAlgebra zero();
  static SectionAlgebra scalars();
  // Q(i)-valued functions on `npoints` points under pointwise product.
  static SectionAlgebra functions(std::size_t npoints);
  // Full matrix algebra of n x n matrices on the basis E_ab, row-major.
  static SectionAlgebra matrix_algebra(std::size_t n);

  // Shape consistency; throws ValidationError.
  void validate() const;
  Matrix<GaussianRational> product(const Matrix<GaussianRational>& x,
                                   const Matrix<GaussianRational>& y) const;
};

// First defect found by a verification sweep: which rule broke and on which
// opens (outermost first, printed as point sets or box descriptions).
struct PresheafViolation {
  std::string kind;  // "identity" | "functoriality" | "homomorphism"
  std::vector<std::string> chain;
  std::string message;
};

enum class GlueStatus { glued, incompatible, no_candidate, multiple_candidates };

struct GlueResult {
  GlueStatus status;
  // glued: coefficients of the unique section over the union.
  std::optional<Matrix<GaussianRational>> section;
  // incompatible: indices into the cover of the clashing pair.
  std::size_t clash_i = 0;
  std::size_t clash_j = 0;
  // multiple_candidates: two distinct sections with equal restrictions.
  std::vector<Matrix<GaussianRational>> witnesses;
};

// A cover of some open together with the way gluing fails on it.
struct SheafFailure {
  std::uint32_t open = 0;
  std::vector<std::uint32_t> cover;
  GlueStatus kind = GlueStatus::no_candidate;
};

struct Stalk {
  std::uint32_t neighborhood = 0;  // smallest open around the point
  SectionAlgebra algebra;
};

class TabulatedPresheaf {
 public:
  // `spaces` is indexed like topo.opens(); `restrictions` maps (U, V) with
  // V an open subset of U to the d_V x d_U matrix of the restriction
  // F(U) -> F(V).  Omitted diagonal entries default to the identity; every
  // off-diagonal inclusion pair must be present.  Shapes are validated here;
  // the functor laws are checked by verify(), not at construction, so that
  // deliberately broken presheaves can be built and reported on.
  TabulatedPresheaf(FiniteTopology topo, std::vector<SectionAlgebra> spaces,
                    std::map<std::pair<std::uint32_t, std::uint32_t>,
                             Matrix<GaussianRational>>
                        restrictions);

  const FiniteTopology& topology() const { return topo_; }
  std::size_t dim(std::uint32_t open) const;
  const SectionAlgebra& space(std::uint32_t open) const;
  const Matrix<GaussianRational>& restriction(std::uint32_t from,
                                              std::uint32_t to) const;
  // The full restriction family, diagonal included, keyed by (U, V).
  std::map<std::pair<std::uint32_t, std::uint32_t>, Matrix<GaussianRational>>
  restrictions() const;

  Matrix<GaussianRational> product(std::uint32_t open,
                                   const Matrix<GaussianRational>& x,
                                   const Matrix<GaussianRational>& y) const;

  // Contravariant functor laws plus multiplicativity of every restriction,
  // swept exhaustively; nullopt means pass.
  std::optional<PresheafViolation> verify() const;

  // Pairwise compatibility on intersections, then the exact solution set of
  // "one section over the union restricting to each piece".  Throws
  // CoverNotInTopology for a cover member that is not open.
  GlueResult glue(const std::vector<std::uint32_t>& cover,
                  const std::vector<Matrix<GaussianRational>>& sections) const;

  // Does every compatible family over every cover of every open glue
  // uniquely?  Checked by rank identities over all antichain covers, which
  // carry the same glue data as arbitrary covers; nullopt means sheaf.
  std::optional<SheafFailure> check_sheaf_axiom() const;

  Stalk stalk(std::size_t p) const;
  // Coefficients in the stalk basis of the germ at p of a section over U.
  Matrix<GaussianRational> germ(std::uint32_t open,
                                const Matrix<GaussianRational>& f,
                                std::size_t p) const;
  // The literal germ relation: some open W with p in W inside both domains
  // on which the two sections restrict equally.
  bool germs_equal(std::uint32_t open_f, const Matrix<GaussianRational>& f,
                   std::uint32_t open_g, const Matrix<GaussianRational>& g,
                   std::size_t p) const;

 private:
  std::size_t index_of(std::uint32_t open) const;

  FiniteTopology topo_;
  std::vector<SectionAlgebra> spaces_;
  // restr_[iU][iV] is set iff opens()[iV] is a subset of opens()[iU].
  std::vector<std::vector<std::optional<Matrix<GaussianRational>>>> restr_;
};

// The sheaf of coherent stalk families: a section over U assigns to every
// point of U a germ, consistently along "q lies in the smallest neighborhood
// of p".  `canonical[k]` is the comparison map F(opens()[k]) -> sheaf space;
// it is an isomorphism on every open exactly when F was already a sheaf.
struct SheafifyResult {
  TabulatedPresheaf sheaf;
  std::vector<Matrix<GaussianRational>> canonical;
};

// Requires verify() to pass (throws ValidationError otherwise): the functor
// laws are what make coherent families closed under products and
// projections.
SheafifyResult sheafify(const TabulatedPresheaf& presheaf);

// Free-function spellings of the member operations.
inline std::optional<PresheafViolation> verify_presheaf(
    const TabulatedPresheaf& presheaf) {
  return presheaf.verify();
}
inline GlueResult glue(const TabulatedPresheaf& presheaf,
                       const std::vector<std::uint32_t>& cover,
                       const std::vector<Matrix<GaussianRational>>& sections) {
  return presheaf.glue(cover, sections);
}
inline Stalk stalk(const TabulatedPresheaf& presheaf, std::size_t p) {
  return presheaf.stalk(p);
}

// The same algebra over every nonempty open with identity restrictions; over
// the empty set either the algebra again (the literal constant functor, the
// classic non-sheaf) or the zero algebra.
TabulatedPresheaf constant_presheaf(const FiniteTopology& topo,
                                    const SectionAlgebra& algebra,
                                    bool zero_on_empty = false);

// F(U) = functions on the points of U with pointwise product; restrictions
// forget coordinates.  Always a sheaf.
TabulatedPresheaf function_presheaf(const FiniteTopology& topo);

}  // namespace ncgeom
