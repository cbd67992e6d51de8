#pragma once

// The concrete symbolic presheaf on a bounded open box: sections over an
// open sub-box are matrix fields with that domain, restriction narrows the
// domain and keeps the entries.  Compatibility on a nonempty open overlap is
// decided by exact rational-function equality, which is the whole content of
// "agree on the overlap" here: a rational function vanishing on a nonempty
// open box is the zero function.  That also makes gluing of a compatible
// cover unique, so this presheaf is a sheaf by construction.

#include <cstddef>
#include <optional>
#include <vector>

#include "ncgeom/box.hpp"
#include "ncgeom/matrix_field.hpp"
#include "ncgeom/number.hpp"
#include "ncgeom/presheaf.hpp"

namespace ncgeom {

struct BoxGlueResult {
  // Only glued or incompatible can occur over boxes; zero or multiple
  // candidates would contradict the identity theorem for rational functions.
  GlueStatus status;
  std::optional<MatrixField> section;
  std::size_t clash_i = 0;
  std::size_t clash_j = 0;
};

class BoxPresheaf {
 public:
  // Sections are n x n matrix fields in `nvars` base variables; `domain` is
  // the global open, and must be bounded so that coverage is decidable.
  BoxPresheaf(std::size_t n, std::size_t nvars, Box domain);

  std::size_t size() const { return n_; }
  std::size_t nvars() const { return nvars_; }
  const Box& domain() const { return domain_; }

  // The restriction map of the presheaf; throws NotASubset like the
  // underlying field restriction.
  MatrixField restrict_section(const MatrixField& f, const Box& sub) const;

  // Pairwise compatibility on overlaps, then the unique section over
  // `target`.  Throws CoverNotInTopology when a cover box is not an open
  // sub-box of the target or the union misses part of the target.
  BoxGlueResult glue(const Box& target, const std::vector<Box>& cover,
                     const std::vector<MatrixField>& sections) const;

  // Germ equality at a base point: by the identity theorem two sections have
  // the same germ exactly when they are symbolically equal, so this is
  // entrywise comparison after validating that the point sits in both
  // domains.
  bool germs_equal(const MatrixField& f, const MatrixField& g,
                   const std::vector<BigRational>& point) const;

 private:
  void check_section(const MatrixField& f) const;

  std::size_t n_;
  std::size_t nvars_;
  Box domain_;
};

// Functoriality and homomorphism sweep over every nested chain drawn from a
// finite family of sub-boxes, applied to the given sections over the global
// domain: restriction composes along chains, commutes with sums and
// convolution products, and restriction to the box itself changes nothing.
std::optional<PresheafViolation> verify_presheaf(
    const BoxPresheaf& presheaf, const std::vector<Box>& opens,
    const std::vector<MatrixField>& sections);

inline BoxGlueResult glue(const BoxPresheaf& presheaf, const Box& target,
                          const std::vector<Box>& cover,
                          const std::vector<MatrixField>& sections) {
  return presheaf.glue(target, cover, sections);
}

}  // namespace ncgeom
