#pragma once

#include <string>

#include "ncgeom/base_derivation.hpp"
#include "ncgeom/lie.hpp"

namespace ncgeom {

// Derivation of the convolution algebra in the crossed-product picture: a
// horizontal part (a vector field on the base, acting on scalar entries) plus
// a vertical part (a coefficient-valued direction in the Lie algebra, acting
// by inner bracket and killing every scalar).  The two sectors are graded by
// the block metric, and several closed-form operations are only defined on a
// pure sector.
class Derivation {
 public:
  Derivation(BaseDerivation h, LieVector v) : h_(std::move(h)), v_(std::move(v)) {}

  static Derivation horizontal(BaseDerivation h, std::size_t lie_dim);
  static Derivation vertical(LieVector v, std::size_t nvars);
  static Derivation zero(std::size_t nvars, std::size_t lie_dim);

  const BaseDerivation& h() const { return h_; }
  const LieVector& v() const { return v_; }
  std::size_t nvars() const { return h_.nvars(); }
  std::size_t lie_dim() const { return v_.dim(); }

  bool horizontal_part_zero() const { return h_.is_zero(); }
  bool vertical_part_zero() const { return v_.is_zero(); }
  bool is_zero() const { return h_.is_zero() && v_.is_zero(); }

  // Pure-sector accessors used by the closed forms; they insist on purity.
  const LieVector& pure_vertical() const;
  const BaseDerivation& pure_horizontal() const;

  // Action on scalar fields: only the horizontal part survives, since
  // vertical directions annihilate the base functions.
  RationalFunction apply(const RationalFunction& f) const { return h_.apply(f); }

  Derivation operator-() const { return Derivation(-h_, -v_); }
  friend Derivation operator+(const Derivation& a, const Derivation& b) {
    return Derivation(a.h_ + b.h_, a.v_ + b.v_);
  }
  friend Derivation operator-(const Derivation& a, const Derivation& b) {
    return Derivation(a.h_ - b.h_, a.v_ - b.v_);
  }
  Derivation& scale(const RationalFunction& f) {
    h_.scale(f);
    v_.scale(f);
    return *this;
  }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.h_ == b.h_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

  std::string to_string() const;

 private:
  BaseDerivation h_;
  LieVector v_;
};

// Crossed-product bracket: horizontal parts bracket as vector fields, the
// vertical parts bracket pointwise, and the horizontal parts differentiate
// the vertical coefficients.  `lie` may be null when the vertical sector is
// absent (lie_dim 0 on both sides).
Derivation bracket(const LieAlgebra* lie, const Derivation& a, const Derivation& b);

}  // namespace ncgeom
