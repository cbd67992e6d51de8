#pragma once

#include <string>
#include <vector>

#include "ncgeom/rational_function.hpp"

namespace ncgeom {

// First-order derivation of the scalar field algebra: sum_k a_k d/dx_k with
// rational-function coefficients a_k.  These form a Lie algebra under the
// commutator and a module over the scalars.
class BaseDerivation {
 public:
  explicit BaseDerivation(std::vector<RationalFunction> coeffs);

  static BaseDerivation zero(std::size_t nvars);
  // d/dx_{index+1}.
  static BaseDerivation coordinate(std::size_t index, std::size_t nvars);

  std::size_t nvars() const { return coeffs_.size(); }
  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  const RationalFunction& coeff(std::size_t k) const { return coeffs_.at(k); }

  RationalFunction apply(const RationalFunction& f) const;

  bool is_zero() const;

  BaseDerivation operator-() const;
  BaseDerivation& operator+=(const BaseDerivation& o);
  BaseDerivation& operator-=(const BaseDerivation& o);
  friend BaseDerivation operator+(BaseDerivation a, const BaseDerivation& b) { return a += b; }
  friend BaseDerivation operator-(BaseDerivation a, const BaseDerivation& b) { return a -= b; }

  // Module action f * X.
  BaseDerivation& scale(const RationalFunction& f);

  friend bool operator==(const BaseDerivation& a, const BaseDerivation& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const BaseDerivation& a, const BaseDerivation& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<RationalFunction> coeffs_;
};

// Commutator [X, Y] = XY - YX, again a derivation; its k-th coefficient is
// X(b_k) - Y(a_k).
BaseDerivation bracket(const BaseDerivation& x, const BaseDerivation& y);

}  // namespace ncgeom
