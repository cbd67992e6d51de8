#pragma once

#include <string>
#include <vector>

#include "ncgeom/polynomial.hpp"

namespace ncgeom {

// Element of Q(i)(x1..xm), stored in canonical form:
//   * denominator nonzero, coprime to the numerator, lex-monic;
//   * the zero element is 0/1.
// Two values are equal iff their stored parts are structurally equal, so
// operator== is cheap and reliable.
class RationalFunction {
 public:
  explicit RationalFunction(std::size_t nvars)
      : num_(nvars), den_(Polynomial::constant(GaussianRational(1), nvars)) {}
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction zero(std::size_t nvars) { return RationalFunction(nvars); }
  static RationalFunction one(std::size_t nvars) {
    return constant(GaussianRational(1), nvars);
  }
  static RationalFunction constant(const GaussianRational& c, std::size_t nvars) {
    return RationalFunction(Polynomial::constant(c, nvars));
  }
  static RationalFunction variable(std::size_t index, std::size_t nvars) {
    return RationalFunction(Polynomial::variable(index, nvars));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const;
  bool is_constant() const;
  GaussianRational constant_value() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction& scale(const GaussianRational& c);
  RationalFunction pow(std::uint32_t e) const;
  RationalFunction inverse() const;

  // Coefficient-wise complex conjugation; the variables are treated as real.
  RationalFunction conj() const;

  RationalFunction derivative(std::size_t var) const;

  // Exact evaluation; throws DenominatorZeroAtPoint when the point is a pole.
  GaussianRational eval(const std::vector<GaussianRational>& point) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  void reduce();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace ncgeom
