#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncgeom/number.hpp"

namespace ncgeom {

// Exponent vector; length equals the ambient variable count.  std::map's
// vector ordering is exactly lexicographic order on monomials, which we use
// as the term order throughout.
using Monomial = std::vector<std::uint32_t>;

// Sparse multivariate polynomial over Q(i) in a fixed number of variables.
// The zero polynomial has an empty term map; no stored coefficient is zero.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(const GaussianRational& c, std::size_t nvars);
  static Polynomial variable(std::size_t index, std::size_t nvars);
  static Polynomial monomial(const Monomial& m, const GaussianRational& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (zero polynomial included).
  GaussianRational constant_value() const;

  const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

  // Highest term in lex order; polynomial must be nonzero.
  const std::pair<const Monomial, GaussianRational>& lex_lead() const;

  std::uint32_t degree_in(std::size_t var) const;
  std::uint32_t total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial& scale(const GaussianRational& c);
  Polynomial pow(std::uint32_t e) const;

  Polynomial derivative(std::size_t var) const;

  GaussianRational eval(const std::vector<GaussianRational>& point) const;

  // Coefficients with respect to one variable: degree -> coefficient, where
  // each coefficient has that variable's exponent cleared.  assemble() is the
  // inverse.
  std::map<std::uint32_t, Polynomial> collect(std::size_t var) const;
  static Polynomial assemble(std::size_t var,
                             const std::map<std::uint32_t, Polynomial>& coeffs,
                             std::size_t nvars);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Terms in descending lex order; parses back to the same polynomial.
  std::string to_string() const;

  void add_term(const Monomial& m, const GaussianRational& c);

 private:
  void check_same_space(const Polynomial& o) const;

  std::size_t nvars_;
  std::map<Monomial, GaussianRational> terms_;
};

// Quotient when the division is exact; throws Error otherwise.  Used where
// exactness is guaranteed (content and primitive-part factorisations).
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

// Pseudo-remainder of a by b with respect to one variable: repeatedly clears
// the top coefficient after scaling by b's leading coefficient in that
// variable, so no fractions appear.
Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, std::size_t var);

// gcd of the coefficients of a viewed as univariate in `var`.
Polynomial content(const Polynomial& a, std::size_t var);
Polynomial primitive_part(const Polynomial& a, std::size_t var);

// Monic (lex leading coefficient 1) greatest common divisor via the
// primitive-remainder-sequence algorithm; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace ncgeom
