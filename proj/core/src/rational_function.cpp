#include "ncgeom/rational_function.hpp"

#include "ncgeom/errors.hpp"

namespace ncgeom {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)),
      den_(Polynomial::constant(GaussianRational(1), num_.nvars())) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) {
    throw DimensionMismatch("numerator and denominator variable counts differ");
  }
  if (den_.is_zero()) throw ZeroDenominator();
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(GaussianRational(1), num_.nvars());
    return;
  }
  if (den_.is_constant()) {
    // Common fast path: no gcd needed, just normalise the constant away.
    GaussianRational c = den_.constant_value();
    if (!c.is_one()) num_.scale(c.inverse());
    den_ = Polynomial::constant(GaussianRational(1), num_.nvars());
    return;
  }
  if (!num_.is_constant()) {  // a constant numerator is a unit: nothing to cancel
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  GaussianRational lc = den_.lex_lead().second;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num_.scale(inv);
    den_.scale(inv);
  }
}

bool RationalFunction::is_one() const {
  return den_.is_constant() && !num_.is_zero() && num_.is_constant() &&
         num_.constant_value().is_one();
}

bool RationalFunction::is_polynomial() const { return den_.is_constant(); }

bool RationalFunction::is_constant() const {
  return num_.is_constant() && den_.is_constant();
}

GaussianRational RationalFunction::constant_value() const {
  if (!is_constant()) throw Error("constant_value() on nonconstant rational function");
  return num_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (nvars() != o.nvars()) {
    throw DimensionMismatch("rational functions live over different variable counts");
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (nvars() != o.nvars()) {
    throw DimensionMismatch("rational functions live over different variable counts");
  }
  if (is_zero() || o.is_zero()) {
    *this = zero(nvars());
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees down.
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
  }
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  Polynomial n1 = g1.is_constant() ? num_ : exact_div(num_, g1);
  Polynomial d2 = g1.is_constant() ? o.den_ : exact_div(o.den_, g1);
  Polynomial n2 = g2.is_constant() ? o.num_ : exact_div(o.num_, g2);
  Polynomial d1 = g2.is_constant() ? den_ : exact_div(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero();
  RationalFunction recip(o.den_, o.num_);
  return *this *= recip;
}

RationalFunction& RationalFunction::scale(const GaussianRational& c) {
  if (c.is_zero()) {
    *this = zero(nvars());
    return *this;
  }
  num_.scale(c);
  return *this;
}

RationalFunction RationalFunction::pow(std::uint32_t e) const {
  RationalFunction acc = one(nvars());
  RationalFunction base = *this;
  while (e > 0) {
    if (e & 1u) acc *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return acc;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RationalFunction(den_, num_);
}

namespace {

Polynomial conj_poly(const Polynomial& p) {
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) out.add_term(m, c.conj());
  return out;
}

}  // namespace

RationalFunction RationalFunction::conj() const {
  return RationalFunction(conj_poly(num_), conj_poly(den_));
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  // (n/d)' = (n'd - nd') / d^2, then reduce.
  Polynomial n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return RationalFunction(std::move(n), den_ * den_);
}

GaussianRational RationalFunction::eval(const std::vector<GaussianRational>& point) const {
  GaussianRational d = den_.eval(point);
  if (d.is_zero()) {
    std::string where = "(";
    for (std::size_t k = 0; k < point.size(); ++k) {
      if (k) where += ", ";
      where += point[k].to_string();
    }
    where += ")";
    throw DenominatorZeroAtPoint(where);
  }
  return num_.eval(point) / d;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace ncgeom
