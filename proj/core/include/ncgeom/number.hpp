#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncgeom/errors.hpp"

namespace ncgeom {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

std::string to_string(const BigRational& q);

// Element of Q(i): a + b*i with exact rational a, b.  This is the coefficient
// field for every algebraic object in the library; all arithmetic on it is
// exact.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int n) : re_(n), im_(0) {}          // NOLINT(runtime/explicit)
  GaussianRational(long long n) : re_(n), im_(0) {}    // NOLINT(runtime/explicit)
  GaussianRational(BigInt n) : re_(std::move(n)), im_(0) {}  // NOLINT
  GaussianRational(BigRational re) : re_(std::move(re)), im_(0) {}  // NOLINT
  GaussianRational(BigRational re, BigRational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(BigRational(0), BigRational(1)); }

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  // |z|^2 = z * conj(z), a nonnegative rational.
  BigRational norm_sq() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    BigRational r = re_ * o.re_ - im_ * o.im_;
    BigRational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    BigRational n = o.norm_sq();
    BigRational r = (re_ * o.re_ + im_ * o.im_) / n;
    BigRational m = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  GaussianRational inverse() const {
    GaussianRational one(1);
    return one /= *this;
  }

  std::complex<double> to_complex() const;

  // Printed form parses back to the same value: "0", "-3/4", "i", "2*i",
  // "(1/2-3*i)".  Mixed values are parenthesised so they can be embedded as
  // factors of larger expressions.
  std::string to_string() const;

 private:
  BigRational re_;
  BigRational im_;
};

}  // namespace ncgeom
