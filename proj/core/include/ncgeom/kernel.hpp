#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ncgeom/groupoid.hpp"
#include "ncgeom/number.hpp"

namespace ncgeom {

// Finitely supported kernel on the pair groupoid of the integers: a function
// a(x, y) that is nonzero at finitely many arrows.  This is the discrete
// model for the fibre algebra over a single base point, with convolution
//   (a * b)(x, y) = sum_z a(x, z) b(z, y),
// the sum being finite because the supports are.
class FinSuppKernel {
 public:
  FinSuppKernel() = default;

  static FinSuppKernel delta(const LatticeArrow& arrow);

  void set(std::int64_t x, std::int64_t y, const GaussianRational& v);
  GaussianRational at(std::int64_t x, std::int64_t y) const;

  bool is_zero() const { return values_.empty(); }
  std::size_t support_size() const { return values_.size(); }
  const std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational>& support() const {
    return values_;
  }

  // Column y0 of the kernel: the points z with a(z, y0) != 0.
  std::set<std::int64_t> column_support(std::int64_t y0) const;
  // All second coordinates carrying support.
  std::set<std::int64_t> right_support() const;

  FinSuppKernel operator-() const;
  friend FinSuppKernel operator+(FinSuppKernel a, const FinSuppKernel& b);
  friend FinSuppKernel operator-(FinSuppKernel a, const FinSuppKernel& b);
  FinSuppKernel& scale(const GaussianRational& c);

  // The involution a^*(x, y) = conj(a(y, x)).
  FinSuppKernel star() const;

  friend bool operator==(const FinSuppKernel& a, const FinSuppKernel& b) {
    return a.values_ == b.values_;
  }
  friend bool operator!=(const FinSuppKernel& a, const FinSuppKernel& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational> values_;
};

FinSuppKernel convolve(const FinSuppKernel& a, const FinSuppKernel& b);
FinSuppKernel commutator(const FinSuppKernel& a, const FinSuppKernel& b);

// For a nonzero kernel a and a column y0 with support, builds the one-sided
// annihilator witness b(z, y) = b1(z) * conj(a(y, y0)), where b1 is the
// indicator of a point just outside the right support of a.  Then a * b = 0
// while (b * a)(z1, y0) = sum_z |a(z, y0)|^2 > 0, exhibiting a nonzero
// kernel that the convolution product sends to zero on one side only.
// Throws ZeroInput when a = 0 and BadColumn when column y0 is empty.
FinSuppKernel center_witness(const FinSuppKernel& a, std::int64_t y0);

// Integer window [lo, hi], both ends included.
struct Window {
  std::int64_t lo;
  std::int64_t hi;
};

// Basis of the space of kernels supported in support_window x support_window
// that commute with every arrow kernel delta_(p,q) for p, q inside
// generator_window.  The generator window must contain the support window.
// When the windows agree the commutant is spanned by the identity on the
// window; any strictly larger generator window forces it to zero, because a
// candidate must then also commute with arrows that leave the window.
std::vector<FinSuppKernel> kernel_commutant_basis(const Window& support_window,
                                                  const Window& generator_window);

}  // namespace ncgeom
