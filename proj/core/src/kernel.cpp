#include "ncgeom/kernel.hpp"

#include "ncgeom/errors.hpp"
#include "ncgeom/linalg.hpp"

namespace ncgeom {

FinSuppKernel FinSuppKernel::delta(const LatticeArrow& arrow) {
  FinSuppKernel k;
  k.set(arrow.a, arrow.b, GaussianRational(1));
  return k;
}

void FinSuppKernel::set(std::int64_t x, std::int64_t y, const GaussianRational& v) {
  if (v.is_zero()) {
    values_.erase({x, y});
  } else {
    values_[{x, y}] = v;
  }
}

GaussianRational FinSuppKernel::at(std::int64_t x, std::int64_t y) const {
  auto it = values_.find({x, y});
  return it == values_.end() ? GaussianRational(0) : it->second;
}

std::set<std::int64_t> FinSuppKernel::column_support(std::int64_t y0) const {
  std::set<std::int64_t> out;
  for (const auto& [xy, v] : values_) {
    if (xy.second == y0) out.insert(xy.first);
  }
  return out;
}

std::set<std::int64_t> FinSuppKernel::right_support() const {
  std::set<std::int64_t> out;
  for (const auto& [xy, v] : values_) out.insert(xy.second);
  return out;
}

FinSuppKernel FinSuppKernel::operator-() const {
  FinSuppKernel out = *this;
  for (auto& [xy, v] : out.values_) v = -v;
  return out;
}

FinSuppKernel operator+(FinSuppKernel a, const FinSuppKernel& b) {
  for (const auto& [xy, v] : b.values_) {
    a.set(xy.first, xy.second, a.at(xy.first, xy.second) + v);
  }
  return a;
}

FinSuppKernel operator-(FinSuppKernel a, const FinSuppKernel& b) {
  for (const auto& [xy, v] : b.values_) {
    a.set(xy.first, xy.second, a.at(xy.first, xy.second) - v);
  }
  return a;
}

FinSuppKernel& FinSuppKernel::scale(const GaussianRational& c) {
  if (c.is_zero()) {
    values_.clear();
    return *this;
  }
  for (auto& [xy, v] : values_) v *= c;
  return *this;
}

FinSuppKernel FinSuppKernel::star() const {
  FinSuppKernel out;
  for (const auto& [xy, v] : values_) out.set(xy.second, xy.first, v.conj());
  return out;
}

std::string FinSuppKernel::to_string() const {
  if (values_.empty()) return "0";
  std::string out;
  for (const auto& [xy, v] : values_) {
    if (!out.empty()) out += " + ";
    out += v.to_string() + "*delta(" + std::to_string(xy.first) + "," +
           std::to_string(xy.second) + ")";
  }
  return out;
}

FinSuppKernel convolve(const FinSuppKernel& a, const FinSuppKernel& b) {
  FinSuppKernel out;
  for (const auto& [xz, va] : a.support()) {
    for (const auto& [zy, vb] : b.support()) {
      if (xz.second != zy.first) continue;
      std::int64_t x = xz.first, y = zy.second;
      out.set(x, y, out.at(x, y) + va * vb);
    }
  }
  return out;
}

FinSuppKernel commutator(const FinSuppKernel& a, const FinSuppKernel& b) {
  return convolve(a, b) - convolve(b, a);
}

FinSuppKernel center_witness(const FinSuppKernel& a, std::int64_t y0) {
  if (a.is_zero()) throw ZeroInput("center witness needs a nonzero kernel");
  std::set<std::int64_t> column = a.column_support(y0);
  if (column.empty()) {
    throw BadColumn("kernel column " + std::to_string(y0) + " carries no support");
  }
  // Pick a point outside the whole right support so a * b vanishes: every
  // convolution term needs a(x, z) b(z, y) with z in both a's right support
  // and b1's support, and those sets are disjoint by construction.
  std::set<std::int64_t> right = a.right_support();
  std::int64_t z1 = *right.rbegin() + 1;
  FinSuppKernel b;
  for (std::int64_t y : column) {
    b.set(z1, y, a.at(y, y0).conj());
  }
  return b;
}

std::vector<FinSuppKernel> kernel_commutant_basis(const Window& support_window,
                                                  const Window& generator_window) {
  const Window& w = support_window;
  const Window& g = generator_window;
  if (w.lo > w.hi || g.lo > g.hi) throw ValidationError("window bounds out of order");
  if (g.lo > w.lo || g.hi < w.hi) {
    throw NotASubset("generator window must contain the support window");
  }
  std::int64_t wn = w.hi - w.lo + 1;
  std::size_t unknowns = static_cast<std::size_t>(wn * wn);
  auto uidx = [&](std::int64_t x, std::int64_t y) {
    return static_cast<std::size_t>((x - w.lo) * wn + (y - w.lo));
  };
  auto in_w = [&](std::int64_t t) { return t >= w.lo && t <= w.hi; };

  GaussianRational zero(0), one(1);
  std::vector<std::vector<GaussianRational>> rows;
  // For each generator arrow (p, q), the commutator with a candidate c
  // supported in the window has entries
  //   [c, delta_(p,q)](x, y) = c(x, p) [y == q] - [x == p] c(q, y),
  // which must vanish for all integer (x, y).  Only finitely many positions
  // can be nonzero; collect one linear equation per such position.
  for (std::int64_t p = g.lo; p <= g.hi; ++p) {
    for (std::int64_t q = g.lo; q <= g.hi; ++q) {
      std::map<std::pair<std::int64_t, std::int64_t>, std::vector<GaussianRational>> eqs;
      auto row_at = [&](std::int64_t x, std::int64_t y) -> std::vector<GaussianRational>& {
        auto it = eqs.find({x, y});
        if (it == eqs.end()) {
          it = eqs.emplace(std::make_pair(x, y), std::vector<GaussianRational>(unknowns, zero))
                   .first;
        }
        return it->second;
      };
      if (in_w(p)) {
        for (std::int64_t x = w.lo; x <= w.hi; ++x) row_at(x, q)[uidx(x, p)] += one;
      }
      if (in_w(q)) {
        for (std::int64_t y = w.lo; y <= w.hi; ++y) row_at(p, y)[uidx(q, y)] -= one;
      }
      for (auto& [pos, row] : eqs) {
        bool nontrivial = false;
        for (const auto& v : row) nontrivial = nontrivial || !v.is_zero();
        if (nontrivial) rows.push_back(std::move(row));
      }
    }
  }

  std::vector<FinSuppKernel> basis;
  if (rows.empty()) {
    // No constraints: every arrow in the window is free.
    for (std::int64_t x = w.lo; x <= w.hi; ++x) {
      for (std::int64_t y = w.lo; y <= w.hi; ++y) {
        basis.push_back(FinSuppKernel::delta(LatticeArrow{x, y}));
      }
    }
    return basis;
  }
  Matrix<GaussianRational> system = matrix_from_rows(rows);
  for (const auto& v : nullspace(std::move(system))) {
    GaussianRational lead = zero;
    for (std::size_t k = 0; k < unknowns; ++k) {
      if (!v.at(k, 0).is_zero()) {
        lead = v.at(k, 0);
        break;
      }
    }
    FinSuppKernel k;
    for (std::int64_t x = w.lo; x <= w.hi; ++x) {
      for (std::int64_t y = w.lo; y <= w.hi; ++y) {
        k.set(x, y, v.at(uidx(x, y), 0) / lead);
      }
    }
    basis.push_back(std::move(k));
  }
  return basis;
}

}  // namespace ncgeom
