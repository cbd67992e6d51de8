#include "ncgeom/lie.hpp"

#include "ncgeom/errors.hpp"

namespace ncgeom {

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<StructureEntry>& entries, bool check)
    : dim_(dim), c_(dim * dim * dim, GaussianRational(0)) {
  if (dim == 0) throw ValidationError("Lie algebra needs positive dimension");
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) {
      throw ValidationError("structure constant index out of range");
    }
    c_[(e.i * dim_ + e.j) * dim_ + e.k] += e.value;
  }
  if (check) validate();
}

LieAlgebra LieAlgebra::from_structure(std::size_t dim,
                                      const std::vector<StructureEntry>& entries) {
  return LieAlgebra(dim, entries, true);
}

LieAlgebra LieAlgebra::from_structure_unchecked(std::size_t dim,
                                                const std::vector<StructureEntry>& entries) {
  return LieAlgebra(dim, entries, false);
}

const GaussianRational& LieAlgebra::c(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) {
    throw DimensionMismatch("structure constant index out of range");
  }
  return c_[(i * dim_ + j) * dim_ + k];
}

void LieAlgebra::validate() const {
  GaussianRational zero(0);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if (c(i, j, k) + c(j, i, k) != zero) {
          throw ValidationError("antisymmetry fails at [e" + std::to_string(i + 1) + ",e" +
                                std::to_string(j + 1) + "]");
        }
      }
    }
  }
  // Jacobi: [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0,
  // expanded through the structure constants.
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        for (std::size_t m = 0; m < dim_; ++m) {
          GaussianRational acc(0);
          for (std::size_t l = 0; l < dim_; ++l) {
            acc += c(j, k, l) * c(i, l, m);
            acc += c(k, i, l) * c(j, l, m);
            acc += c(i, j, l) * c(k, l, m);
          }
          if (acc != zero) {
            throw ValidationError("Jacobi identity fails on basis triple (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                  std::to_string(k + 1) + ")");
          }
        }
      }
    }
  }
}

LieAlgebra LieAlgebra::su2() {
  GaussianRational one(1), minus(-1);
  return from_structure(3, {
                               {0, 1, 2, one},
                               {1, 0, 2, minus},
                               {1, 2, 0, one},
                               {2, 1, 0, minus},
                               {2, 0, 1, one},
                               {0, 2, 1, minus},
                           });
}

LieAlgebra LieAlgebra::so3() { return su2(); }

LieAlgebra LieAlgebra::sl2() {
  GaussianRational two(2), mtwo(-2), one(1), minus(-1);
  // Basis order: h = e1, e = e2, f = e3.
  return from_structure(3, {
                               {0, 1, 1, two},
                               {1, 0, 1, mtwo},
                               {0, 2, 2, mtwo},
                               {2, 0, 2, two},
                               {1, 2, 0, one},
                               {2, 1, 0, minus},
                           });
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return from_structure(dim, {}); }

std::vector<GaussianRational> LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  std::vector<GaussianRational> out(dim_, GaussianRational(0));
  for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
  return out;
}

Matrix<GaussianRational> LieAlgebra::ad(std::size_t i) const {
  Matrix<GaussianRational> m = Matrix<GaussianRational>::zeros(dim_, dim_, GaussianRational(0));
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = c(i, j, k);
  }
  return m;
}

Matrix<GaussianRational> LieAlgebra::ad(const std::vector<GaussianRational>& v) const {
  if (v.size() != dim_) throw DimensionMismatch("ad argument dimension mismatch");
  Matrix<GaussianRational> m = Matrix<GaussianRational>::zeros(dim_, dim_, GaussianRational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) += v[i] * c(i, j, k);
    }
  }
  return m;
}

Matrix<GaussianRational> LieAlgebra::killing() const {
  Matrix<GaussianRational> b = Matrix<GaussianRational>::zeros(dim_, dim_, GaussianRational(0));
  std::vector<Matrix<GaussianRational>> ads;
  ads.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad(i));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      b.at(i, j) = (ads[i] * ads[j]).trace();
    }
  }
  return b;
}

bool LieAlgebra::is_semisimple() const {
  return !determinant(killing()).is_zero();
}

LieVector LieVector::basis(std::size_t i, std::size_t dim, std::size_t nvars) {
  LieVector v = zero(dim, nvars);
  if (i >= dim) throw DimensionMismatch("basis index out of range");
  v.comp[i] = RationalFunction::one(nvars);
  return v;
}

LieVector LieVector::zero(std::size_t dim, std::size_t nvars) {
  return LieVector{std::vector<RationalFunction>(dim, RationalFunction::zero(nvars))};
}

bool LieVector::is_zero() const {
  for (const auto& f : comp) {
    if (!f.is_zero()) return false;
  }
  return true;
}

LieVector LieVector::operator-() const {
  LieVector out = *this;
  for (auto& f : out.comp) f = -f;
  return out;
}

LieVector operator+(LieVector a, const LieVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("Lie vector dimension mismatch");
  for (std::size_t k = 0; k < a.comp.size(); ++k) a.comp[k] += b.comp[k];
  return a;
}

LieVector operator-(LieVector a, const LieVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("Lie vector dimension mismatch");
  for (std::size_t k = 0; k < a.comp.size(); ++k) a.comp[k] -= b.comp[k];
  return a;
}

LieVector& LieVector::scale(const RationalFunction& f) {
  for (auto& c : comp) c *= f;
  return *this;
}

std::string LieVector::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < comp.size(); ++k) {
    if (comp[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (comp[k].is_one()) {
      out += "e" + std::to_string(k + 1);
    } else {
      out += "(" + comp[k].to_string() + ")*e" + std::to_string(k + 1);
    }
  }
  return out.empty() ? "0" : out;
}

LieVector bracket(const LieAlgebra& g, const LieVector& u, const LieVector& v) {
  if (u.dim() != g.dim() || v.dim() != g.dim()) {
    throw DimensionMismatch("Lie vector dimension does not match the algebra");
  }
  std::size_t nvars = u.comp.empty() ? 1 : u.comp[0].nvars();
  LieVector out = LieVector::zero(g.dim(), nvars);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (u.comp[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (v.comp[j].is_zero()) continue;
      RationalFunction prod = u.comp[i] * v.comp[j];
      for (std::size_t k = 0; k < g.dim(); ++k) {
        const GaussianRational& ck = g.c(i, j, k);
        if (ck.is_zero()) continue;
        RationalFunction t = prod;
        t.scale(ck);
        out.comp[k] += t;
      }
    }
  }
  return out;
}

}  // namespace ncgeom
