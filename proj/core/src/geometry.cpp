#include "ncgeom/geometry.hpp"

#include "ncgeom/errors.hpp"

namespace ncgeom {

RationalFunction koszul(const BlockMetric& g, const Derivation& u, const Derivation& v,
                        const Derivation& w) {
  const LieAlgebra* lie = g.lie();
  RationalFunction acc = u.apply(g.pair(v, w));
  acc += v.apply(g.pair(u, w));
  acc -= w.apply(g.pair(u, v));
  acc += g.pair(bracket(lie, u, v), w);
  acc -= g.pair(bracket(lie, v, w), u);
  acc += g.pair(bracket(lie, w, u), v);
  GaussianRational half(BigRational(1, 2));
  acc.scale(half);
  return acc;
}

namespace {

Derivation from_coordinates(const BlockMetric& g, const Matrix<RationalFunction>& coords) {
  std::size_t h = g.horizontal_count();
  std::size_t d = g.lie_dim();
  std::vector<RationalFunction> hc(g.nvars(), RationalFunction::zero(g.nvars()));
  for (std::size_t k = 0; k < h; ++k) hc[k] = coords.at(k, 0);
  LieVector v = LieVector::zero(d, g.nvars());
  for (std::size_t k = 0; k < d; ++k) v.comp[k] = coords.at(h + k, 0);
  return Derivation(BaseDerivation(std::move(hc)), std::move(v));
}

RationalFunction coordinate_of(const BlockMetric& g, const Derivation& x, std::size_t j) {
  std::size_t h = g.horizontal_count();
  if (j < h) return x.h().coeff(j);
  return x.v().comp[j - h];
}

}  // namespace

Derivation nabla(const BlockMetric& g, const Derivation& u, const Derivation& v) {
  std::size_t n = g.basis_count();
  Matrix<RationalFunction> k =
      Matrix<RationalFunction>::zeros(n, 1, RationalFunction::zero(g.nvars()));
  for (std::size_t j = 0; j < n; ++j) {
    k.at(j, 0) = koszul(g, u, v, g.basis(j));
  }
  Matrix<RationalFunction> coords = g.full_inverse() * k;
  return from_coordinates(g, coords);
}

LieVector vertical_connection(const LieAlgebra& lie, const Derivation& u,
                              const Derivation& v) {
  LieVector b = bracket(lie, u.pure_vertical(), v.pure_vertical());
  GaussianRational half(BigRational(1, 2));
  for (auto& c : b.comp) c.scale(half);
  return b;
}

Derivation curvature(const BlockMetric& g, const Derivation& u, const Derivation& v,
                     const Derivation& w) {
  Derivation uvw = nabla(g, u, nabla(g, v, w));
  Derivation vuw = nabla(g, v, nabla(g, u, w));
  Derivation bw = nabla(g, bracket(g.lie(), u, v), w);
  return uvw - vuw - bw;
}

LieVector vertical_curvature(const LieAlgebra& lie, const Derivation& u,
                             const Derivation& v, const Derivation& w) {
  LieVector inner = bracket(lie, u.pure_vertical(), v.pure_vertical());
  LieVector outer = bracket(lie, inner, w.pure_vertical());
  GaussianRational quarter(BigRational(-1, 4));
  for (auto& c : outer.comp) c.scale(quarter);
  return outer;
}

RationalFunction ricci(const BlockMetric& g, const Derivation& u, const Derivation& w) {
  RationalFunction acc = RationalFunction::zero(g.nvars());
  for (std::size_t j = 0; j < g.basis_count(); ++j) {
    Derivation r = curvature(g, u, g.basis(j), w);
    acc += coordinate_of(g, r, j);
  }
  return acc;
}

Matrix<RationalFunction> ricci_matrix(const BlockMetric& g) {
  std::size_t n = g.basis_count();
  Matrix<RationalFunction> out =
      Matrix<RationalFunction>::zeros(n, n, RationalFunction::zero(g.nvars()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.at(i, j) = ricci(g, g.basis(i), g.basis(j));
    }
  }
  return out;
}

RationalFunction scalar_curvature(const BlockMetric& g) {
  // Solve g(R(b_i), b_j) = ric(b_i, b_j): with R(b_i) = sum_k c_ki b_k the
  // coefficient matrix is C = G^{-1} Ric^T, whose trace is the scalar.
  Matrix<RationalFunction> ric = ricci_matrix(g);
  Matrix<RationalFunction> c = g.full_inverse() * ric.transpose();
  return c.trace();
}

std::vector<Matrix<RationalFunction>> christoffel(const BlockMetric& g) {
  std::size_t h = g.horizontal_count();
  if (h == 0) return {};
  const Matrix<RationalFunction>& gh = g.horizontal_block();
  auto inv = inverse(gh);
  if (!inv) throw DegenerateMetric("horizontal metric block is singular");
  std::vector<Matrix<RationalFunction>> out(
      h, Matrix<RationalFunction>::zeros(h, h, RationalFunction::zero(g.nvars())));
  GaussianRational half(BigRational(1, 2));
  for (std::size_t k = 0; k < h; ++k) {
    for (std::size_t i = 0; i < h; ++i) {
      for (std::size_t j = 0; j < h; ++j) {
        RationalFunction acc = RationalFunction::zero(g.nvars());
        for (std::size_t l = 0; l < h; ++l) {
          RationalFunction t = gh.at(j, l).derivative(i);
          t += gh.at(i, l).derivative(j);
          t -= gh.at(i, j).derivative(l);
          acc += inv->at(k, l) * t;
        }
        acc.scale(half);
        out[k].at(i, j) = acc;
      }
    }
  }
  return out;
}

Derivation torsion_defect(const BlockMetric& g, const Derivation& u, const Derivation& v) {
  return nabla(g, u, v) - nabla(g, v, u) - bracket(g.lie(), u, v);
}

RationalFunction compatibility_defect(const BlockMetric& g, const Derivation& u,
                                      const Derivation& v, const Derivation& w) {
  return u.apply(g.pair(v, w)) - g.pair(nabla(g, u, v), w) - g.pair(v, nabla(g, u, w));
}

}  // namespace ncgeom
