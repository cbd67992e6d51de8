#include "ncgeom/runner.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <utility>

#include "ncgeom/box_presheaf.hpp"
#include "ncgeom/derivation.hpp"
#include "ncgeom/errors.hpp"
#include "ncgeom/geometry.hpp"
#include "ncgeom/representation.hpp"

namespace ncgeom {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Deterministic random instances.  The twister is fully specified by the
// standard and the draws below avoid std::uniform_int_distribution on
// purpose: its output may differ between standard libraries, and reports for
// a fixed seed are promised byte-identical.

int rand_in(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

GaussianRational rand_scalar(std::mt19937_64& rng, bool allow_imag = true) {
  BigRational re(rand_in(rng, -4, 4), rand_in(rng, 1, 3));
  BigRational im(0);
  if (allow_imag && rand_in(rng, 0, 1) == 1) {
    im = BigRational(rand_in(rng, -3, 3), rand_in(rng, 1, 2));
  }
  return GaussianRational(std::move(re), std::move(im));
}

RationalFunction rand_poly(std::mt19937_64& rng, std::size_t nvars, int max_deg,
                           int max_terms) {
  RationalFunction out = RationalFunction::zero(nvars);
  int terms = rand_in(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    RationalFunction term = RationalFunction::constant(rand_scalar(rng), nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      int e = rand_in(rng, 0, max_deg);
      if (e > 0) term *= RationalFunction::variable(v, nvars).pow(static_cast<std::uint32_t>(e));
    }
    out += term;
  }
  return out;
}

MatrixField rand_field(std::mt19937_64& rng, std::size_t n, std::size_t nvars, int max_deg) {
  MatrixField f(n, nvars, Box::whole(nvars));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      f.entry(a, b) = rand_poly(rng, nvars, max_deg, 2);
    }
  }
  return f;
}

FinSuppKernel rand_kernel(std::mt19937_64& rng) {
  FinSuppKernel k;
  int entries = rand_in(rng, 1, 4);
  for (int t = 0; t < entries; ++t) {
    GaussianRational v = rand_scalar(rng);
    if (v.is_zero()) v = GaussianRational(1);
    k.set(rand_in(rng, -5, 5), rand_in(rng, -5, 5), v);
  }
  if (k.is_zero()) k.set(0, 0, GaussianRational(1));
  return k;
}

// ---------------------------------------------------------------------------
// Row assembly with per-row timing.

class RowBuilder {
 public:
  // fn decides a pass/fail row and supplies the value column.
  template <class Fn>
  void check(const std::string& task, const std::string& anchor, const std::string& tol,
             Fn&& fn) {
    auto t0 = Clock::now();
    std::pair<bool, std::string> r = fn();
    rows_.push_back(
        {task, anchor, r.first ? "pass" : "fail", r.second, tol, ms_since(t0)});
  }

  // fn computes something with nothing to compare against.
  template <class Fn>
  void value(const std::string& task, const std::string& anchor, const std::string& tol,
             Fn&& fn) {
    auto t0 = Clock::now();
    std::string v = fn();
    rows_.push_back({task, anchor, "value", v, tol, ms_since(t0)});
  }

  std::vector<ReportRow> take() { return std::move(rows_); }

 private:
  std::vector<ReportRow> rows_;
};

std::string float_string(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << v;
  return os.str();
}

// Single-line rendering of a small matrix field: rows separated by "; ".
std::string field_brief(const MatrixField& f) {
  std::string out = "[";
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (a > 0) out += "; ";
    for (std::size_t b = 0; b < f.size(); ++b) {
      if (b > 0) out += ", ";
      out += f.entry(a, b).to_string();
    }
  }
  out += "]";
  return out;
}

std::string glue_status_name(GlueStatus s) {
  switch (s) {
    case GlueStatus::glued:
      return "glued";
    case GlueStatus::incompatible:
      return "incompatible";
    case GlueStatus::no_candidate:
      return "no candidate";
    case GlueStatus::multiple_candidates:
      return "multiple candidates";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Built-in suites.  Each is a fixed battery over library operations with
// randomized instances drawn from the given seed.

Derivation vert_basis(std::size_t i, const LieAlgebra& lie, std::size_t nvars) {
  return Derivation::vertical(LieVector::basis(i, lie.dim(), nvars), nvars);
}

std::vector<ReportRow> suite_algebra(std::uint64_t seed) {
  RowBuilder b;
  std::mt19937_64 rng(seed);

  b.check("algebra/group-axioms",
          "Cayley table: latin square, two-sided identity, inverses, associativity",
          "exact", [] {
            FiniteGroup::cyclic(6);
            FiniteGroup::symmetric(3);
            return std::pair{true, std::string("C6 and S3 construct")};
          });

  b.check("algebra/convolution-associativity", "(f*g)*h = f*(g*h)", "exact", [&rng] {
    for (int t = 0; t < 40; ++t) {
      std::size_t n = static_cast<std::size_t>(rand_in(rng, 2, 3));
      std::size_t nvars = static_cast<std::size_t>(rand_in(rng, 1, 2));
      MatrixField f = rand_field(rng, n, nvars, 2);
      MatrixField g = rand_field(rng, n, nvars, 2);
      MatrixField h = rand_field(rng, n, nvars, 2);
      if (convolve(convolve(f, g), h) != convolve(f, convolve(g, h))) {
        return std::pair{false, "trial " + std::to_string(t)};
      }
    }
    return std::pair{true, std::string("40 random triples")};
  });

  b.check("algebra/convolution-bilinearity", "(f+g)*h = f*h + g*h, h*(f+g) = h*f + h*g",
          "exact", [&rng] {
            for (int t = 0; t < 20; ++t) {
              std::size_t n = static_cast<std::size_t>(rand_in(rng, 2, 3));
              MatrixField f = rand_field(rng, n, 1, 2);
              MatrixField g = rand_field(rng, n, 1, 2);
              MatrixField h = rand_field(rng, n, 1, 2);
              if (convolve(f + g, h) != convolve(f, h) + convolve(g, h) ||
                  convolve(h, f + g) != convolve(h, f) + convolve(h, g)) {
                return std::pair{false, "trial " + std::to_string(t)};
              }
            }
            return std::pair{true, std::string("20 random triples")};
          });

  b.check("algebra/star-antihomomorphism", "(f*g)^* = g^* * f^*, (f^*)^* = f", "exact",
          [&rng] {
            for (int t = 0; t < 20; ++t) {
              std::size_t n = static_cast<std::size_t>(rand_in(rng, 2, 3));
              MatrixField f = rand_field(rng, n, 1, 2);
              MatrixField g = rand_field(rng, n, 1, 2);
              if (convolve(f, g).star() != convolve(g.star(), f.star()) ||
                  f.star().star() != f) {
                return std::pair{false, "trial " + std::to_string(t)};
              }
            }
            return std::pair{true, std::string("20 random pairs")};
          });

  b.check("algebra/action-vs-pair",
          "j(p, g) = (p, p*g) carries twisted convolution to the plain product", "exact",
          [&rng] {
            FiniteGroup grp = FiniteGroup::cyclic(3);
            Box dom = Box::whole(1);
            for (int t = 0; t < 10; ++t) {
              ActionKernel a(&grp, 1, dom), c(&grp, 1, dom);
              for (std::size_t p = 0; p < 3; ++p) {
                for (std::size_t g = 0; g < 3; ++g) {
                  a.value(p, g) = rand_poly(rng, 1, 2, 2);
                  c.value(p, g) = rand_poly(rng, 1, 2, 2);
                }
              }
              MatrixField lhs = convolve_action(a, c).to_pair_field();
              MatrixField rhs = convolve(a.to_pair_field(), c.to_pair_field());
              if (lhs != rhs) return std::pair{false, "trial " + std::to_string(t)};
            }
            return std::pair{true, std::string("10 random pairs over C3")};
          });

  b.check("algebra/center", "Z(A) = { c * identity }", "exact", [] {
    for (std::size_t n = 2; n <= 3; ++n) {
      std::vector<MatrixField> basis = center_basis(n, 1, 2);
      if (basis.size() != 1) return std::pair{false, "n = " + std::to_string(n)};
      if (basis[0] != MatrixField::identity(n, 1, basis[0].domain())) {
        return std::pair{false, "n = " + std::to_string(n)};
      }
    }
    return std::pair{true, std::string("n = 2, 3")};
  });

  b.check("algebra/lie-validation",
          "antisymmetry + Jacobi hold; det(Killing) != 0 iff semisimple", "exact", [] {
            for (const LieAlgebra& lie :
                 {LieAlgebra::su2(), LieAlgebra::so3(), LieAlgebra::sl2()}) {
              lie.validate();
              if (!lie.is_semisimple()) return std::pair{false, std::string("semisimple")};
            }
            if (LieAlgebra::abelian(2).is_semisimple()) {
              return std::pair{false, std::string("abelian")};
            }
            return std::pair{true, std::string("su2, so3, sl2 pass; abelian(2) degenerate")};
          });

  b.check("algebra/killing-pins", "B_ij = tr(ad e_i ad e_j)", "exact", [] {
    Matrix<GaussianRational> k = LieAlgebra::su2().killing();
    GaussianRational minus_two(-2);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (k.at(i, j) != (i == j ? minus_two : GaussianRational(0))) {
          return std::pair{false, std::string("su2")};
        }
      }
    }
    Matrix<GaussianRational> ks = LieAlgebra::sl2().killing();
    if (ks.at(0, 0) != GaussianRational(8) || ks.at(1, 2) != GaussianRational(4) ||
        ks.at(2, 1) != GaussianRational(4)) {
      return std::pair{false, std::string("sl2")};
    }
    return std::pair{true, std::string("su2: -2*I; sl2: B(h,h)=8, B(e,f)=4")};
  });

  return b.take();
}

std::vector<ReportRow> suite_representation(std::uint64_t seed) {
  RowBuilder b;
  std::mt19937_64 rng(seed);
  Box unit = Box::bounded({{BigRational(0), BigRational(1)}});
  SampleGrid grid = SampleGrid::product(unit, {8});

  b.check("representation/homomorphism", "pi(f*h) = pi(f) pi(h)", "exact", [&] {
    for (int t = 0; t < 30; ++t) {
      MatrixField f = rand_field(rng, 2, 1, 2);
      MatrixField h = rand_field(rng, 2, 1, 2);
      if (represent(convolve(f, h), grid) != represent(f, grid) * represent(h, grid)) {
        return std::pair{false, "trial " + std::to_string(t)};
      }
    }
    return std::pair{true, std::string("30 random pairs, 8-point grid")};
  });

  b.check("representation/linearity-star", "pi(f+h) = pi(f)+pi(h), pi(f^*) = pi(f)^*",
          "exact", [&] {
            for (int t = 0; t < 15; ++t) {
              MatrixField f = rand_field(rng, 2, 1, 2);
              MatrixField h = rand_field(rng, 2, 1, 2);
              if (represent(f + h, grid) != represent(f, grid) + represent(h, grid)) {
                return std::pair{false, "trial " + std::to_string(t)};
              }
              RandomOperatorField starred = represent(f.star(), grid);
              RandomOperatorField direct = represent(f, grid);
              for (std::size_t k = 0; k < grid.size(); ++k) {
                if (starred.sample(k) != direct.sample(k).conj_transpose()) {
                  return std::pair{false, "trial " + std::to_string(t)};
                }
              }
            }
            return std::pair{true, std::string("15 random pairs")};
          });

  b.check("representation/ess-sup-pin", "||diag(x1, 0)||_ess over {k/8} = 7/8", "1e-12",
          [&unit] {
            MatrixField f(2, 1, Box::whole(1));
            f.entry(0, 0) = RationalFunction::variable(0, 1);
            double norm = ess_sup_norm(represent(f, SampleGrid::product(unit, {7})));
            return std::pair{std::abs(norm - 0.875) <= 1e-12, float_string(norm)};
          });

  b.check("representation/refinement-monotone",
          "finer grids never lower the essential supremum", "1e-12", [&unit] {
            MatrixField f(2, 1, Box::whole(1));
            f.entry(0, 0) = RationalFunction::variable(0, 1);
            double last = 0.0;
            for (std::size_t count : {3, 7, 15}) {
              double cur = ess_sup_norm(represent(f, SampleGrid::product(unit, {count})));
              if (cur + 1e-12 < last) return std::pair{false, std::string("decreased")};
              last = cur;
            }
            return std::pair{true, std::string("counts 3, 7, 15")};
          });

  b.check("representation/norm-algebra", "||ab|| <= ||a|| ||b||, ||a+b|| <= ||a|| + ||b||",
          "1e-9", [&] {
            for (int t = 0; t < 10; ++t) {
              RandomOperatorField ra = represent(rand_field(rng, 2, 1, 2), grid);
              RandomOperatorField rb = represent(rand_field(rng, 2, 1, 2), grid);
              double na = ess_sup_norm(ra), nb = ess_sup_norm(rb);
              if (ess_sup_norm(ra * rb) > na * nb + 1e-9 ||
                  ess_sup_norm(ra + rb) > na + nb + 1e-9) {
                return std::pair{false, "trial " + std::to_string(t)};
              }
            }
            return std::pair{true, std::string("10 random pairs")};
          });

  b.check("representation/intertwiner",
          "I((f x B)(psi x phi)) = J(f x B) I(psi x phi); <Iu, Iv> = <u, v>", "exact",
          [&] {
            for (int t = 0; t < 25; ++t) {
              RationalFunction f = rand_poly(rng, 1, 2, 2);
              Matrix<GaussianRational> B =
                  Matrix<GaussianRational>::zeros(2, 2, GaussianRational(0));
              for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) B.at(i, j) = rand_scalar(rng);
              }
              RationalFunction psi = rand_poly(rng, 1, 2, 2);
              RationalFunction psi2 = rand_poly(rng, 1, 2, 2);
              std::vector<GaussianRational> phi = {rand_scalar(rng), rand_scalar(rng)};
              std::vector<GaussianRational> phi2 = {rand_scalar(rng), rand_scalar(rng)};
              IntertwinerReport rep =
                  tensor_vs_field_intertwiner(f, B, grid, psi, phi, psi2, phi2);
              if (!rep.action_ok || !rep.inner_ok) {
                return std::pair{false, "trial " + std::to_string(t) + ": " + rep.detail};
              }
            }
            return std::pair{true, std::string("25 random instances")};
          });

  return b.take();
}

std::vector<ReportRow> suite_geometry(std::uint64_t seed) {
  RowBuilder b;
  std::mt19937_64 rng(seed);

  const std::vector<std::pair<std::string, LieAlgebra>> algebras = {
      {"su2", LieAlgebra::su2()}, {"sl2", LieAlgebra::sl2()}, {"so3", LieAlgebra::so3()}};

  for (const auto& [label, lie] : algebras) {
    BlockMetric g = BlockMetric::vertical_killing(&lie, 1);
    std::size_t d = lie.dim();

    b.check("geometry/" + label + "-koszul", "G(nabla_u v, w) = K(u, v, w)", "exact",
            [&] {
              for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                  for (std::size_t k = 0; k < d; ++k) {
                    Derivation u = vert_basis(i, lie, 1);
                    Derivation v = vert_basis(j, lie, 1);
                    Derivation w = vert_basis(k, lie, 1);
                    if (g.pair(nabla(g, u, v), w) != koszul(g, u, v, w)) {
                      return std::pair{false, std::string("triple mismatch")};
                    }
                  }
                }
              }
              return std::pair{true, std::to_string(d * d * d) + " basis triples"};
            });

    b.check("geometry/" + label + "-curvature", "R(u, v) w = -(1/4) [[u, v], w]", "exact",
            [&] {
              for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                  for (std::size_t k = 0; k < d; ++k) {
                    Derivation u = vert_basis(i, lie, 1);
                    Derivation v = vert_basis(j, lie, 1);
                    Derivation w = vert_basis(k, lie, 1);
                    Derivation got = curvature(g, u, v, w);
                    if (!got.horizontal_part_zero() ||
                        got.v() != vertical_curvature(lie, u, v, w)) {
                      return std::pair{false, std::string("triple mismatch")};
                    }
                  }
                }
              }
              return std::pair{true, std::to_string(d * d * d) + " basis triples"};
            });

    b.check("geometry/" + label + "-ricci", "ric(u, w) = (1/4) B(u, w)", "exact", [&] {
      Matrix<GaussianRational> killing = lie.killing();
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          GaussianRational quarter = killing.at(i, j);
          quarter *= GaussianRational(BigRational(1, 4));
          if (ricci(g, vert_basis(i, lie, 1), vert_basis(j, lie, 1)) !=
              RationalFunction::constant(quarter, 1)) {
            return std::pair{false, std::string("pair mismatch")};
          }
        }
      }
      return std::pair{true, std::to_string(d * d) + " basis pairs"};
    });

    b.check("geometry/" + label + "-scalar", "r = tr(Ricci adjoint) = dim/4", "exact",
            [&] {
              RationalFunction r = scalar_curvature(g);
              RationalFunction want = RationalFunction::constant(
                  GaussianRational(BigRational(static_cast<long long>(d), 4)), 1);
              return std::pair{r == want, "r = " + r.to_string()};
            });
  }

  // Horizontal sector over two base variables.
  RationalFunction zero2 = RationalFunction::zero(2);
  RationalFunction one2 = RationalFunction::one(2);
  RationalFunction x1 = RationalFunction::variable(0, 2);
  RationalFunction x2 = RationalFunction::variable(1, 2);
  Matrix<RationalFunction> flat_m = Matrix<RationalFunction>::identity(2, zero2);
  Matrix<RationalFunction> curved_m = flat_m;
  curved_m.at(1, 1) = x1 * x1;
  Matrix<RationalFunction> hyp_m = Matrix<RationalFunction>::zeros(2, 2, zero2);
  hyp_m.at(0, 0) = one2 / (x2 * x2);
  hyp_m.at(1, 1) = one2 / (x2 * x2);
  std::vector<std::pair<std::string, BlockMetric>> metrics;
  metrics.emplace_back("flat", BlockMetric(flat_m, 2));
  metrics.emplace_back("diag(1, x1^2)", BlockMetric(curved_m, 2));
  metrics.emplace_back("hyperbolic", BlockMetric(hyp_m, 2));

  b.check("geometry/horizontal-koszul", "G(nabla_u v, w) = K(u, v, w)", "exact", [&] {
    for (const auto& [label, g] : metrics) {
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          for (std::size_t k = 0; k < 2; ++k) {
            Derivation u = g.basis(i), v = g.basis(j), w = g.basis(k);
            if (g.pair(nabla(g, u, v), w) != koszul(g, u, v, w)) {
              return std::pair{false, label};
            }
          }
        }
      }
    }
    return std::pair{true, std::string("flat, diag(1, x1^2), hyperbolic")};
  });

  b.check("geometry/levi-civita", "torsion defect and metric-compatibility defect vanish",
          "exact", [&] {
            for (const auto& [label, g] : metrics) {
              for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                  if (!torsion_defect(g, g.basis(i), g.basis(j)).is_zero()) {
                    return std::pair{false, label};
                  }
                  for (std::size_t k = 0; k < 2; ++k) {
                    if (!compatibility_defect(g, g.basis(i), g.basis(j), g.basis(k))
                             .is_zero()) {
                      return std::pair{false, label};
                    }
                  }
                }
              }
            }
            return std::pair{true, std::string("3 metrics, all coordinate fields")};
          });

  b.check("geometry/flat-curvature", "flat metric: R(u, v) w = 0", "exact", [&] {
    const BlockMetric& g = metrics[0].second;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t k = 0; k < 2; ++k) {
          if (!curvature(g, g.basis(i), g.basis(j), g.basis(k)).is_zero()) {
            return std::pair{false, std::string("nonzero")};
          }
        }
      }
    }
    return std::pair{true, std::string("8 coordinate triples")};
  });

  b.check("geometry/hyperbolic-scalar", "r = tr(Ricci adjoint)", "exact", [&] {
    RationalFunction r = scalar_curvature(metrics[2].second);
    return std::pair{r == RationalFunction::constant(GaussianRational(2), 2),
                     "r = " + r.to_string()};
  });

  b.check("geometry/inner-curvature",
          "nabla_a b = (1/2)[a, b]; R(a, b) c = -(1/4) [[a, b], c]", "exact", [&rng] {
            GaussianRational minus_quarter(BigRational(-1, 4));
            GaussianRational half(BigRational(1, 2));
            for (int t = 0; t < 20; ++t) {
              std::size_t n = static_cast<std::size_t>(rand_in(rng, 2, 3));
              MatrixField a = rand_field(rng, n, 1, 2);
              MatrixField c = rand_field(rng, n, 1, 2);
              MatrixField w = rand_field(rng, n, 1, 2);
              MatrixField closed = commutator(commutator(a, c), w);
              closed.scale(minus_quarter);
              if (inner_curvature(a, c, w) != closed) {
                return std::pair{false, "trial " + std::to_string(t)};
              }
              MatrixField half_br = commutator(a, c);
              half_br.scale(half);
              if (inner_connection(a, c) != half_br) {
                return std::pair{false, "trial " + std::to_string(t)};
              }
            }
            return std::pair{true, std::string("20 random triples")};
          });

  return b.take();
}

std::vector<ReportRow> suite_sheaf(std::uint64_t seed) {
  RowBuilder b;
  std::mt19937_64 rng(seed);

  b.check("sheaf/function-presheaf", "pointwise functions glue uniquely on every cover",
          "exact", [] {
            std::size_t count = 0;
            for (std::size_t n = 1; n <= 3; ++n) {
              for (const FiniteTopology& t : all_topologies(n)) {
                TabulatedPresheaf p = function_presheaf(t);
                if (p.verify() || p.check_sheaf_axiom()) {
                  return std::pair{false, "n = " + std::to_string(n)};
                }
                ++count;
              }
            }
            return std::pair{true, std::to_string(count) + " topologies"};
          });

  b.check("sheaf/constant-witness",
          "the constant presheaf refuses covers by disjoint opens", "exact", [] {
            FiniteTopology two = FiniteTopology::discrete(2);
            Matrix<GaussianRational> s1(1, 1, GaussianRational(1));
            Matrix<GaussianRational> s2(1, 1, GaussianRational(2));
            TabulatedPresheaf zoe =
                constant_presheaf(two, SectionAlgebra::scalars(), true);
            if (zoe.glue({0b01, 0b10}, {s1, s2}).status != GlueStatus::no_candidate) {
              return std::pair{false, std::string("zero-on-empty variant")};
            }
            TabulatedPresheaf lit = constant_presheaf(two, SectionAlgebra::scalars());
            if (lit.glue({0b01, 0b10}, {s1, s2}).status != GlueStatus::incompatible) {
              return std::pair{false, std::string("literal variant")};
            }
            if (!zoe.check_sheaf_axiom() || !lit.check_sheaf_axiom()) {
              return std::pair{false, std::string("axiom unexpectedly holds")};
            }
            return std::pair{true, std::string("no candidate / incompatible, axiom fails")};
          });

  b.check("sheaf/sheafification",
          "coherent stalk families form a sheaf; the construction is idempotent",
          "exact", [] {
            FiniteTopology two = FiniteTopology::discrete(2);
            TabulatedPresheaf lit = constant_presheaf(two, SectionAlgebra::scalars());
            SheafifyResult s = sheafify(lit);
            if (s.sheaf.verify() || s.sheaf.check_sheaf_axiom()) {
              return std::pair{false, std::string("output is not a sheaf")};
            }
            if (s.sheaf.dim(two.full_mask()) != 2) {
              return std::pair{false, std::string("global sections")};
            }
            SheafifyResult again = sheafify(s.sheaf);
            for (std::size_t k = 0; k < again.canonical.size(); ++k) {
              const Matrix<GaussianRational>& m = again.canonical[k];
              if (m.rows() != m.cols() || rank(m) != m.rows()) {
                return std::pair{false, std::string("not idempotent")};
              }
            }
            return std::pair{true, std::string("F~(X) of the 2-point constant presheaf has dim 2")};
          });

  b.check("sheaf/stalks", "the stalk at p is the sections over the smallest open around p",
          "exact", [&rng] {
            FiniteTopology sier(2, {0b00, 0b01, 0b11});
            TabulatedPresheaf p = function_presheaf(sier);
            if (p.stalk(0).algebra.dim != 1 || p.stalk(1).algebra.dim != 2) {
              return std::pair{false, std::string("dims")};
            }
            // The two germ readings agree on random sections.
            for (const FiniteTopology& t : all_topologies(2)) {
              TabulatedPresheaf q = function_presheaf(t);
              std::uint32_t full = t.full_mask();
              for (int trial = 0; trial < 5; ++trial) {
                Matrix<GaussianRational> f =
                    Matrix<GaussianRational>::zeros(q.dim(full), 1, GaussianRational(0));
                Matrix<GaussianRational> g = f;
                for (std::size_t r = 0; r < f.rows(); ++r) {
                  f.at(r, 0) = rand_scalar(rng);
                  g.at(r, 0) = rand_in(rng, 0, 1) == 0 ? f.at(r, 0) : rand_scalar(rng);
                }
                for (std::size_t pt = 0; pt < 2; ++pt) {
                  bool literal = q.germs_equal(full, f, full, g, pt);
                  bool via_stalk = q.germ(full, f, pt) == q.germ(full, g, pt);
                  if (literal != via_stalk) return std::pair{false, std::string("germ")};
                }
              }
            }
            return std::pair{true, std::string("4 two-point topologies, random sections")};
          });

  b.check("sheaf/box-glue",
          "sections agreeing on open overlaps glue over a connected box", "exact", [] {
            BoxPresheaf bp(1, 1, Box::bounded({{BigRational(0), BigRational(3)}}));
            Box left = Box::bounded({{BigRational(0), BigRational(2)}});
            Box right = Box::bounded({{BigRational(1), BigRational(3)}});
            RationalFunction sq = RationalFunction::variable(0, 1).pow(2);
            MatrixField fl(1, 1, left), fr(1, 1, right);
            fl.entry(0, 0) = sq;
            fr.entry(0, 0) = sq;
            BoxGlueResult glued = bp.glue(bp.domain(), {left, right}, {fl, fr});
            if (glued.status != GlueStatus::glued || !glued.section ||
                glued.section->entry(0, 0) != sq) {
              return std::pair{false, std::string("equal sections")};
            }
            MatrixField gl(1, 1, left), gr(1, 1, right);
            gl.entry(0, 0) = RationalFunction::variable(0, 1);
            gr.entry(0, 0) = RationalFunction::variable(0, 1) + RationalFunction::one(1);
            BoxGlueResult clash = bp.glue(bp.domain(), {left, right}, {gl, gr});
            if (clash.status != GlueStatus::incompatible) {
              return std::pair{false, std::string("x1 vs x1+1")};
            }
            return std::pair{true, std::string("x1^2 glues; x1 vs x1+1 clashes")};
          });

  return b.take();
}

std::vector<ReportRow> suite_appendix_b(std::uint64_t seed) {
  RowBuilder b;
  std::mt19937_64 rng(seed);

  b.check("appendixB/witness", "a*b = 0 while b*a != 0", "exact", [&rng] {
    for (int t = 0; t < 100; ++t) {
      FinSuppKernel a = rand_kernel(rng);
      std::int64_t y0 = a.right_support().empty() ? 0 : *a.right_support().begin();
      FinSuppKernel w = center_witness(a, y0);
      if (!convolve(a, w).is_zero() || convolve(w, a).is_zero()) {
        return std::pair{false, "trial " + std::to_string(t)};
      }
    }
    return std::pair{true, std::string("100 random sparse kernels")};
  });

  b.check("appendixB/commutant",
          "only multiples of the window identity commute; widening the generators kills them",
          "exact", [] {
            Window support{0, 2};
            std::vector<FinSuppKernel> same = kernel_commutant_basis(support, support);
            if (same.size() != 1) return std::pair{false, std::string("equal windows")};
            for (const auto& [arrow, v] : same[0].support()) {
              if (arrow.first != arrow.second || v != same[0].at(0, 0)) {
                return std::pair{false, std::string("not the identity")};
              }
            }
            std::vector<FinSuppKernel> wider =
                kernel_commutant_basis(support, Window{-1, 3});
            if (!wider.empty()) return std::pair{false, std::string("wider window")};
            return std::pair{true, std::string("dim 1 on [0,2]x[0,2], dim 0 under [-1,3]")};
          });

  b.check("appendixB/star-convolution", "(a*b)^* = b^* * a^*", "exact", [&rng] {
    for (int t = 0; t < 30; ++t) {
      FinSuppKernel a = rand_kernel(rng);
      FinSuppKernel c = rand_kernel(rng);
      if (convolve(a, c).star() != convolve(c.star(), a.star())) {
        return std::pair{false, "trial " + std::to_string(t)};
      }
    }
    return std::pair{true, std::string("30 random pairs")};
  });

  return b.take();
}

std::vector<ReportRow> suite_rows(const std::string& name, std::uint64_t seed) {
  if (name == "algebra") return suite_algebra(seed);
  if (name == "representation") return suite_representation(seed);
  if (name == "geometry") return suite_geometry(seed);
  if (name == "sheaf") return suite_sheaf(seed);
  if (name == "appendixB") return suite_appendix_b(seed);
  throw UnknownSuite(name + " (known: algebra, representation, geometry, sheaf, appendixB)");
}

// ---------------------------------------------------------------------------
// Scenario tasks.

[[noreturn]] void task_fail(const Task& t, const std::string& msg) {
  throw TaskError("task '" + t.text + "' (line " + std::to_string(t.line) + "): " + msg);
}

void need_args(const Task& t, std::size_t n) {
  if (t.args.size() != n) {
    task_fail(t, "expected " + std::to_string(n) + " argument(s), got " +
                     std::to_string(t.args.size()));
  }
}

template <class M>
const typename M::mapped_type& find_named(const M& m, const Task& t,
                                          const std::string& name,
                                          const std::string& kind) {
  auto it = m.find(name);
  if (it == m.end()) task_fail(t, "'" + name + "' is not a declared " + kind);
  return it->second;
}

std::int64_t task_int(const Task& t, const std::string& arg) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(arg, &used);
    if (used != arg.size()) throw std::invalid_argument(arg);
    return v;
  } catch (const std::exception&) {
    task_fail(t, "'" + arg + "' is not an integer");
  }
}

std::vector<ReportRow> run_task(const Scenario& sc, const Task& t, std::uint64_t seed) {
  RowBuilder b;

  if (t.name == "suite") {
    need_args(t, 1);
    return suite_rows(t.args[0], seed);
  }

  if (t.name == "convolve") {
    need_args(t, 2);
    const MatrixField& f = find_named(sc.fields, t, t.args[0], "field");
    const MatrixField& h = find_named(sc.fields, t, t.args[1], "field");
    b.value(t.text, "(f*h)(a, b) = sum_z f(a, z) h(z, b)", "exact",
            [&] { return field_brief(convolve(f, h)); });
  } else if (t.name == "associativity") {
    need_args(t, 3);
    const MatrixField& f = find_named(sc.fields, t, t.args[0], "field");
    const MatrixField& g = find_named(sc.fields, t, t.args[1], "field");
    const MatrixField& h = find_named(sc.fields, t, t.args[2], "field");
    b.check(t.text, "(f*g)*h = f*(g*h)", "exact", [&] {
      bool ok = convolve(convolve(f, g), h) == convolve(f, convolve(g, h));
      return std::pair{ok, std::string(ok ? "equal" : "differ")};
    });
  } else if (t.name == "star_check") {
    need_args(t, 2);
    const MatrixField& f = find_named(sc.fields, t, t.args[0], "field");
    const MatrixField& g = find_named(sc.fields, t, t.args[1], "field");
    b.check(t.text, "(f*g)^* = g^* * f^*", "exact", [&] {
      bool ok = convolve(f, g).star() == convolve(g.star(), f.star());
      return std::pair{ok, std::string(ok ? "equal" : "differ")};
    });
  } else if (t.name == "represent_check") {
    need_args(t, 3);
    const MatrixField& f = find_named(sc.fields, t, t.args[0], "field");
    const MatrixField& h = find_named(sc.fields, t, t.args[1], "field");
    const SampleGrid& grid = find_named(sc.grids, t, t.args[2], "grid");
    b.check(t.text, "pi(f*h) = pi(f) pi(h)", "exact", [&] {
      bool ok = represent(convolve(f, h), grid) == represent(f, grid) * represent(h, grid);
      return std::pair{ok, std::string(ok ? "equal" : "differ")};
    });
  } else if (t.name == "ess_sup") {
    need_args(t, 2);
    const MatrixField& f = find_named(sc.fields, t, t.args[0], "field");
    const SampleGrid& grid = find_named(sc.grids, t, t.args[1], "grid");
    b.value(t.text, "||f||_ess = max over grid points of the operator norm", "1e-12",
            [&] { return float_string(ess_sup_norm(represent(f, grid))); });
  } else if (t.name == "center_basis") {
    need_args(t, 2);
    auto n = static_cast<std::size_t>(task_int(t, t.args[0]));
    auto deg = static_cast<std::uint32_t>(task_int(t, t.args[1]));
    b.check(t.text, "Z(A) = { c * identity }", "exact", [&] {
      std::vector<MatrixField> basis = center_basis(n, sc.base_dim, deg);
      bool ok = basis.size() == 1 &&
                basis[0] == MatrixField::identity(n, sc.base_dim, basis[0].domain());
      return std::pair{ok, "dim " + std::to_string(basis.size())};
    });
  } else if (t.name == "center_witness") {
    need_args(t, 2);
    const FinSuppKernel& a = find_named(sc.kernels, t, t.args[0], "kernel");
    std::int64_t y0 = task_int(t, t.args[1]);
    b.check(t.text, "a*b = 0 while b*a != 0", "exact", [&] {
      FinSuppKernel w = center_witness(a, y0);
      bool ok = convolve(a, w).is_zero() && !convolve(w, a).is_zero();
      return std::pair{ok, "witness support " + std::to_string(w.support_size())};
    });
  } else if (t.name == "commutant_dim") {
    need_args(t, 4);
    Window support{task_int(t, t.args[0]), task_int(t, t.args[1])};
    Window gen{task_int(t, t.args[2]), task_int(t, t.args[3])};
    b.value(t.text, "kernels commuting with every generator arrow", "exact", [&] {
      return "dim " + std::to_string(kernel_commutant_basis(support, gen).size());
    });
  } else if (t.name == "koszul_check") {
    need_args(t, 1);
    const BlockMetric& g = find_named(sc.metrics, t, t.args[0], "metric");
    b.check(t.text, "G(nabla_u v, w) = K(u, v, w)", "exact", [&] {
      std::size_t d = g.basis_count();
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t k = 0; k < d; ++k) {
            if (g.pair(nabla(g, g.basis(i), g.basis(j)), g.basis(k)) !=
                koszul(g, g.basis(i), g.basis(j), g.basis(k))) {
              return std::pair{false, std::string("triple mismatch")};
            }
          }
        }
      }
      return std::pair{true, std::to_string(d * d * d) + " basis triples"};
    });
  } else if (t.name == "curvature_check") {
    need_args(t, 1);
    const BlockMetric& g = find_named(sc.metrics, t, t.args[0], "metric");
    b.check(t.text, "R(u, v) w = -(1/4) [[u, v], w]", "exact", [&] {
      if (g.lie() == nullptr) return std::pair{false, std::string("metric has no Lie sector")};
      const LieAlgebra& lie = *g.lie();
      std::size_t h = g.horizontal_count();
      for (std::size_t i = 0; i < lie.dim(); ++i) {
        for (std::size_t j = 0; j < lie.dim(); ++j) {
          for (std::size_t k = 0; k < lie.dim(); ++k) {
            Derivation u = g.basis(h + i), v = g.basis(h + j), w = g.basis(h + k);
            Derivation got = curvature(g, u, v, w);
            if (!got.horizontal_part_zero() ||
                got.v() != vertical_curvature(lie, u, v, w)) {
              return std::pair{false, std::string("triple mismatch")};
            }
          }
        }
      }
      std::size_t n = lie.dim() * lie.dim() * lie.dim();
      return std::pair{true, std::to_string(n) + " vertical triples"};
    });
  } else if (t.name == "ricci_table") {
    need_args(t, 1);
    const BlockMetric& g = find_named(sc.metrics, t, t.args[0], "metric");
    std::size_t d = g.basis_count();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        b.value(t.text, "ric(u, w) = tr(v -> R(u, v) w)", "exact", [&, i, j] {
          RationalFunction r = ricci(g, g.basis(i), g.basis(j));
          return "ric(e" + std::to_string(i) + ", e" + std::to_string(j) +
                 ") = " + r.to_string();
        });
      }
    }
  } else if (t.name == "scalar_curvature") {
    need_args(t, 1);
    const BlockMetric& g = find_named(sc.metrics, t, t.args[0], "metric");
    b.value(t.text, "r = tr(Ricci adjoint)", "exact",
            [&] { return "r = " + scalar_curvature(g).to_string(); });
  } else if (t.name == "levi_civita") {
    need_args(t, 1);
    const BlockMetric& g = find_named(sc.metrics, t, t.args[0], "metric");
    b.check(t.text, "torsion defect and metric-compatibility defect vanish", "exact", [&] {
      std::size_t d = g.basis_count();
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          if (!torsion_defect(g, g.basis(i), g.basis(j)).is_zero()) {
            return std::pair{false, std::string("torsion")};
          }
          for (std::size_t k = 0; k < d; ++k) {
            if (!compatibility_defect(g, g.basis(i), g.basis(j), g.basis(k)).is_zero()) {
              return std::pair{false, std::string("compatibility")};
            }
          }
        }
      }
      return std::pair{true, std::to_string(d) + " basis directions"};
    });
  } else if (t.name == "sheaf_check") {
    need_args(t, 2);
    const TabulatedPresheaf& p = find_named(sc.presheaves, t, t.args[0], "presheaf");
    bool expect_sheaf = t.args[1] == "sheaf";
    if (!expect_sheaf && t.args[1] != "notsheaf") {
      task_fail(t, "second argument must be 'sheaf' or 'notsheaf'");
    }
    b.check(t.text, "every compatible family glues to exactly one section", "exact", [&] {
      std::optional<SheafFailure> failure = p.check_sheaf_axiom();
      std::string got = !failure
                            ? std::string("sheaf")
                            : "fails at " + open_to_string(failure->open,
                                                           p.topology().npoints()) +
                                  " (" + glue_status_name(failure->kind) + ")";
      return std::pair{expect_sheaf == !failure, got};
    });
  } else if (t.name == "stalk_dims") {
    need_args(t, 1);
    const TabulatedPresheaf& p = find_named(sc.presheaves, t, t.args[0], "presheaf");
    b.value(t.text, "stalk at p = sections over the smallest open around p", "exact", [&] {
      std::string out;
      for (std::size_t pt = 0; pt < p.topology().npoints(); ++pt) {
        if (pt > 0) out += ' ';
        out += std::to_string(pt) + ":" + std::to_string(p.stalk(pt).algebra.dim);
      }
      return out;
    });
  } else if (t.name == "sheafify_check") {
    need_args(t, 1);
    const TabulatedPresheaf& p = find_named(sc.presheaves, t, t.args[0], "presheaf");
    b.check(t.text, "coherent stalk families form a sheaf; theta is iso iff input is one",
            "exact", [&] {
              SheafifyResult s = sheafify(p);
              if (s.sheaf.verify() || s.sheaf.check_sheaf_axiom()) {
                return std::pair{false, std::string("output not a sheaf")};
              }
              bool input_sheaf = !p.check_sheaf_axiom();
              bool all_iso = true;
              for (const Matrix<GaussianRational>& m : s.canonical) {
                if (m.rows() != m.cols() || rank(m) != m.rows()) all_iso = false;
              }
              if (all_iso != input_sheaf) {
                return std::pair{false, std::string("canonical maps")};
              }
              SheafifyResult again = sheafify(s.sheaf);
              for (const Matrix<GaussianRational>& m : again.canonical) {
                if (m.rows() != m.cols() || rank(m) != m.rows()) {
                  return std::pair{false, std::string("not idempotent")};
                }
              }
              std::size_t gdim = s.sheaf.dim(p.topology().full_mask());
              return std::pair{true, "global sections dim " + std::to_string(gdim)};
            });
  } else if (t.name == "box_cover_check") {
    need_args(t, 1);
    const BoxCover& c = find_named(sc.covers, t, t.args[0], "cover");
    b.check(t.text, "the parts jointly cover the target box", "exact", [&] {
      auto gap = box_cover_gap(c.target, c.boxes);
      if (!gap) return std::pair{true, std::string("covered")};
      std::string point = "(";
      for (std::size_t k = 0; k < gap->size(); ++k) {
        if (k > 0) point += ", ";
        point += to_string((*gap)[k]);
      }
      return std::pair{false, "gap near " + point + ")"};
    });
  } else if (t.name == "box_glue") {
    const BoxCover& c = find_named(sc.covers, t, t.args.empty() ? "" : t.args[0], "cover");
    if (t.args.size() != 1 + c.boxes.size()) {
      task_fail(t, "expected one field per cover box (" + std::to_string(c.boxes.size()) +
                       " boxes)");
    }
    std::vector<MatrixField> sections;
    for (std::size_t k = 1; k < t.args.size(); ++k) {
      sections.push_back(find_named(sc.fields, t, t.args[k], "field"));
    }
    b.value(t.text, "sections agreeing on open overlaps glue over a connected box",
            "exact", [&] {
              BoxPresheaf bp(sections.at(0).size(), sc.base_dim, c.target);
              BoxGlueResult r = bp.glue(c.target, c.boxes, sections);
              if (r.status == GlueStatus::glued) {
                return "glued: " + field_brief(*r.section);
              }
              return glue_status_name(r.status) + " (boxes " + std::to_string(r.clash_i) +
                     ", " + std::to_string(r.clash_j) + ")";
            });
  } else if (t.name == "intertwiner_check") {
    need_args(t, 2);
    const SampleGrid& grid = find_named(sc.grids, t, t.args[0], "grid");
    auto count = static_cast<int>(task_int(t, t.args[1]));
    b.check(t.text, "I((f x B)(psi x phi)) = J(f x B) I(psi x phi); <Iu, Iv> = <u, v>",
            "exact", [&] {
              std::mt19937_64 rng(seed);
              for (int trial = 0; trial < count; ++trial) {
                RationalFunction f = rand_poly(rng, sc.base_dim, 2, 2);
                Matrix<GaussianRational> B =
                    Matrix<GaussianRational>::zeros(2, 2, GaussianRational(0));
                for (std::size_t i = 0; i < 2; ++i) {
                  for (std::size_t j = 0; j < 2; ++j) B.at(i, j) = rand_scalar(rng);
                }
                RationalFunction psi = rand_poly(rng, sc.base_dim, 2, 2);
                RationalFunction psi2 = rand_poly(rng, sc.base_dim, 2, 2);
                std::vector<GaussianRational> phi = {rand_scalar(rng), rand_scalar(rng)};
                std::vector<GaussianRational> phi2 = {rand_scalar(rng), rand_scalar(rng)};
                IntertwinerReport rep =
                    tensor_vs_field_intertwiner(f, B, grid, psi, phi, psi2, phi2);
                if (!rep.action_ok || !rep.inner_ok) {
                  return std::pair{false, "trial " + std::to_string(trial)};
                }
              }
              return std::pair{true, std::to_string(count) + " random instances"};
            });
  } else {
    task_fail(t, "unknown task");
  }

  return b.take();
}

std::vector<ReportRow> run_task_guarded(const Scenario& sc, const Task& t,
                                        std::uint64_t seed) {
  try {
    return run_task(sc, t, seed);
  } catch (const TaskError&) {
    throw;
  } catch (const Error& e) {
    throw TaskError("task '" + t.text + "' (line " + std::to_string(t.line) +
                    "): " + e.what());
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::size_t index) {
  return seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(index + 1);
}

}  // namespace

Report run_scenario(const Scenario& sc, const RunOptions& opts) {
  auto t0 = Clock::now();
  Report report;
  if (opts.parallel) {
    std::vector<std::future<std::vector<ReportRow>>> futures;
    futures.reserve(sc.tasks.size());
    for (std::size_t k = 0; k < sc.tasks.size(); ++k) {
      futures.push_back(std::async(std::launch::async, [&sc, &opts, k] {
        return run_task_guarded(sc, sc.tasks[k], mix_seed(opts.seed, k));
      }));
    }
    // Rows keep scenario order no matter which future lands first.
    for (auto& f : futures) {
      std::vector<ReportRow> rows = f.get();
      report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    }
  } else {
    for (std::size_t k = 0; k < sc.tasks.size(); ++k) {
      std::vector<ReportRow> rows =
          run_task_guarded(sc, sc.tasks[k], mix_seed(opts.seed, k));
      report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    }
  }
  report.wall_ms = ms_since(t0);
  return report;
}

Report run_scenario_file(const std::string& path, const RunOptions& opts) {
  Scenario sc = load_scenario(path);
  return run_scenario(sc, opts);
}

Report run_suite(const std::string& name, const RunOptions& opts) {
  auto t0 = Clock::now();
  Report report;
  report.rows = suite_rows(name, opts.seed);
  report.wall_ms = ms_since(t0);
  return report;
}

}  // namespace ncgeom
