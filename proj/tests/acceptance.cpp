// Acceptance gate: eleven end-to-end checks, one line of output apiece, each
// with a pinned tolerance and a wall-clock budget.  The process exits
// nonzero if any line fails, so this binary is the single go/no-go signal.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ncgeom/box_presheaf.hpp"
#include "ncgeom/geometry.hpp"
#include "ncgeom/representation.hpp"
#include "support/classical_geometry.hpp"
#include "support/oracles.hpp"
#include "support/random_gen.hpp"

using namespace ncgeom;
namespace gen = ncgeom::testgen;

namespace {

// ---------------------------------------------------------------------------
// Shared builders.

MatrixField random_poly_field_on(std::mt19937_64& rng, std::size_t n, std::size_t nvars,
                                 std::uint32_t max_deg, Box domain) {
  MatrixField f(n, nvars, std::move(domain));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      f.entry(a, b) = RationalFunction(gen::polynomial(rng, nvars, max_deg, 3));
    }
  }
  return f;
}

MatrixField random_poly_field(std::mt19937_64& rng, std::size_t n, std::size_t nvars,
                              std::uint32_t max_deg) {
  return random_poly_field_on(rng, n, nvars, max_deg, Box::whole(nvars));
}

FinSuppKernel random_kernel(std::mt19937_64& rng) {
  FinSuppKernel k;
  std::int64_t entries = gen::small_int(rng, 1, 4);
  for (std::int64_t t = 0; t < entries; ++t) {
    k.set(gen::small_int(rng, -5, 5), gen::small_int(rng, -5, 5),
          gen::nonzero_gaussian(rng));
  }
  if (k.is_zero()) k.set(0, 0, GaussianRational(1));
  return k;
}

Derivation vert(std::size_t i, const LieAlgebra& lie) {
  return Derivation::vertical(LieVector::basis(i, lie.dim(), 1), 1);
}

Matrix<RationalFunction> hyperbolic_metric() {
  RationalFunction zero = RationalFunction::zero(2);
  RationalFunction one = RationalFunction::one(2);
  RationalFunction x2 = RationalFunction::variable(1, 2);
  Matrix<RationalFunction> m = Matrix<RationalFunction>::zeros(2, 2, zero);
  m.at(0, 0) = one / (x2 * x2);
  m.at(1, 1) = m.at(0, 0);
  return m;
}

Matrix<RationalFunction> polar_metric() {
  RationalFunction zero = RationalFunction::zero(2);
  RationalFunction x1 = RationalFunction::variable(0, 2);
  Matrix<RationalFunction> m = Matrix<RationalFunction>::identity(2, zero);
  m.at(1, 1) = x1 * x1;
  return m;
}

std::vector<std::pair<std::string, Matrix<RationalFunction>>> horizontal_metrics() {
  return {{"flat", Matrix<RationalFunction>::identity(2, RationalFunction::zero(2))},
          {"polar", polar_metric()},
          {"hyperbolic", hyperbolic_metric()}};
}

// Vertical-sector curvature straight from the defining formula with
// nabla = half the bracket, independent of the metric machinery.
LieVector defining_curvature(const LieAlgebra& lie, const LieVector& u,
                             const LieVector& v, const LieVector& w) {
  GaussianRational half(BigRational(1, 2));
  auto nab = [&](const LieVector& a, const LieVector& b) {
    LieVector r = bracket(lie, a, b);
    for (auto& c : r.comp) c.scale(half);
    return r;
  };
  return nab(u, nab(v, w)) - nab(v, nab(u, w)) - nab(bracket(lie, u, v), w);
}

bool invertible(const Matrix<GaussianRational>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

// ---------------------------------------------------------------------------
// The eleven criteria.  Each returns true on success and may leave a short
// note describing what broke.

bool convolution_correctness(std::string& note) {
  std::mt19937_64 rng(101);
  // Pointwise matrix product against the arrow-sum oracle.
  for (int t = 0; t < 60; ++t) {
    auto n = static_cast<std::size_t>(gen::small_int(rng, 2, 4));
    MatrixField a = random_poly_field(rng, n, 1, 3);
    MatrixField b = random_poly_field(rng, n, 1, 3);
    if (convolve(a, b) != oracle::convolve_by_arrows(a, b)) {
      note = "oracle mismatch";
      return false;
    }
  }
  // Twisted product over a finite group agrees through the groupoid map.
  for (const FiniteGroup& grp : {FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
    for (int t = 0; t < 10; ++t) {
      ActionKernel a(&grp, 1, Box::whole(1)), b(&grp, 1, Box::whole(1));
      for (std::size_t p = 0; p < grp.order(); ++p) {
        for (std::size_t g = 0; g < grp.order(); ++g) {
          a.value(p, g) = RationalFunction(gen::polynomial(rng, 1, 2, 2));
          b.value(p, g) = RationalFunction(gen::polynomial(rng, 1, 2, 2));
        }
      }
      if (convolve_action(a, b).to_pair_field() !=
          convolve(a.to_pair_field(), b.to_pair_field())) {
        note = "action vs pair mismatch";
        return false;
      }
    }
  }
  // Associativity on 100 random triples, sizes up to 4, degree up to 3.
  for (int t = 0; t < 100; ++t) {
    auto n = static_cast<std::size_t>(gen::small_int(rng, 2, 4));
    MatrixField a = random_poly_field(rng, n, 1, 3);
    MatrixField b = random_poly_field(rng, n, 1, 3);
    MatrixField c = random_poly_field(rng, n, 1, 3);
    if (convolve(convolve(a, b), c) != convolve(a, convolve(b, c))) {
      note = "associativity trial " + std::to_string(t);
      return false;
    }
  }
  return true;
}

bool representation_isomorphism(std::string& note) {
  std::mt19937_64 rng(202);
  SampleGrid grid =
      SampleGrid::product(Box::bounded({{BigRational(0), BigRational(1)}}), {8});
  for (int t = 0; t < 100; ++t) {
    auto n = static_cast<std::size_t>(gen::small_int(rng, 2, 3));
    MatrixField a = random_poly_field(rng, n, 1, 3);
    MatrixField b = random_poly_field(rng, n, 1, 3);
    if (represent(convolve(a, b), grid) != represent(a, grid) * represent(b, grid)) {
      note = "homomorphism trial " + std::to_string(t);
      return false;
    }
  }
  // Injectivity surrogate: a nonzero polynomial field of degree at most 3
  // cannot vanish on 8 distinct sample points.
  for (int t = 0; t < 40; ++t) {
    MatrixField f(2, 1, Box::whole(1));
    f.entry(0, 0) = RationalFunction(gen::nonzero_polynomial(rng, 1, 3, 3));
    f.entry(1, 1) = RationalFunction(gen::polynomial(rng, 1, 3, 3));
    RandomOperatorField rep = represent(f, grid);
    bool all_zero = true;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      for (std::size_t i = 0; i < 2 && all_zero; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          if (!rep.sample(k).at(i, j).is_zero()) {
            all_zero = false;
            break;
          }
        }
      }
    }
    if (all_zero) {
      note = "nonzero field represented as zero";
      return false;
    }
  }
  return true;
}

bool random_operator_norm(std::string& note) {
  Box unit = Box::bounded({{BigRational(0), BigRational(1)}});
  MatrixField f(2, 1, Box::whole(1));
  f.entry(0, 0) = RationalFunction::variable(0, 1);
  double norm = ess_sup_norm(represent(f, SampleGrid::product(unit, {7})));
  if (std::abs(norm - 0.875) > 1e-12) {
    note = "norm " + std::to_string(norm) + " is not 7/8 within 1e-12";
    return false;
  }
  double last = 0.0;
  for (std::size_t count : {3, 7, 15, 31}) {
    double cur = ess_sup_norm(represent(f, SampleGrid::product(unit, {count})));
    if (cur + 1e-12 < last) {
      note = "norm decreased under refinement";
      return false;
    }
    last = cur;
  }
  return true;
}

bool center_results(std::string& note) {
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<MatrixField> basis = center_basis(n, 1, 2);
    if (basis.size() != 1 ||
        basis[0] != MatrixField::identity(n, 1, basis[0].domain())) {
      note = "center at size " + std::to_string(n);
      return false;
    }
  }
  std::mt19937_64 rng(404);
  for (int t = 0; t < 100; ++t) {
    FinSuppKernel a = random_kernel(rng);
    std::int64_t y0 = *a.right_support().begin();
    FinSuppKernel b = center_witness(a, y0);
    if (!convolve(a, b).is_zero() || convolve(b, a).is_zero()) {
      note = "witness trial " + std::to_string(t);
      return false;
    }
  }
  if (kernel_commutant_basis(Window{0, 2}, Window{0, 2}).size() != 1 ||
      !kernel_commutant_basis(Window{0, 2}, Window{-1, 3}).empty()) {
    note = "window commutant dimensions";
    return false;
  }
  return true;
}

bool koszul_consistency(std::string& note) {
  for (const LieAlgebra& lie :
       {LieAlgebra::su2(), LieAlgebra::sl2(), LieAlgebra::so3()}) {
    BlockMetric g = BlockMetric::vertical_killing(&lie, 1);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
          if (g.pair(nabla(g, vert(i, lie), vert(j, lie)), vert(k, lie)) !=
              koszul(g, vert(i, lie), vert(j, lie), vert(k, lie))) {
            note = "vertical sector";
            return false;
          }
        }
      }
    }
  }
  for (const auto& [label, m] : horizontal_metrics()) {
    BlockMetric g(m, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t k = 0; k < 2; ++k) {
          if (g.pair(nabla(g, g.basis(i), g.basis(j)), g.basis(k)) !=
              koszul(g, g.basis(i), g.basis(j), g.basis(k))) {
            note = label;
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool curvature_closed_forms(std::string& note) {
  // Vertical sector: metric route equals the closed form on all triples.
  for (const LieAlgebra& lie :
       {LieAlgebra::su2(), LieAlgebra::sl2(), LieAlgebra::so3()}) {
    BlockMetric g = BlockMetric::vertical_killing(&lie, 1);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
          Derivation got = curvature(g, vert(i, lie), vert(j, lie), vert(k, lie));
          if (!got.horizontal_part_zero() ||
              got.v() != vertical_curvature(lie, vert(i, lie), vert(j, lie),
                                            vert(k, lie))) {
            note = "vertical triple";
            return false;
          }
        }
      }
    }
  }
  // Inner sector: 100 random triples.
  std::mt19937_64 rng(606);
  GaussianRational quarter(BigRational(-1, 4));
  for (int t = 0; t < 100; ++t) {
    auto n = static_cast<std::size_t>(gen::small_int(rng, 2, 3));
    MatrixField a = random_poly_field(rng, n, 1, 2);
    MatrixField b = random_poly_field(rng, n, 1, 2);
    MatrixField c = random_poly_field(rng, n, 1, 2);
    MatrixField closed = commutator(commutator(a, b), c);
    closed.scale(quarter);
    if (inner_curvature(a, b, c) != closed) {
      note = "inner trial " + std::to_string(t);
      return false;
    }
  }
  // A bracket table violating the Jacobi identity must break the identity.
  GaussianRational one(1), minus(-1);
  LieAlgebra broken = LieAlgebra::from_structure_unchecked(
      3, {{0, 1, 2, one},
          {1, 0, 2, minus},
          {1, 2, 0, one},
          {2, 1, 0, minus},
          {2, 0, 0, one},
          {0, 2, 0, minus}});
  bool mismatch = false;
  for (std::size_t i = 0; i < 3 && !mismatch; ++i) {
    for (std::size_t j = 0; j < 3 && !mismatch; ++j) {
      for (std::size_t k = 0; k < 3 && !mismatch; ++k) {
        LieVector u = LieVector::basis(i, 3, 1);
        LieVector v = LieVector::basis(j, 3, 1);
        LieVector w = LieVector::basis(k, 3, 1);
        LieVector closed = vertical_curvature(broken, Derivation::vertical(u, 1),
                                              Derivation::vertical(v, 1),
                                              Derivation::vertical(w, 1));
        if (defining_curvature(broken, u, v, w) != closed) mismatch = true;
      }
    }
  }
  if (!mismatch) {
    note = "mutant bracket table went unnoticed";
    return false;
  }
  return true;
}

bool ricci_and_scalar(std::string& note) {
  for (const LieAlgebra& lie :
       {LieAlgebra::su2(), LieAlgebra::sl2(), LieAlgebra::so3()}) {
    BlockMetric g = BlockMetric::vertical_killing(&lie, 1);
    Matrix<GaussianRational> killing = lie.killing();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        GaussianRational quarter = killing.at(i, j);
        quarter *= GaussianRational(BigRational(1, 4));
        if (ricci(g, vert(i, lie), vert(j, lie)) !=
            RationalFunction::constant(quarter, 1)) {
          note = "Ricci pair";
          return false;
        }
      }
    }
    if (scalar_curvature(g) !=
        RationalFunction::constant(GaussianRational(BigRational(3, 4)), 1)) {
      note = "scalar is not dim/4";
      return false;
    }
  }
  // Hyperbolic plane: the independent symbol-based route gives -2 exactly,
  // and the module trace convention is its negative.
  Matrix<RationalFunction> m = hyperbolic_metric();
  if (oracle::classical_scalar(m) !=
      RationalFunction::constant(GaussianRational(-2), 2)) {
    note = "classical hyperbolic scalar is not -2";
    return false;
  }
  if (scalar_curvature(BlockMetric(m, 2)) !=
      RationalFunction::constant(GaussianRational(2), 2)) {
    note = "module scalar is not the negative of the classical one";
    return false;
  }
  return true;
}

bool levi_civita(std::string& note) {
  for (const auto& [label, m] : horizontal_metrics()) {
    BlockMetric g(m, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        if (!torsion_defect(g, g.basis(i), g.basis(j)).is_zero()) {
          note = label + ": torsion";
          return false;
        }
        for (std::size_t k = 0; k < 2; ++k) {
          if (!compatibility_defect(g, g.basis(i), g.basis(j), g.basis(k)).is_zero()) {
            note = label + ": compatibility";
            return false;
          }
        }
      }
    }
  }
  BlockMetric flat(horizontal_metrics()[0].second, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        if (!curvature(flat, flat.basis(i), flat.basis(j), flat.basis(k)).is_zero()) {
          note = "flat curvature";
          return false;
        }
      }
    }
  }
  return true;
}

bool sheaf_machinery(std::string& note) {
  // Exhaustive sweep over every topology on up to four points.
  std::size_t swept = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const FiniteTopology& t : all_topologies(n)) {
      TabulatedPresheaf p = function_presheaf(t);
      if (p.verify() || p.check_sheaf_axiom()) {
        note = "function presheaf failed on " + std::to_string(n) + " points";
        return false;
      }
      for (std::size_t pt = 0; pt < n; ++pt) {
        auto want = static_cast<std::size_t>(
            std::popcount(t.minimal_neighborhood(pt)));
        if (p.stalk(pt).algebra.dim != want) {
          note = "stalk dimension";
          return false;
        }
      }
      SheafifyResult s = sheafify(p);
      if (s.sheaf.check_sheaf_axiom()) {
        note = "sheafified output failed the axiom";
        return false;
      }
      for (const auto& c : s.canonical) {
        if (!invertible(c)) {
          note = "canonical map not invertible on a sheaf";
          return false;
        }
      }
      ++swept;
    }
  }
  if (swept != 1 + 4 + 29 + 355) {
    note = "topology count " + std::to_string(swept);
    return false;
  }

  // Constant presheaf: the classic failure and its repair.
  FiniteTopology two = FiniteTopology::discrete(2);
  TabulatedPresheaf cp = constant_presheaf(two, SectionAlgebra::scalars());
  Matrix<GaussianRational> s1(1, 1, GaussianRational(1));
  Matrix<GaussianRational> s2(1, 1, GaussianRational(2));
  if (cp.glue({0b01u, 0b10u}, {s1, s2}).status != GlueStatus::incompatible ||
      !cp.check_sheaf_axiom()) {
    note = "constant presheaf unexpectedly glued";
    return false;
  }
  SheafifyResult repaired = sheafify(cp);
  if (repaired.sheaf.check_sheaf_axiom() ||
      repaired.sheaf.dim(two.full_mask()) != 2 ||
      invertible(repaired.canonical.back())) {
    note = "constant presheaf repair";
    return false;
  }

  // Box-cover presheaf over rational-function sections.
  std::mt19937_64 rng(909);
  Box domain = Box::bounded({{BigRational(0), BigRational(3)}});
  BoxPresheaf bp(2, 1, domain);
  std::vector<Box> opens = {Box::bounded({{BigRational(0), BigRational(2)}}),
                            Box::bounded({{BigRational(1), BigRational(3)}}),
                            Box::bounded({{BigRational(1), BigRational(2)}})};
  std::vector<MatrixField> sections = {random_poly_field_on(rng, 2, 1, 2, domain),
                                       random_poly_field_on(rng, 2, 1, 2, domain)};
  if (verify_presheaf(bp, opens, sections)) {
    note = "box presheaf laws";
    return false;
  }
  MatrixField glob = random_poly_field_on(rng, 2, 1, 2, domain);
  BoxGlueResult glued =
      bp.glue(domain, {opens[0], opens[1]},
              {bp.restrict_section(glob, opens[0]), bp.restrict_section(glob, opens[1])});
  if (glued.status != GlueStatus::glued || *glued.section != glob) {
    note = "box glue did not recover the section";
    return false;
  }
  if (!box_cover_gap(domain, {opens[0]})) {
    note = "coverage gap went unnoticed";
    return false;
  }
  return true;
}

bool intertwiner_identities(std::string& note) {
  std::mt19937_64 rng(1010);
  SampleGrid grid =
      SampleGrid::product(Box::bounded({{BigRational(0), BigRational(1)}}), {8});
  for (int t = 0; t < 100; ++t) {
    RationalFunction f(gen::polynomial(rng, 1, 2, 2));
    Matrix<GaussianRational> B = Matrix<GaussianRational>::zeros(2, 2, GaussianRational(0));
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) B.at(i, j) = gen::gaussian(rng);
    }
    RationalFunction psi(gen::polynomial(rng, 1, 2, 2));
    RationalFunction psi2(gen::polynomial(rng, 1, 2, 2));
    std::vector<GaussianRational> phi = {gen::gaussian(rng), gen::gaussian(rng)};
    std::vector<GaussianRational> phi2 = {gen::gaussian(rng), gen::gaussian(rng)};
    IntertwinerReport rep = tensor_vs_field_intertwiner(f, B, grid, psi, phi, psi2, phi2);
    if (!rep.action_ok || !rep.inner_ok) {
      note = "trial " + std::to_string(t) + ": " + rep.detail;
      return false;
    }
  }
  return true;
}

bool tensor_laws_and_functoriality(std::string& note) {
  std::mt19937_64 rng(1111);
  Box dom = Box::whole(1);
  for (int t = 0; t < 60; ++t) {
    SimpleTensor s1{RationalFunction(gen::polynomial(rng, 1, 2, 2)),
                    Matrix<GaussianRational>::zeros(2, 2, GaussianRational(0))};
    SimpleTensor s2{RationalFunction(gen::polynomial(rng, 1, 2, 2)),
                    Matrix<GaussianRational>::zeros(2, 2, GaussianRational(0))};
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        s1.op.at(i, j) = gen::gaussian(rng);
        s2.op.at(i, j) = gen::gaussian(rng);
      }
    }
    // Product, star, and bilinear sums of elementary tensors.
    SimpleTensor prod{s1.scalar * s2.scalar, s1.op * s2.op};
    if (convolve(s1.embed(dom), s2.embed(dom)) != prod.embed(dom)) {
      note = "tensor product";
      return false;
    }
    SimpleTensor star{s1.scalar.conj(), s1.op.conj_transpose()};
    if (s1.embed(dom).star() != star.embed(dom)) {
      note = "tensor star";
      return false;
    }
    SimpleTensor sum_ops{s1.scalar, s1.op + s2.op};
    SimpleTensor other{s2.scalar, s1.op};
    SimpleTensor sum_scalars{s1.scalar + s2.scalar, s1.op};
    if (s1.embed(dom) + SimpleTensor{s1.scalar, s2.op}.embed(dom) != sum_ops.embed(dom) ||
        s1.embed(dom) + other.embed(dom) != sum_scalars.embed(dom)) {
      note = "tensor sums";
      return false;
    }
  }
  // Restriction along nested boxes composes and fixes the top level.
  BoxPresheaf bp(2, 1, Box::bounded({{BigRational(0), BigRational(8)}}));
  for (int t = 0; t < 40; ++t) {
    std::int64_t a = gen::small_int(rng, 0, 5);
    std::int64_t b = gen::small_int(rng, a + 1, 7);
    Box u = bp.domain();
    Box v = Box::bounded({{BigRational(a), BigRational(b + 1)}});
    Box w = Box::bounded({{BigRational(a), BigRational(b)}});
    MatrixField f = random_poly_field_on(rng, 2, 1, 2, u);
    if (bp.restrict_section(bp.restrict_section(f, v), w) != bp.restrict_section(f, w) ||
        bp.restrict_section(f, u) != f) {
      note = "restriction chain";
      return false;
    }
  }
  return true;
}

struct Criterion {
  std::string name;
  double limit_s;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"convolution product and associativity", 5.0, convolution_correctness},
      {"representation is an exact homomorphism", 5.0, representation_isomorphism},
      {"essential supremum pin and monotonicity", 1.0, random_operator_norm},
      {"trivial center, witnesses, window commutants", 10.0, center_results},
      {"Koszul pairing consistency", 5.0, koszul_consistency},
      {"curvature closed forms and mutant detection", 5.0, curvature_closed_forms},
      {"Ricci quarter-Killing and scalar invariants", 5.0, ricci_and_scalar},
      {"torsion-free metric compatibility", 2.0, levi_civita},
      {"sheaf sweep, stalks, sheafification, box covers", 30.0, sheaf_machinery},
      {"intertwiner action and inner products", 5.0, intertwiner_identities},
      {"elementary tensor laws and restriction chains", 2.0, tensor_laws_and_functoriality},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Criterion& c = criteria[k];
    std::string note;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs < c.limit_s;
    if (ok && !in_budget) note = "over time budget";
    bool pass = ok && in_budget;
    std::printf("[%2zu/11] %s  %-48s %6.2f s (limit %g s)%s%s\n", k + 1,
                pass ? "PASS" : "FAIL", c.name.c_str(), secs, c.limit_s,
                note.empty() ? "" : "  -- ", note.c_str());
    if (!pass) ++failures;
  }
  if (failures == 0) {
    std::printf("acceptance: all 11 criteria hold\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
