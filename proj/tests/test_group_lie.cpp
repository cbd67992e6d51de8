#include "doctest.h"

#include <random>

#include "ncgeom/errors.hpp"
#include "ncgeom/field_parse.hpp"
#include "ncgeom/group.hpp"
#include "ncgeom/lie.hpp"
#include "support/random_gen.hpp"

using namespace ncgeom;
namespace gen = ncgeom::testgen;

TEST_CASE("cyclic and symmetric groups satisfy the axioms by construction") {
  FiniteGroup z5 = FiniteGroup::cyclic(5);
  CHECK(z5.order() == 5);
  CHECK(z5.identity() == 0);
  CHECK(z5.mul(3, 4) == 2);
  CHECK(z5.inv(2) == 3);
  CHECK(z5.is_abelian());

  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(!s3.is_abelian());
  for (std::size_t a = 0; a < 6; ++a) {
    CHECK(s3.mul(a, s3.inv(a)) == s3.identity());
  }

  FiniteGroup s5 = FiniteGroup::symmetric(5);
  CHECK(s5.order() == 120);
}

TEST_CASE("group validation rejects broken tables and oversized groups") {
  // Order above the supported bound.
  CHECK_THROWS_AS(FiniteGroup::cyclic(201), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::symmetric(6), ValidationError);
  // Not associative: 2x2 table with a tweak is no longer a latin square, so
  // build a 3-element magma that is latin but not associative.
  std::vector<std::vector<std::size_t>> bad = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  CHECK_NOTHROW(FiniteGroup::from_table(bad));  // this one is Z/3, fine
  std::vector<std::vector<std::size_t>> nonassoc = {
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1},
      {4, 3, 1, 2, 0},
  };
  CHECK_THROWS_AS(FiniteGroup::from_table(nonassoc), ValidationError);
  std::vector<std::vector<std::size_t>> repeats = {{0, 1}, {0, 1}};
  CHECK_THROWS_AS(FiniteGroup::from_table(repeats), ValidationError);
  std::vector<std::vector<std::size_t>> no_identity = {{1, 0}, {0, 1}};
  // Swapping rows of Z/2 renames the identity; the constructor must still
  // find it or reject.  Here row0 is the nonidentity, and the table is still
  // a group (isomorphic to Z/2) with identity element 1.
  CHECK_NOTHROW(FiniteGroup::from_table(no_identity));
  CHECK(FiniteGroup::from_table(no_identity).identity() == 1);
}

TEST_CASE("structure constant validation catches antisymmetry and Jacobi failures") {
  GaussianRational one(1);
  // [e1,e2] = e3 without the mirror entry breaks antisymmetry.
  CHECK_THROWS_AS(LieAlgebra::from_structure(3, {{0, 1, 2, one}}), ValidationError);
  // Antisymmetric but Jacobi-violating mutant:
  // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e1.
  std::vector<LieAlgebra::StructureEntry> mutant = {
      {0, 1, 2, one}, {1, 0, 2, -one}, {1, 2, 0, one},
      {2, 1, 0, -one}, {2, 0, 0, one}, {0, 2, 0, -one},
  };
  CHECK_THROWS_AS(LieAlgebra::from_structure(3, mutant), ValidationError);
  // The unchecked path accepts it; explicit validation then flags it.
  LieAlgebra broken = LieAlgebra::from_structure_unchecked(3, mutant);
  CHECK_THROWS_AS(broken.validate(), ValidationError);
}

TEST_CASE("adjoint matrices match hand values") {
  LieAlgebra su2 = LieAlgebra::su2();
  Matrix<GaussianRational> ad1 = su2.ad(0);
  // ad(e1) sends e2 to e3 and e3 to -e2.
  CHECK(ad1.at(2, 1) == GaussianRational(1));
  CHECK(ad1.at(1, 2) == GaussianRational(-1));
  CHECK(ad1.at(0, 0) == GaussianRational(0));
  CHECK(ad1.at(1, 1) == GaussianRational(0));
  // ad of a vector is the matching combination of basis ad's.
  std::vector<GaussianRational> v = {GaussianRational(2), GaussianRational(0),
                                     GaussianRational(-1)};
  Matrix<GaussianRational> adv = su2.ad(v);
  Matrix<GaussianRational> expect = su2.ad(0);
  expect.scale(GaussianRational(2));
  Matrix<GaussianRational> ad3 = su2.ad(2);
  ad3.scale(GaussianRational(-1));
  CHECK(adv == expect + ad3);
}

TEST_CASE("Killing forms match hand values") {
  LieAlgebra su2 = LieAlgebra::su2();
  Matrix<GaussianRational> b = su2.killing();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(b.at(i, j) == (i == j ? GaussianRational(-2) : GaussianRational(0)));
    }
  }
  CHECK(su2.is_semisimple());
  CHECK(LieAlgebra::so3().killing() == b);

  LieAlgebra sl2 = LieAlgebra::sl2();
  Matrix<GaussianRational> k = sl2.killing();
  CHECK(k.at(0, 0) == GaussianRational(8));   // B(h, h)
  CHECK(k.at(1, 2) == GaussianRational(4));   // B(e, f)
  CHECK(k.at(2, 1) == GaussianRational(4));
  CHECK(k.at(1, 1) == GaussianRational(0));
  CHECK(k.at(2, 2) == GaussianRational(0));
  CHECK(k.at(0, 1) == GaussianRational(0));
  CHECK(sl2.is_semisimple());

  LieAlgebra ab = LieAlgebra::abelian(3);
  CHECK(ab.killing().is_zero());
  CHECK(!ab.is_semisimple());
}

TEST_CASE("Killing form is ad-invariant and symmetric on a skewed basis") {
  // Change of basis of the rotation algebra: f1 = e1 + e2, f2 = e2, f3 = e3.
  // The structure constants become nondiagonal but all invariants persist.
  GaussianRational one(1), minus(-1);
  std::vector<LieAlgebra::StructureEntry> skew = {
      // [f1,f2] = [e1,e2] = e3 = f3
      {0, 1, 2, one}, {1, 0, 2, minus},
      // [f1,f3] = [e1+e2,e3] = -e2 + e1 = f1 - 2 f2
      {0, 2, 0, one}, {2, 0, 0, minus},
      {0, 2, 1, GaussianRational(-2)}, {2, 0, 1, GaussianRational(2)},
      // [f2,f3] = [e2,e3] = e1 = f1 - f2
      {1, 2, 0, one}, {2, 1, 0, minus},
      {1, 2, 1, minus}, {2, 1, 1, one},
  };
  LieAlgebra g = LieAlgebra::from_structure(3, skew);
  Matrix<GaussianRational> b = g.killing();
  CHECK(b == b.transpose());
  CHECK(g.is_semisimple());
  // Invariance B([x,y],z) + B(y,[x,z]) = 0 on all basis triples.
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      for (std::size_t z = 0; z < 3; ++z) {
        GaussianRational acc(0);
        for (std::size_t k = 0; k < 3; ++k) {
          acc += g.c(x, y, k) * b.at(k, z);
          acc += g.c(x, z, k) * b.at(y, k);
        }
        CHECK(acc == GaussianRational(0));
      }
    }
  }
}

TEST_CASE("Killing form of random validated algebras is symmetric") {
  std::mt19937_64 rng(20240601);
  // Random antisymmetric tables rarely satisfy Jacobi, so perturb known
  // algebras by scaling a basis vector, which preserves all axioms.
  for (int trial = 0; trial < 20; ++trial) {
    GaussianRational s(BigRational(gen::small_int(rng, 1, 5)));
    std::vector<LieAlgebra::StructureEntry> entries;
    LieAlgebra base = trial % 2 ? LieAlgebra::su2() : LieAlgebra::sl2();
    // e1 -> s * e1 rescaling: c'_{ijk} picks up s on incidences of index 0.
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
          GaussianRational c = base.c(i, j, k);
          if (c.is_zero()) continue;
          if (i == 0) c *= s;
          if (j == 0) c *= s;
          if (k == 0) c /= s;
          entries.push_back({i, j, k, c});
        }
      }
    }
    LieAlgebra g = LieAlgebra::from_structure(3, entries);
    Matrix<GaussianRational> b = g.killing();
    CHECK(b == b.transpose());
    CHECK(g.is_semisimple());
  }
}

TEST_CASE("coefficient-valued vectors bracket bilinearly") {
  LieAlgebra su2 = LieAlgebra::su2();
  std::size_t nvars = 2;
  std::mt19937_64 rng(20240602);
  for (int trial = 0; trial < 30; ++trial) {
    LieVector u = LieVector::zero(3, nvars);
    LieVector v = LieVector::zero(3, nvars);
    for (std::size_t k = 0; k < 3; ++k) {
      u.comp[k] = RationalFunction(gen::polynomial(rng, nvars, 1, 2));
      v.comp[k] = RationalFunction(gen::polynomial(rng, nvars, 1, 2));
    }
    RationalFunction f(gen::polynomial(rng, nvars, 1, 2));
    // [f u, v] = f [u, v] and antisymmetry.
    LieVector fu = u;
    fu.scale(f);
    LieVector left = bracket(su2, fu, v);
    LieVector right = bracket(su2, u, v);
    right.scale(f);
    CHECK(left == right);
    CHECK(bracket(su2, u, v) == -bracket(su2, v, u));
  }
  // Basis bracket sanity: [e1, e2] = e3.
  LieVector e1 = LieVector::basis(0, 3, nvars);
  LieVector e2 = LieVector::basis(1, 3, nvars);
  CHECK(bracket(su2, e1, e2) == LieVector::basis(2, 3, nvars));
}
