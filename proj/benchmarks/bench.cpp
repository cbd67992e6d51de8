// Microbenchmarks for the operations that dominate suite runtime: symbolic
// convolution, exact elimination, grid representation norms, and the sheaf
// axiom sweep.

#include <benchmark/benchmark.h>

#include "ncgeom/geometry.hpp"
#include "ncgeom/presheaf.hpp"
#include "ncgeom/representation.hpp"

namespace {

using namespace ncgeom;

MatrixField dense_field(std::size_t n, std::size_t nvars) {
  MatrixField f(n, nvars, Box::whole(nvars));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      RationalFunction e = RationalFunction::constant(
          GaussianRational(BigRational(static_cast<long long>(a + 2 * b + 1), 3),
                           BigRational(1, 2)),
          nvars);
      for (std::size_t v = 0; v < nvars; ++v) {
        e += RationalFunction::variable(v, nvars)
                 .pow(static_cast<std::uint32_t>(1 + (a + b + v) % 2));
      }
      f.entry(a, b) = e;
    }
  }
  return f;
}

void BM_Convolve(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  MatrixField f = dense_field(n, 2);
  MatrixField g = dense_field(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve(f, g));
  }
}
BENCHMARK(BM_Convolve)->Arg(2)->Arg(4);

void BM_Rref(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Matrix<GaussianRational> m =
      Matrix<GaussianRational>::zeros(n, n, GaussianRational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = GaussianRational(
          BigRational(static_cast<long long>((i * 7 + j * 3) % 11) - 5,
                      static_cast<long long>(1 + (i + j) % 4)));
    }
  }
  for (auto _ : state) {
    Matrix<GaussianRational> copy = m;
    benchmark::DoNotOptimize(rref(copy));
  }
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16);

void BM_EssSup(benchmark::State& state) {
  auto points = static_cast<std::size_t>(state.range(0));
  SampleGrid grid =
      SampleGrid::product(Box::bounded({{BigRational(0), BigRational(1)}}), {points});
  MatrixField f = dense_field(3, 1);
  RandomOperatorField rep = represent(f, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ess_sup_norm(rep));
  }
}
BENCHMARK(BM_EssSup)->Arg(16)->Arg(64);

void BM_SheafAxiom(benchmark::State& state) {
  FiniteTopology t(3, {0b000, 0b001, 0b011, 0b101, 0b111});
  TabulatedPresheaf p = function_presheaf(t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.check_sheaf_axiom());
  }
}
BENCHMARK(BM_SheafAxiom);

void BM_Sheafify(benchmark::State& state) {
  FiniteTopology t = FiniteTopology::discrete(2);
  TabulatedPresheaf p = constant_presheaf(t, SectionAlgebra::scalars());
  for (auto _ : state) {
    benchmark::DoNotOptimize(sheafify(p));
  }
}
BENCHMARK(BM_Sheafify);

void BM_VerticalRicci(benchmark::State& state) {
  LieAlgebra lie = LieAlgebra::su2();
  BlockMetric g = BlockMetric::vertical_killing(&lie, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scalar_curvature(g));
  }
}
BENCHMARK(BM_VerticalRicci);

}  // namespace

BENCHMARK_MAIN();
