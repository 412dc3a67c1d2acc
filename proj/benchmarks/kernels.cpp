#include <benchmark/benchmark.h>

#include "nova/lift.hpp"
#include "nova/solver.hpp"
#include "nova/ybe.hpp"

using namespace nova;

namespace {

Algebra poly(Field f, std::size_t n) { return trunc_poly(f, n, Scalar::one(f)); }

void BM_NovikovResidual(benchmark::State& st) {
  const Field f = st.range(1) ? Field::prime(7) : Field::rational();
  const Algebra a = poly(f, static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(novikov_residual(a).zero());
}
BENCHMARK(BM_NovikovResidual)->ArgsProduct({{2, 3, 4, 6}, {0, 1}});

void BM_NybeResidual(benchmark::State& st) {
  const Field f = Field::prime(5);
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  const Algebra a = poly(f, n);
  Rng rng(1);
  const Tensor2 r = rng.tensor(f, n);
  for (auto _ : st) benchmark::DoNotOptimize(nybe_residual(a, r).is_zero());
}
BENCHMARK(BM_NybeResidual)->DenseRange(2, 5);

void BM_ExtO(benchmark::State& st) {
  const Field f = Field::prime(7);
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  const Algebra a = poly(f, n);
  const BimodNov ctx = regular(a);
  Rng rng(2);
  const Matrix alpha = rng.matrix(f, n, n), beta = rng.matrix(f, n, n);
  const MassParams m = MassParams::of(f, 1, 2, 3);
  for (auto _ : st) benchmark::DoNotOptimize(ext_o_residual(ctx, alpha, beta, m).flag());
}
BENCHMARK(BM_ExtO)->DenseRange(2, 5);

void BM_GnybeOnDouble(benchmark::State& st) {
  const Field f = Field::prime(3);
  const Algebra a = poly(f, static_cast<std::size_t>(st.range(0)));
  const DoubleAlg d = double_algebra(a, Bimodule::regular(a));
  Rng rng(3);
  const LiftedMap l = lift_map(d, rng.matrix(f, a.dim(), a.dim()));
  for (auto _ : st) benchmark::DoNotOptimize(gnybe_residuals(d.algebra, l.minus).zero());
}
BENCHMARK(BM_GnybeOnDouble)->DenseRange(2, 3);

void BM_EnumerateNovikov(benchmark::State& st) {
  SearchSpec s;
  s.field = Field::prime(static_cast<std::uint32_t>(st.range(0)));
  s.dim = 2;
  s.masses = MassParams::zero(s.field);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate(s, static_cast<unsigned>(st.range(1))).solutions.size());
}
BENCHMARK(BM_EnumerateNovikov)->ArgsProduct({{2, 3, 5}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& st) {
  const Field f = st.range(1) ? Field::prime(7) : Field::rational();
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  Rng rng(4);
  const Matrix m = rng.matrix(f, n, n);
  for (auto _ : st) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rref)->ArgsProduct({{4, 8, 16, 32}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
