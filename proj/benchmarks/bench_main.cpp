#include <benchmark/benchmark.h>

#include <grothkit/operators.hpp>
#include <grothkit/posets.hpp>
#include <grothkit/ppart.hpp>
#include <grothkit/qsym.hpp>
#include <grothkit/shapes.hpp>

namespace gk = grothkit;

static void BM_PolyMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gk::TruncPoly s(n, n);
  for (int i = 1; i <= n; ++i) s += gk::oplus(gk::TruncPoly::var(n, n, i), gk::TruncPoly::var(n, n, i));
  for (auto _ : state) benchmark::DoNotOptimize(gk::power(s, 3));
}
BENCHMARK(BM_PolyMultiply)->DenseRange(4, 8, 2);

static void BM_GammaMCoeffs(benchmark::State& state) {
  const auto classes = gk::labeled_poset_classes(4);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (const auto& p : classes) benchmark::DoNotOptimize(gk::gamma_m_coeffs(p, d));
}
BENCHMARK(BM_GammaMCoeffs)->DenseRange(5, 7, 1);

static void BM_GammaNaive(benchmark::State& state) {
  const auto p = gk::LabeledPoset::chain({1, 3, 2});
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gk::gamma_enumerator_naive(p, d, d));
}
BENCHMARK(BM_GammaNaive)->DenseRange(3, 5, 1);

static void BM_ExpandGQinGP(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto s = gk::parse_shape("3,2");
  for (auto _ : state) benchmark::DoNotOptimize(gk::expand_m_coeffs(gk::gq_m_coeffs(s, d), d, gk::Basis::GP));
}
BENCHMARK(BM_ExpandGQinGP)->DenseRange(6, 10, 2);

static void BM_PosetClasses(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gk::labeled_poset_classes(m));
}
BENCHMARK(BM_PosetClasses)->DenseRange(3, 5, 1);

static void BM_SlashSlash(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gk::gq_slashslash({3, 1}, {1}, d, d));
}
BENCHMARK(BM_SlashSlash)->DenseRange(4, 6, 1);

static void BM_YangBaxter(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gk::check_yang_baxter(static_cast<int>(state.range(0)), 6, 3));
}
BENCHMARK(BM_YangBaxter)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
