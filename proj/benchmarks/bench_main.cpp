#include <benchmark/benchmark.h>

#include "hhops/catalog.hpp"
#include "hhops/spectral.hpp"

using namespace hhops;

namespace {

std::vector<int> first_n(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

// Expanding an unnormalized phi_S into Hall form; the bulk of the cost is Jacobi rewriting.
void BM_NormalizePhiS(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  LieElement e = phi_S(DegreeVector(std::vector<int>(n, 1)), first_n(n));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(e));
}
BENCHMARK(BM_NormalizePhiS)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_PhiSMooreCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DegreeVector dv(std::vector<int>(n, 1));
  SimplicialLieObject X = higher_wp_resolution(dv);
  LieElement e = phi_S(dv, first_n(n));
  for (auto _ : state) benchmark::DoNotOptimize(is_moore_cycle(X, n - 2, e));
}
BENCHMARK(BM_PhiSMooreCheck)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_CpnChainMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ComparisonMap f = cpn_comparison_map(n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_chain_map(f.assignment, f.source, f.target, n).ok());
}
BENCHMARK(BM_CpnChainMap)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_E2Slice(benchmark::State& state) {
  Representative w = omega_hat(4, 4, 2, 2);
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(e2_report(w.object, s, 6).rational_rank);
}
BENCHMARK(BM_E2Slice)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
