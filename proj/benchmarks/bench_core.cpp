#include <benchmark/benchmark.h>

#include "autxy/sigma.hpp"
#include "../tests/support/generators.hpp"

using namespace autxy;

namespace {

void BM_decompose_tame(benchmark::State& state) {
  testgen::Rng rng(12);
  int p = 3;
  std::vector<Auto> samples;
  for (int i = 0; i < 16; ++i)
    samples.push_back(testgen::random_tame(rng, p).value);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(samples[i % samples.size()]));
    ++i;
  }
}
BENCHMARK(BM_decompose_tame);

void BM_sigma_build(benchmark::State& state) {
  int p = 2;
  TPoly t = TPoly::t(p);
  RPoly y = RPoly::y(p);
  SigmaParams s = make_sigma_params(t * t, y + y.pow(2) * t, y - y.pow(2) * t);
  for (auto _ : state) benchmark::DoNotOptimize(make_sigma(s));
}
BENCHMARK(BM_sigma_build);

void BM_length3_membership(benchmark::State& state) {
  int p = 2;
  TPoly t = TPoly::t(p);
  RPoly y = RPoly::y(p);
  SigmaParams s = make_sigma_params(t * t, y + y.pow(2) * t, y - y.pow(2) * t);
  Auto sk = make_sigma(s).sigma.view_over(RingTag::K);
  GroupOracles o = affine_triangular_oracles();
  PStableSet I = PStableSet::p_multiples(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(length3_membership(sk, o, I));
}
BENCHMARK(BM_length3_membership);

void BM_binom_mod_p(benchmark::State& state) {
  long long acc = 0;
  for (auto _ : state) {
    for (long long n = 0; n < 64; ++n)
      for (long long k = 0; k <= n; ++k) acc += binom_mod_p(n, k, 5);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_binom_mod_p);

void BM_nonnormality_witness(benchmark::State& state) {
  PStableSet I = PStableSet::p_powers(3), J = PStableSet::p_multiples(3);
  TPoly a = TPoly::t(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(nonnormality_witness(I, J, a));
}
BENCHMARK(BM_nonnormality_witness);

}  // namespace

BENCHMARK_MAIN();
