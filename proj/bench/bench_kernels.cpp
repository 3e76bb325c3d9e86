// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "nullstrata/scenario.hpp"

using namespace nullstrata;

namespace {

PairData sl4_cartan() {
  ScenarioConfig c;
  c.algebra = "sl(4)";
  c.subalgebra = "h1; h2; h3";
  return resolve_pair(c);
}

const PairData& levi() {
  static const PairData p = make_preset("sl3-levi-gl2");
  return p;
}

void BM_KempfParallel(benchmark::State& state) {
  PairData p = sl4_cartan();
  auto w = weight_table(p, p.k_perp);
  for (auto _ : state) benchmark::DoNotOptimize(kempf_candidates(p, w));
}

void BM_KempfSerial(benchmark::State& state) {
  PairData p = sl4_cartan();
  auto w = weight_table(p, p.k_perp);
  for (auto _ : state) benchmark::DoNotOptimize(kempf_candidates_serial(p, w));
}

void BM_IsotropyParallel(benchmark::State& state) {
  auto st = strata(levi(), kempf_candidates(levi(), weight_table(levi(), levi().k_perp)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_isotropy(levi(), st, 25, {0}));
}

void BM_IsotropySerial(benchmark::State& state) {
  auto st = strata(levi(), kempf_candidates(levi(), weight_table(levi(), levi().k_perp)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_isotropy_serial(levi(), st, 25, {0}));
}

// A generic point of k_perp: no certificate exists, so the whole word budget is searched.
Element generic_point(const PairData& p) {
  Element x = p.g.zero();
  long c = 1;
  for (const auto& b : p.k_perp.basis_vectors()) axpy(Rat(c++), b, x);
  return x;
}

void BM_MembershipParallel(benchmark::State& state) {
  auto ctx = nullcone_context(levi());
  Element x = generic_point(levi());
  for (auto _ : state) benchmark::DoNotOptimize(nullcone_membership(levi(), ctx, x, 2000));
}

void BM_MembershipSerial(benchmark::State& state) {
  auto ctx = nullcone_context(levi());
  Element x = generic_point(levi());
  for (auto _ : state) benchmark::DoNotOptimize(nullcone_membership_serial(levi(), ctx, x, 2000));
}

}  // namespace

BENCHMARK(BM_KempfParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KempfSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsotropyParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsotropySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MembershipParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MembershipSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
