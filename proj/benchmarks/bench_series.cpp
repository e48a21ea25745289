#include <benchmark/benchmark.h>

#include "qseries/congruence.hpp"
#include "qseries/eta_theta.hpp"
#include "qseries/partitions.hpp"

using namespace qseries;

namespace {

void BM_InvertEulerExact(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const Series e1 = euler_product(1, CoefficientRing::integers(), order);
  for (auto _ : state) benchmark::DoNotOptimize(invert(e1));
}
BENCHMARK(BM_InvertEulerExact)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

void BM_InvertEulerModular(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const Series e1 = euler_product(1, CoefficientRing::modulo(5), order);
  for (auto _ : state) benchmark::DoNotOptimize(invert(e1));
}
BENCHMARK(BM_InvertEulerModular)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Unit(benchmark::kMillisecond);

void BM_MulDenseModular(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto ring = CoefficientRing::modulo(1000000007);
  const Series a = invert(euler_product(1, ring, order));
  const Series b = invert(euler_product(2, ring, order));
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_MulDenseModular)->RangeMultiplier(2)->Range(1 << 10, 1 << 13)->Unit(benchmark::kMillisecond);

void BM_MulSparseExact(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto Z = CoefficientRing::integers();
  const Series p = invert(euler_product(1, Z, order));
  const Series e2 = euler_product(2, Z, order);
  for (auto _ : state) benchmark::DoNotOptimize(mul(p, e2));
}
BENCHMARK(BM_MulSparseExact)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

void BM_OverpartitionSeriesMod5(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sequence_series(SequenceRef::overpartition(125), CoefficientRing::modulo(5), order));
  }
}
BENCHMARK(BM_OverpartitionSeriesMod5)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_VerifyTheoremSix(benchmark::State& state) {
  const auto& claim = std::get<CongruenceClaim>(*find_entry("C-T6"));
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_congruence(claim, bound));
}
BENCHMARK(BM_VerifyTheoremSix)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
