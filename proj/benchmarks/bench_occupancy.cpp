#include <benchmark/benchmark.h>

#include "hominf/lrt.hpp"
#include "hominf/occupancy.hpp"

namespace {

void BM_ProbAllOccupied(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const std::size_t n = hominf::threshold_sample_size(m, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(hominf::prob_all_occupied(m, n));
}
BENCHMARK(BM_ProbAllOccupied)->Arg(64)->Arg(1024)->Arg(4096)->Arg(10000);

void BM_EmptyCountDistribution(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const std::size_t n = hominf::threshold_sample_size(m, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(hominf::empty_count_distribution(m, n));
}
BENCHMARK(BM_EmptyCountDistribution)->Arg(64)->Arg(512)->Arg(4096);

void BM_RecursiveDistribution(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const std::size_t n = hominf::threshold_sample_size(m, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hominf::empty_count_distribution_recursive(m, n));
  }
}
BENCHMARK(BM_RecursiveDistribution)->Arg(64)->Arg(512);

void BM_ExactLrtRisk(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hominf::exact_lrt_risk(64, 311));
}
BENCHMARK(BM_ExactLrtRisk);

}  // namespace
