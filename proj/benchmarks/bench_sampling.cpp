#include <benchmark/benchmark.h>

#include "hominf/geometry.hpp"
#include "hominf/harness.hpp"
#include "hominf/occupancy.hpp"

namespace {

void BM_SampleNull(benchmark::State& state) {
  const auto pack = hominf::build_pack(static_cast<int>(state.range(0)), 4, 1.0 / 16.0);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hominf::sample(pack, hominf::Hypothesis::null(), 1000, seed++));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_SampleNull)->Arg(1)->Arg(3);

void BM_Summarize(benchmark::State& state) {
  const auto pack = hominf::build_pack(1, 2, 1.0 / 256.0);
  const auto s = hominf::sample(pack, hominf::Hypothesis::null(), 311, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hominf::summarize(pack, s));
}
BENCHMARK(BM_Summarize);

void BM_McRiskLrt(benchmark::State& state) {
  hominf::TrialConfig c;
  c.d = 1;
  c.D = 2;
  c.tau = 1.0 / 256.0;
  c.n = 311;
  c.trials = 1000;
  c.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(hominf::mc_risk(c));
  state.SetItemsProcessed(state.iterations() * 2 * 1000);
}
BENCHMARK(BM_McRiskLrt)->Unit(benchmark::kMillisecond);

}  // namespace
