#include <benchmark/benchmark.h>

#include "hominf/geometry.hpp"
#include "hominf/homology.hpp"

namespace {

hominf::PointCloud circle_sample(std::size_t n) {
  const auto pack = hominf::build_pack(1, 2, 0.2);
  return hominf::sample(pack, hominf::Hypothesis::null(), n, 17).points;
}

void BM_Rips(benchmark::State& state) {
  const auto pts = circle_sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hominf::rips(pts, 0.2, 2));
}
BENCHMARK(BM_Rips)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Betti(benchmark::State& state) {
  const auto k = hominf::rips(circle_sample(static_cast<std::size_t>(state.range(0))), 0.2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hominf::betti(k));
}
BENCHMARK(BM_Betti)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Linkage(benchmark::State& state) {
  const auto pack = hominf::build_pack(1, 2, 1.0 / 16.0);
  const auto s = hominf::sample(pack, hominf::Hypothesis::null(),
                                static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(hominf::betti0_linkage(s.points, pack.radius()));
}
BENCHMARK(BM_Linkage)->Arg(400)->Arg(2000);

}  // namespace
