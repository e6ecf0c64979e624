// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "dtdd/channel.hpp"
#include "dtdd/harness.hpp"
#include "dtdd/pipeline.hpp"
#include "dtdd/power.hpp"
#include "dtdd/precoding.hpp"
#include "dtdd/topology.hpp"

namespace {

dtdd::CMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, dtdd::RandomStream& rng) {
  dtdd::CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rng.complex_gaussian();
  return m;
}

void BM_ZeroForcing(benchmark::State& state) {
  dtdd::RandomStream rng(1);
  const auto k = static_cast<Eigen::Index>(state.range(0));
  const dtdd::CMatrix m = random_matrix(k, 16, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtdd::zf_precoder(m));
  }
}
BENCHMARK(BM_ZeroForcing)->Arg(2)->Arg(8)->Arg(14);

void BM_PowerLp(benchmark::State& state) {
  dtdd::RandomStream rng(2);
  const auto k = static_cast<Eigen::Index>(state.range(0));
  const dtdd::CMatrix w = dtdd::zf_precoder(random_matrix(k, 16, rng)).w;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtdd::solve_power_lp(w, 0.1, static_cast<std::size_t>(k)));
  }
}
BENCHMARK(BM_PowerLp)->Arg(2)->Arg(8)->Arg(14);

void BM_Snapshot(benchmark::State& state) {
  const dtdd::Topology topology = dtdd::build_grid(16, 40.0);
  const dtdd::RadioParams radio;
  const std::vector<dtdd::Scheme> schemes(std::begin(dtdd::kAllSchemes),
                                          std::end(dtdd::kAllSchemes));
  const double u = static_cast<double>(state.range(0)) / 16.0;
  std::uint64_t s = 0;
  for (auto _ : state) {
    dtdd::RandomStream rng = dtdd::derive_stream(3, 0, s++);
    const dtdd::Snapshot snap = dtdd::generate_snapshot(
        topology, {.utilization = u, .dl_probability = 0.5, .require_mixed_traffic = true}, rng);
    const dtdd::ChannelRealization ch =
        dtdd::build_channel_realization(snap, topology, radio, rng);
    benchmark::DoNotOptimize(dtdd::evaluate_snapshot(schemes, 0, snap, ch, radio));
  }
}
BENCHMARK(BM_Snapshot)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
