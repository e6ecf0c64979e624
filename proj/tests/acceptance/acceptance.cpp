// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dtdd/channel.hpp"
#include "dtdd/harness.hpp"
#include "dtdd/pipeline.hpp"
#include "dtdd/power.hpp"
#include "dtdd/precoding.hpp"
#include "dtdd/propagation.hpp"
#include "dtdd/random.hpp"
#include "dtdd/snapshot.hpp"
#include "dtdd/topology.hpp"
#include "test_support.hpp"

using namespace dtdd;

namespace {

// Tolerances and budgets.
constexpr double kNullingFactor = 1e-8;
constexpr double kLpObjectiveTol = 1e-6;
constexpr double kLpFeasibilityTol = 1e-9;
constexpr double kDominanceTol = 1e-9;
constexpr double kSeMultiplier = 2.0;
constexpr double kNoiseExpected = 3.162e-13;
constexpr double kNoiseTol = 1e-3;
constexpr double kFadingLo = 0.98, kFadingHi = 1.02;
constexpr double kSplitLo = 0.48, kSplitHi = 0.52;
constexpr double kNullingBudgetS = 30.0;
constexpr double kLpBudgetS = 10.0;
constexpr double kUplinkOrderBudgetS = 300.0;

constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

const std::vector<Scheme> kSchemes{Scheme::baseline, Scheme::jt, Scheme::jt_ds};

struct Stats {
  double mean = 0.0;
  double se = 0.0;
  std::size_t n = 0;
};

Stats stats(const std::vector<double>& x) {
  Stats s;
  s.n = x.size();
  if (s.n < 2) return s;
  for (double v : x) s.mean += v;
  s.mean /= static_cast<double>(s.n);
  double ss = 0.0;
  for (double v : x) ss += (v - s.mean) * (v - s.mean);
  s.se = std::sqrt(ss / static_cast<double>(s.n - 1) / static_cast<double>(s.n));
  return s;
}

// Paired per-snapshot difference a - b of one rate field, skipping cells where
// either side failed.
Stats paired(const RunResult& r, Scheme a, Scheme b, std::size_t u,
             double SnapshotRecord::*field) {
  const std::size_t per = r.config.snapshots_per_point;
  const std::size_t n_u = r.config.utilizations.size();
  const auto base = [&](Scheme s) {
    const auto pos = static_cast<std::size_t>(
        std::find(r.config.schemes.begin(), r.config.schemes.end(), s) -
        r.config.schemes.begin());
    return (pos * n_u + u) * per;
  };
  std::vector<double> diff;
  for (std::size_t s = 0; s < per; ++s) {
    const auto& ra = r.records[base(a) + s];
    const auto& rb = r.records[base(b) + s];
    if (ra.failed || rb.failed) continue;
    diff.push_back(ra.*field - rb.*field);
  }
  return stats(diff);
}

bool same_outcome(const SnapshotMetrics& a, const SnapshotMetrics& b) {
  return a.per_ue_sinr == b.per_ue_sinr && a.per_ue_rate == b.per_ue_rate &&
         a.sum_rate == b.sum_rate && a.dl_sum_rate == b.dl_sum_rate &&
         a.ul_sum_rate == b.ul_sum_rate && a.failed == b.failed;
}

SimulationConfig sweep_config(std::vector<double> utilizations, std::size_t snapshots) {
  SimulationConfig config;
  config.utilizations = std::move(utilizations);
  config.snapshots_per_point = snapshots;
  config.master_seed = kSeed;
  return config;
}

Verdict zf_nulling() {
  const auto start = Clock::now();
  const Topology t = build_grid(16, 40.0);
  const RadioParams radio;
  double worst = 0.0;  // max ratio / kappa
  std::size_t tested = 0, skipped = 0;
  for (std::size_t s = 0; s < 1000; ++s) {
    RandomStream rng = derive_stream(kSeed, 1, s);
    const Snapshot snap = generate_snapshot(
        t, {.utilization = 0.5, .dl_probability = 0.5, .require_mixed_traffic = true}, rng);
    const ChannelRealization ch = build_channel_realization(snap, t, radio, rng);
    const SnapshotMetrics base = evaluate_baseline(snap, ch, radio);
    const auto selected = jt_ds_selection(snap, base.per_ue_sinr, 0);
    const CMatrix m = assemble_m(ch, selected);
    if (m.rows() == 0) {
      ++skipped;
      continue;
    }
    const ZeroForcingPrecoder zf = zf_precoder(m);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const double row_norm = m.row(r).norm();
      for (Eigen::Index k = 0; k < zf.w.cols(); ++k) {
        if (k == r) continue;
        const double ratio = std::abs((m.row(r) * zf.w.col(k))(0, 0)) / row_norm;
        worst = std::max(worst, ratio / zf.condition_number);
      }
    }
    ++tested;
  }
  const double elapsed = seconds_since(start);
  return {worst <= kNullingFactor && elapsed < kNullingBudgetS && tested > 0,
          fmt("%zu snapshots (%zu without downlink), max leakage/kappa %.3g, %.2f s", tested,
              skipped, worst, elapsed)};
}

Verdict lp_correctness() {
  const auto start = Clock::now();
  RandomStream rng(kSeed);
  const double p_b = 0.1;
  double worst_obj = 0.0, worst_violation = 0.0;
  for (int i = 0; i < 500; ++i) {
    const auto k_dl = static_cast<Eigen::Index>(1 + rng.engine()() % 3);
    const auto extra = static_cast<Eigen::Index>(rng.engine()() % (7 - k_dl));
    const Eigen::Index cols = k_dl + extra / 2;
    const Eigen::Index rows = std::min<Eigen::Index>(6, cols + extra - extra / 2);
    const CMatrix w = testing::random_unit_columns(rows, std::min(cols, rows), rng);
    const auto k = static_cast<std::size_t>(k_dl);
    const PowerAllocation lp = solve_power_lp(w, p_b, k);
    const PowerAllocation oracle = power_lp_oracle(w, p_b, k);
    const double a = linear_objective(lp.p, k);
    const double b = linear_objective(oracle.p, k);
    worst_obj = std::max(worst_obj, std::abs(a - b) / std::max(std::abs(b), 1e-300));
    worst_violation = std::max(worst_violation, max_antenna_power(w, lp.p) - p_b);
    for (double p : lp.p) worst_violation = std::max(worst_violation, -p);
  }
  const double elapsed = seconds_since(start);
  return {worst_obj <= kLpObjectiveTol && worst_violation <= kLpFeasibilityTol &&
              elapsed < kLpBudgetS,
          fmt("500 instances, max rel objective gap %.3g, max violation %.3g W, %.2f s",
              worst_obj, std::max(worst_violation, 0.0), elapsed)};
}

Verdict degeneracy() {
  bool ok = true;
  std::size_t mismatches_a = 0, mismatches_b = 0, mismatches_c = 0;

  const RunResult full = run_sweep([] {
    SimulationConfig c = sweep_config({1.0}, 1000);
    c.schemes = {Scheme::jt, Scheme::jt_ds};
    return c;
  }());
  for (std::size_t s = 0; s < 1000; ++s) {
    SnapshotRecord jt = full.records[s];
    SnapshotRecord ds = full.records[1000 + s];
    jt.scheme = ds.scheme;
    const bool same = jt.dl_sum_rate == ds.dl_sum_rate && jt.ul_sum_rate == ds.ul_sum_rate &&
                      jt.sum_rate == ds.sum_rate && jt.failed == ds.failed &&
                      ds.v_ul == 0 && jt.k_dl == ds.k_dl;
    mismatches_a += !same;
  }

  const Topology t = build_grid(16, 40.0);
  const RadioParams radio;
  for (std::size_t s = 0; s < 1000; ++s) {
    RandomStream rng = derive_stream(kSeed, 3, s);
    const Snapshot snap = generate_snapshot(t, {.utilization = 0.5, .dl_probability = 1.0}, rng);
    const ChannelRealization ch = build_channel_realization(snap, t, radio, rng);
    const SnapshotEvaluation e = evaluate_snapshot(kSchemes, 0, snap, ch, radio);
    mismatches_b += !same_outcome(*e.jt, *e.jt_ds);
  }
  for (std::size_t s = 0; s < 1000; ++s) {
    RandomStream rng = derive_stream(kSeed, 4, s);
    const Snapshot snap = generate_snapshot(
        t, {.utilization = 0.5 + 0.25 * static_cast<double>(s % 2), .dl_probability = 0.5,
            .require_mixed_traffic = true},
        rng);
    const ChannelRealization ch = build_channel_realization(snap, t, radio, rng);
    const std::size_t delta = v_ul_max(snap.n_ul(), snap.n_dl(), snap.k_dl()) + s % 3;
    const SnapshotEvaluation e = evaluate_snapshot(kSchemes, delta, snap, ch, radio);
    mismatches_c += !same_outcome(*e.jt, *e.jt_ds);
  }
  ok = mismatches_a == 0 && mismatches_b == 0 && mismatches_c == 0;
  return {ok, fmt("mismatches: full load %zu/1000, all-downlink %zu/1000, "
                  "delta>=V_ul^max %zu/1000",
                  mismatches_a, mismatches_b, mismatches_c)};
}

Verdict uplink_dominance() {
  const Topology t = build_grid(16, 40.0);
  const RadioParams radio;
  std::size_t checked = 0, violations = 0;
  double worst = 0.0;
  for (std::size_t s = 0; s < 1000; ++s) {
    RandomStream rng = derive_stream(kSeed, 5, s);
    const double u = 0.25 * static_cast<double>(1 + s % 3);
    const Snapshot snap = generate_snapshot(
        t, {.utilization = u, .dl_probability = 0.5, .require_mixed_traffic = true}, rng);
    const ChannelRealization ch = build_channel_realization(snap, t, radio, rng);
    const SnapshotEvaluation e = evaluate_snapshot(kSchemes, 0, snap, ch, radio);
    if (e.jt->failed || e.jt_ds->failed) continue;
    const auto selected = jt_ds_selection(snap, e.baseline->per_ue_sinr, 0);
    for (std::size_t j = 0; j < snap.k_ul(); ++j) {
      if (std::find(selected.begin(), selected.end(), snap.n_ul_set[j]) == selected.end()) {
        continue;
      }
      const std::size_t pos = snap.k_dl() + j;
      const double jt = e.jt->per_ue_sinr[pos];
      const double ds = e.jt_ds->per_ue_sinr[pos];
      ++checked;
      if (ds < jt * (1.0 - kDominanceTol)) ++violations;
      worst = std::min(worst, ds / jt - 1.0);
    }
  }
  return {violations == 0 && checked > 0,
          fmt("%zu included uplink UEs, %zu violations, worst relative change %.3g", checked,
              violations, worst)};
}

Verdict uplink_ordering(const RunResult& r) {
  bool ok = r.config.snapshots_per_point == 2000;
  std::string detail;
  for (std::size_t u = 0; u < r.config.utilizations.size(); ++u) {
    const Stats vs_base =
        paired(r, Scheme::jt_ds, Scheme::baseline, u, &SnapshotRecord::ul_sum_rate);
    const Stats vs_jt = paired(r, Scheme::jt_ds, Scheme::jt, u, &SnapshotRecord::ul_sum_rate);
    ok = ok && vs_base.mean > kSeMultiplier * vs_base.se && vs_base.mean > 0.0 &&
         vs_jt.mean > kSeMultiplier * vs_jt.se && vs_jt.mean > 0.0;
    detail += fmt("u=%.3g: JT-DS-baseline %.4g+-%.2g, JT-DS-JT %.4g+-%.2g Mbit/s; ",
                  r.config.utilizations[u], vs_base.mean / 1e6, vs_base.se / 1e6,
                  vs_jt.mean / 1e6, vs_jt.se / 1e6);
  }
  return {ok, detail};
}

Verdict downlink_ordering(const RunResult& low, const RunResult& high) {
  bool ok = true;
  std::string detail;
  const Stats jt = paired(low, Scheme::jt, Scheme::baseline, 0, &SnapshotRecord::dl_sum_rate);
  const Stats ds =
      paired(low, Scheme::jt_ds, Scheme::baseline, 0, &SnapshotRecord::dl_sum_rate);
  ok = jt.mean > kSeMultiplier * jt.se && ds.mean > kSeMultiplier * ds.se;
  detail += fmt("u=0.25: JT-baseline %.4g+-%.2g, JT-DS-baseline %.4g+-%.2g; ", jt.mean / 1e6,
                jt.se / 1e6, ds.mean / 1e6, ds.se / 1e6);
  for (std::size_t u = 0; u < high.config.utilizations.size(); ++u) {
    const double util = high.config.utilizations[u];
    const Stats d = paired(high, Scheme::jt, Scheme::jt_ds, u, &SnapshotRecord::dl_sum_rate);
    // Full load: V_ul = 0 so the schemes coincide and the difference is exactly zero.
    const bool point_ok = util >= 1.0 ? d.mean == 0.0 && d.se == 0.0
                                      : d.mean > kSeMultiplier * d.se;
    ok = ok && point_ok;
    detail += fmt("u=%.3g: JT-(JT-DS) %.4g+-%.2g; ", util, d.mean / 1e6, d.se / 1e6);
  }
  return {ok, detail};
}

Verdict delta_tradeoff() {
  const Topology t = build_grid(16, 40.0);
  const std::size_t snapshots = 2000;
  // Largest V_ul^max over the snapshot set, from the same streams run_sweep uses.
  std::size_t max_v = 0;
  for (std::size_t s = 0; s < snapshots; ++s) {
    RandomStream rng = derive_stream(kSeed, 0, s);
    const Snapshot snap = generate_snapshot(
        t, {.utilization = 0.75, .dl_probability = 0.5, .require_mixed_traffic = true}, rng);
    max_v = std::max(max_v, v_ul_max(snap.n_ul(), snap.n_dl(), snap.k_dl()));
  }

  std::vector<RunResult> runs;
  for (std::size_t delta = 0; delta <= max_v; ++delta) {
    SimulationConfig c = sweep_config({0.75}, snapshots);
    c.schemes = {Scheme::jt_ds};
    c.delta = delta;
    runs.push_back(run_sweep(c));
  }
  const auto step = [&](std::size_t a, std::size_t b, double SnapshotRecord::*field) {
    std::vector<double> diff;
    for (std::size_t s = 0; s < snapshots; ++s) {
      const auto& ra = runs[a].records[s];
      const auto& rb = runs[b].records[s];
      if (ra.failed || rb.failed) continue;
      diff.push_back(rb.*field - ra.*field);
    }
    return stats(diff);
  };

  bool ok = max_v > 0;
  std::string detail = fmt("delta 0..%zu: ", max_v);
  for (std::size_t d = 0; d + 1 < runs.size(); ++d) {
    const Stats ul = step(d, d + 1, &SnapshotRecord::ul_sum_rate);
    const Stats dl = step(d, d + 1, &SnapshotRecord::dl_sum_rate);
    ok = ok && ul.mean <= kSeMultiplier * ul.se && dl.mean >= -kSeMultiplier * dl.se;
    detail += fmt("[%zu->%zu UL %+.3g DL %+.3g] ", d, d + 1, ul.mean / 1e6, dl.mean / 1e6);
  }
  const Stats total = step(0, runs.size() - 1, &SnapshotRecord::ul_sum_rate);
  ok = ok && -total.mean > kSeMultiplier * total.se;
  detail += fmt("overall UL %+.4g+-%.2g Mbit/s", total.mean / 1e6, total.se / 1e6);
  return {ok, detail};
}

Verdict noise_check() {
  const double n = noise_power(10e6, 9.0);
  const double rel = std::abs(n - kNoiseExpected) / kNoiseExpected;
  return {rel <= kNoiseTol, fmt("noise_power(10 MHz, 9 dB) = %.6g W, rel error %.3g", n, rel)};
}

Verdict determinism() {
  SimulationConfig c = sweep_config({0.25, 0.5, 1.0}, 200);
  c.worker_count = 1;
  const std::string one = records_csv(run_sweep(c));
  c.worker_count = 7;
  const std::string seven = records_csv(run_sweep(c));
  return {one == seven, fmt("%zu bytes, workers 1 vs 7 %s", one.size(),
                            one == seven ? "identical" : "differ")};
}

Verdict statistical_sanity() {
  RandomStream rng(kSeed);
  const double pl = path_loss_db(10.0, 2.0);
  double power = 0.0;
  const int samples = 100000;
  for (int i = 0; i < samples; ++i) power += std::norm(draw_channel(pl, rng));
  const double ratio = power / samples / db_to_linear(-pl);

  const Topology t = build_grid(16, 40.0);
  std::size_t dl = 0, total = 0;
  for (std::size_t s = 0; s < 10000; ++s) {
    RandomStream snap_rng = derive_stream(kSeed, 10, s);
    const Snapshot snap = generate_snapshot(t, {.utilization = 0.5, .dl_probability = 0.5}, snap_rng);
    dl += snap.k_dl();
    total += snap.k();
  }
  const double split = static_cast<double>(dl) / static_cast<double>(total);
  return {ratio >= kFadingLo && ratio <= kFadingHi && split >= kSplitLo && split <= kSplitHi,
          fmt("fading mean/path gain %.4f, downlink share %.4f", ratio, split)};
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&](int id, const char* name, const std::function<Verdict()>& check) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("[%s] %2d %s: %s\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str());
    std::fflush(stdout);
  };

  report(1, "ZF nulling", zf_nulling);
  report(2, "LP vs oracle", lp_correctness);
  report(3, "degeneracy identities", degeneracy);
  report(4, "included-BS uplink dominance", uplink_dominance);

  const auto start = Clock::now();
  const RunResult mid = run_sweep(sweep_config({0.25, 0.5}, 2000));
  const double mid_elapsed = seconds_since(start);
  report(5, "uplink ordering", [&] {
    Verdict v = uplink_ordering(mid);
    v.pass = v.pass && mid_elapsed < kUplinkOrderBudgetS;
    v.detail += fmt("%.1f s", mid_elapsed);
    return v;
  });
  report(6, "downlink ordering", [&] {
    const RunResult low = run_sweep(sweep_config({0.25}, 2000));
    const RunResult high = run_sweep(sweep_config({0.75, 0.875, 1.0}, 2000));
    return downlink_ordering(low, high);
  });
  report(7, "delta trade-off", delta_tradeoff);
  report(8, "noise power", noise_check);
  report(9, "determinism", determinism);
  report(10, "statistical sanity", statistical_sanity);

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
