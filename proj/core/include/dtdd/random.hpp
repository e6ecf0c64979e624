// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace dtdd {

/// A reproducible source of randomness owned by exactly one snapshot worker.
///
/// The stream is keyed by a tuple of 64-bit words expanded through
/// std::seed_seq, so identical keys always replay identical draws.
class RandomStream {
 public:
  using Engine = std::mt19937_64;

  explicit RandomStream(std::uint64_t seed);
  explicit RandomStream(std::initializer_list<std::uint64_t> key);

  /// Uniform sample on [lo, hi).
  double uniform(double lo, double hi);

  bool bernoulli(double probability);

  /// Circularly-symmetric complex Gaussian sample with unit variance,
  /// E[|z|^2] = 1.
  std::complex<double> complex_gaussian();

  Engine& engine() noexcept { return engine_; }

 private:
  Engine engine_;
  std::normal_distribution<double> component_;
};

/// Stream for one (utilization, snapshot) cell of a sweep. The scheme is not
/// part of the key, so every scheme observes the same realization.
RandomStream derive_stream(std::uint64_t master_seed,
                           std::uint64_t utilization_index,
                           std::uint64_t snapshot_index);

}  // namespace dtdd
