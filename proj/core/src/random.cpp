// SPDX-License-Identifier: Apache-2.0
#include "dtdd/random.hpp"

#include <cmath>
#include <vector>

namespace dtdd {
namespace {

// Domain tag so snapshot streams never collide with streams seeded directly.
constexpr std::uint64_t kSweepStreamTag = 0x64747464'73776565ULL;

std::mt19937_64 seeded_engine(std::initializer_list<std::uint64_t> key) {
  std::vector<std::uint32_t> words;
  words.reserve(2 * key.size());
  for (const auto value : key) {
    words.push_back(static_cast<std::uint32_t>(value & 0xffffffffULL));
    words.push_back(static_cast<std::uint32_t>(value >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed)
    : RandomStream(std::initializer_list<std::uint64_t>{seed}) {}

RandomStream::RandomStream(std::initializer_list<std::uint64_t> key)
    : engine_(seeded_engine(key)), component_(0.0, std::sqrt(0.5)) {}

double RandomStream::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

bool RandomStream::bernoulli(double probability) {
  return std::bernoulli_distribution(probability)(engine_);
}

std::complex<double> RandomStream::complex_gaussian() {
  const double re = component_(engine_);
  const double im = component_(engine_);
  return {re, im};
}

RandomStream derive_stream(std::uint64_t master_seed,
                           std::uint64_t utilization_index,
                           std::uint64_t snapshot_index) {
  return RandomStream({kSweepStreamTag, master_seed, utilization_index,
                       snapshot_index});
}

}  // namespace dtdd
