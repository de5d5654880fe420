// SPDX-License-Identifier: Apache-2.0
#include "qstrack/rng.hpp"

#include <cmath>
#include <numbers>

namespace qstrack {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix(splitmix(seed + kGamma) ^ (stream * 0xA0761D6478BD642FULL))) {}

std::uint64_t CounterRng::at(std::uint64_t counter) const {
  return splitmix(key_ + (counter + 1) * kGamma);
}

std::uint64_t CounterRng::next_u64() { return at(counter_++); }

double CounterRng::next_double() {
  // 53 random bits into [0, 1)
  return double(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
  const double u1 = next_double();
  const double u2 = next_double();
  // 1 - u1 lies in (0, 1], keeping the log finite
  return std::sqrt(-2.0 * std::log(1.0 - u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace qstrack
