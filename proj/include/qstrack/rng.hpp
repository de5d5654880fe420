// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace qstrack {

// Counter-based generator: output i is a pure function of (seed, stream, i).
// Prefixes therefore agree between runs of different lengths, and named
// streams never collide. The word function is the splitmix64 finalizer
// applied to a keyed counter; Gaussians come from Box-Muller on two fresh
// uniforms (no cached second sample).
class CounterRng {
 public:
  enum Stream : std::uint64_t {
    kHamiltonian = 1,
    kInitialState = 2,
    kMeasurementNoise = 3,
    kOracleNoise = 4,
    kTest = 900,
  };

  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  double next_double();    // uniform in [0, 1)
  double next_gaussian();  // standard normal

  // Word at an absolute counter position, without moving the cursor.
  std::uint64_t at(std::uint64_t counter) const;
  std::uint64_t counter() const { return counter_; }
  void skip_to(std::uint64_t counter) { counter_ = counter; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace qstrack
