#pragma once

#include <cstdint>

namespace eulerlab {

/// Selects the OpenMP kernel or its serial reference. Both produce identical
/// results; the serial path is kept for testing and benchmarking.
enum class Execution { Serial, Parallel };

/// splitmix64 mix of (seed, index): per-sample RNG streams that do not depend on
/// how iterations are scheduled across threads.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace eulerlab
