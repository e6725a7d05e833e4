#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace polarfade {

/// All randomness flows through an explicit engine owned by the caller.
/// mt19937_64 output is specified bit-exactly by the standard, and the
/// transforms below avoid std::*_distribution, whose output is
/// implementation-defined; seeded runs therefore reproduce across toolchains.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic substream key for (master seed, grid point, trial).
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t point, std::uint64_t trial) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ splitmix64(point + 0x517cc1b727220a95ULL));
  h = splitmix64(h ^ splitmix64(trial + 0x2545f4914f6cdd1dULL));
  return h;
}

inline Rng make_stream(std::uint64_t master, std::uint64_t point, std::uint64_t trial) {
  return Rng(mix_seed(master, point, trial));
}

/// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller (no cached spare, so the draw count per
/// call is fixed at two engine steps).
inline double normal_sample(Rng& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log1p(-u1));  // 1-u1 in (0,1]
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace polarfade
