#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <string_view>

namespace zenoscope::rng {

// Pinned generator identity, recorded in every output file header. Changing
// anything below is a format break: seeded results are bit-reproducible only
// for a fixed identity string.
inline constexpr std::string_view kGeneratorId =
    "splitmix64-subseed+mt19937_64-u53/v1";

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// index-th output of the splitmix64 stream seeded at `master`. Counter-based:
// trajectory i is reproducible without generating streams 0..i-1.
constexpr std::uint64_t subsequence_seed(std::uint64_t master,
                                         std::uint64_t index) {
  return mix64(master + (index + 1) * kGolden);
}

// Seed for a named child stream (one run of a parameter sweep, a shot-noise
// layer, ...).
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  return mix64(base ^ mix64(salt + kGolden));
}

inline std::uint64_t salt_from(double value) {
  return std::bit_cast<std::uint64_t>(value);
}

// Uniform double in [0, 1) from the top 53 bits. std::uniform_real_distribution
// is implementation-defined across standard libraries; this mapping is not.
inline double uniform53(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace zenoscope::rng
