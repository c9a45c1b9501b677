#pragma once

#include <cstdint>

namespace listcolor {

/// Identifies one trial's random stream: a pure function of both fields.
struct SeedSpec {
  std::uint64_t base_seed = 0;
  std::uint64_t trial_index = 0;
};

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t combine_seed(std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(a) ^ (b * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

/// Seed for the per-trial generator.
constexpr std::uint64_t stream_seed(SeedSpec s) { return combine_seed(s.base_seed, s.trial_index); }

}  // namespace listcolor
