#pragma once

#include <cstdint>
#include <random>

namespace phylotrop {

/// Seeded generator whose draws are identical on every platform.
/// std::uniform_int_distribution is implementation-defined, so bounded
/// draws go through rejection sampling on the raw 64-bit engine output.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi], inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi);

private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace phylotrop
