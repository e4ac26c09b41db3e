#pragma once

#include <cstdint>
#include <random>

#include "heegner/bigint.hpp"

namespace heegner {

/// Source of uniform big integers. Operations that need randomness take one
/// by reference so callers own the stream (and can script it in tests).
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  /// Uniform over the inclusive interval [lo, hi]; requires lo <= hi.
  virtual BigInt uniform(const BigInt& lo, const BigInt& hi) = 0;
};

/// mt19937_64 with rejection sampling. Output depends only on the seed, so
/// seeded runs are reproducible across platforms.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}

  /// Seeds from std::random_device.
  static SeededRandom from_entropy();

  BigInt uniform(const BigInt& lo, const BigInt& hi) override;

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace heegner
