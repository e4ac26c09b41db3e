#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "heegner/bigint.hpp"
#include "heegner/polynomial.hpp"

namespace heegner {

struct ChannelPair {
  std::int64_t low;   // n in [0, (n2 - 1) / 2]
  std::int64_t high;  // n2 - n
  BigInt frequency;   // f(low) == f(high)
};

/// Channels 0..n2 mapped to carrier indices f(n) with f = f_{1, (n2+1)/2, H}.
/// Because A = n2, channel n and channel n2 - n share a carrier, and odd n2
/// means no channel pairs with itself.
struct ChannelPlan {
  std::int64_t n2;
  std::int64_t zk;
  QuadraticPolynomial poly;
  std::vector<BigInt> entries;  // entries[n] = f(n)
  std::vector<ChannelPair> pairs;
};

/// Throws Error(EvenUpperIndex) for even n2, Error(DomainError) for n2 < 1,
/// and propagates Error(NonIntegralConstant).
ChannelPlan build_plan(std::int64_t n2, HeegnerNumber H);

/// n2 - n. Throws Error(ChannelOutOfRange) outside [0, n2].
std::int64_t mirror_channel(const ChannelPlan& plan, std::int64_t n);

struct FrequencyReportRow {
  std::pair<std::int64_t, std::int64_t> channels;
  BigInt frequency;
  bool is_prime;
};

std::vector<FrequencyReportRow> frequency_report(const ChannelPlan& plan);

/// {"n2", "Zk", "H", "polynomial", "pairs": [{"channels": [a, b],
/// "frequency": "71", "is_prime": true}, ...]}.
std::string plan_to_json(const ChannelPlan& plan);

}  // namespace heegner
