#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "heegner/density.hpp"
#include "heegner/heegner_number.hpp"

namespace heegner {

struct ZkScore {
  std::int64_t zk;
  std::uint64_t prime_count;

  friend bool operator==(const ZkScore&, const ZkScore&) = default;
};

/// Result of choosing Zk for a range [n_lo, n_hi].
///
/// `best` is the closed-form pick (the vertex centred on the range);
/// `empirical_best` is only set when a sweep was run and is reported
/// separately, never substituted for `best`.
struct OptimizationResult {
  std::int64_t n_lo;
  std::int64_t n_hi;
  std::vector<std::int64_t> candidates;
  std::vector<ZkScore> candidate_scores;
  ZkScore best;
  std::optional<std::vector<ZkScore>> sweep;
  std::optional<ZkScore> empirical_best;
};

/// floor((n_lo + n_hi + 1) / 2), plus the rounded-half-up value when the sum
/// is odd. Throws Error(InvalidRange) unless 0 <= n_lo < n_hi.
std::vector<std::int64_t> optimal_zk(std::int64_t n_lo, std::int64_t n_hi);

/// Scans every candidate over [n_lo, n_hi]; ties go to the smaller Zk.
/// Throws Error(InvalidRange) for an empty candidate list or a negative Zk.
OptimizationResult evaluate_candidates(std::int64_t n_lo, std::int64_t n_hi, HeegnerNumber H,
                                       const std::vector<std::int64_t>& candidates,
                                       unsigned threads = 1);

/// Prime counts for every Zk in [center - window, center + window] (clamped
/// at 0), where center = floor((n_lo + n_hi + 1) / 2). Sorted by Zk.
std::vector<ZkScore> sweep_verify(std::int64_t n_lo, std::int64_t n_hi, HeegnerNumber H,
                                  std::int64_t window, unsigned threads = 1);

/// The entry with the highest count (smallest Zk on ties).
ZkScore best_of(const std::vector<ZkScore>& scores);

/// optimal_zk + evaluate_candidates, plus sweep_verify when window is set.
OptimizationResult optimize(std::int64_t n_lo, std::int64_t n_hi, HeegnerNumber H,
                            std::optional<std::int64_t> window, unsigned threads = 1);

}  // namespace heegner
