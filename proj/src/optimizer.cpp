#include "heegner/optimizer.hpp"

#include <string>

#include "heegner/error.hpp"
#include "heegner/parallel.hpp"

namespace heegner {

namespace {

std::int64_t floor_div2(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

std::uint64_t count_for(std::int64_t zk, std::int64_t n_lo, std::int64_t n_hi, HeegnerNumber H) {
  return scan(construct_from_zk(BigInt(static_cast<long>(zk)), H), n_lo, n_hi).prime_count;
}

std::vector<ZkScore> score_all(const std::vector<std::int64_t>& zks, std::int64_t n_lo,
                               std::int64_t n_hi, HeegnerNumber H, unsigned threads) {
  std::vector<ZkScore> scores(zks.size());
  parallel_slices(zks.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) scores[i] = {zks[i], count_for(zks[i], n_lo, n_hi, H)};
  });
  return scores;
}

}  // namespace

std::vector<std::int64_t> optimal_zk(std::int64_t n_lo, std::int64_t n_hi) {
  if (n_lo < 0 || n_lo >= n_hi) {
    throw Error(ErrorCode::InvalidRange, "optimal_zk requires 0 <= n_lo < n_hi, got [" +
                                             std::to_string(n_lo) + ", " + std::to_string(n_hi) +
                                             "]");
  }
  const std::int64_t total = n_lo + n_hi + 1;
  const std::int64_t lower = total / 2;
  if (total % 2 == 0) return {lower};
  return {lower, lower + 1};  // round(x.5) goes up
}

ZkScore best_of(const std::vector<ZkScore>& scores) {
  if (scores.empty()) throw Error(ErrorCode::InvalidRange, "no scores to choose from");
  ZkScore best = scores.front();
  for (const auto& s : scores) {
    if (s.prime_count > best.prime_count || (s.prime_count == best.prime_count && s.zk < best.zk)) {
      best = s;
    }
  }
  return best;
}

OptimizationResult evaluate_candidates(std::int64_t n_lo, std::int64_t n_hi, HeegnerNumber H,
                                       const std::vector<std::int64_t>& candidates,
                                       unsigned threads) {
  if (candidates.empty()) throw Error(ErrorCode::InvalidRange, "candidate list is empty");
  for (const auto zk : candidates) {
    if (zk < 0) throw Error(ErrorCode::InvalidRange, "Zk must be nonnegative");
  }
  auto scores = score_all(candidates, n_lo, n_hi, H, threads);
  const ZkScore best = best_of(scores);
  return OptimizationResult{n_lo, n_hi, candidates, std::move(scores), best, std::nullopt,
                            std::nullopt};
}

std::vector<ZkScore> sweep_verify(std::int64_t n_lo, std::int64_t n_hi, HeegnerNumber H,
                                  std::int64_t window, unsigned threads) {
  if (window < 0) throw Error(ErrorCode::InvalidRange, "window must be >= 0");
  const std::int64_t center = floor_div2(n_lo + n_hi + 1);
  std::vector<std::int64_t> zks;
  for (std::int64_t zk = std::max<std::int64_t>(0, center - window); zk <= center + window; ++zk) {
    zks.push_back(zk);
  }
  if (zks.empty()) throw Error(ErrorCode::InvalidRange, "sweep window lies entirely below Zk = 0");
  return score_all(zks, n_lo, n_hi, H, threads);
}

OptimizationResult optimize(std::int64_t n_lo, std::int64_t n_hi, HeegnerNumber H,
                            std::optional<std::int64_t> window, unsigned threads) {
  OptimizationResult result = evaluate_candidates(n_lo, n_hi, H, optimal_zk(n_lo, n_hi), threads);
  if (window) {
    result.sweep = sweep_verify(n_lo, n_hi, H, *window, threads);
    result.empirical_best = best_of(*result.sweep);
  }
  return result;
}

}  // namespace heegner
