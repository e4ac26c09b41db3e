#include "heegner/channels.hpp"

#include <json.hpp>

#include "heegner/error.hpp"
#include "heegner/primality.hpp"

namespace heegner {

ChannelPlan build_plan(std::int64_t n2, HeegnerNumber H) {
  if (n2 < 1) throw Error(ErrorCode::DomainError, "n2 must be >= 1");
  if (n2 % 2 == 0) {
    throw Error(ErrorCode::EvenUpperIndex,
                "n2 = " + std::to_string(n2) + " is even; channel n2/2 would pair with itself");
  }
  const std::int64_t zk = (n2 + 1) / 2;
  QuadraticPolynomial poly = construct_from_zk(BigInt(static_cast<long>(zk)), H);

  std::vector<BigInt> entries;
  entries.reserve(static_cast<std::size_t>(n2) + 1);
  for (std::int64_t n = 0; n <= n2; ++n) entries.push_back(evaluate(poly, BigInt(static_cast<long>(n))));

  std::vector<ChannelPair> pairs;
  for (std::int64_t n = 0; n <= (n2 - 1) / 2; ++n) {
    pairs.push_back(ChannelPair{n, n2 - n, entries[static_cast<std::size_t>(n)]});
  }
  return ChannelPlan{n2, zk, std::move(poly), std::move(entries), std::move(pairs)};
}

std::int64_t mirror_channel(const ChannelPlan& plan, std::int64_t n) {
  if (n < 0 || n > plan.n2) {
    throw Error(ErrorCode::ChannelOutOfRange,
                "channel " + std::to_string(n) + " outside [0, " + std::to_string(plan.n2) + "]");
  }
  return plan.n2 - n;
}

std::vector<FrequencyReportRow> frequency_report(const ChannelPlan& plan) {
  std::vector<FrequencyReportRow> rows;
  rows.reserve(plan.pairs.size());
  for (const auto& pair : plan.pairs) {
    rows.push_back({{pair.low, pair.high}, pair.frequency, is_prime(pair.frequency)});
  }
  return rows;
}

std::string plan_to_json(const ChannelPlan& plan) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& row : frequency_report(plan)) {
    pairs.push_back({{"channels", {row.channels.first, row.channels.second}},
                     {"frequency", to_decimal(row.frequency)},
                     {"is_prime", row.is_prime}});
  }
  nlohmann::json doc{{"n2", plan.n2},
                     {"Zk", plan.zk},
                     {"H", plan.poly.H().value()},
                     {"polynomial", plan.poly.to_string()},
                     {"A", to_decimal(plan.poly.A())},
                     {"B", to_decimal(plan.poly.B())},
                     {"pairs", std::move(pairs)}};
  return doc.dump(2) + '\n';
}

}  // namespace heegner
