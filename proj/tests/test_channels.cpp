#include <doctest.h>

#include <set>

#include <json.hpp>

#include "heegner/channels.hpp"
#include "heegner/primality.hpp"
#include "test_support.hpp"

using namespace heegner;

namespace {
const HeegnerNumber k163{163};
}

TEST_CASE("build_plan(19, 163)") {
  const auto plan = build_plan(19, k163);
  CHECK(plan.zk == 10);
  CHECK(plan.poly.to_string() == "n^2 - 19n + 131");
  REQUIRE(plan.entries.size() == 20);
  REQUIRE(plan.pairs.size() == 10);
  CHECK(plan.pairs[4].low == 4);
  CHECK(plan.pairs[4].high == 15);
  CHECK(plan.pairs[4].frequency == 71);
  CHECK(plan.pairs[9].low == 9);
  CHECK(plan.pairs[9].high == 10);
  CHECK(plan.pairs[9].frequency == 41);
  CHECK(mirror_channel(plan, 4) == 15);
  CHECK(mirror_channel(plan, 0) == 19);
  CHECK_ERROR_CODE(mirror_channel(plan, 20), ErrorCode::ChannelOutOfRange);
  CHECK_ERROR_CODE(mirror_channel(plan, -1), ErrorCode::ChannelOutOfRange);
}

TEST_CASE("build_plan edge cases") {
  const auto one = build_plan(1, k163);
  REQUIRE(one.pairs.size() == 1);
  CHECK(one.pairs[0].low == 0);
  CHECK(one.pairs[0].high == 1);
  CHECK(one.pairs[0].frequency == 41);
  CHECK_ERROR_CODE(build_plan(20, k163), ErrorCode::EvenUpperIndex);
  CHECK_ERROR_CODE(build_plan(0, k163), ErrorCode::DomainError);
  CHECK_ERROR_CODE(build_plan(-3, k163), ErrorCode::DomainError);
  CHECK_ERROR_CODE(build_plan(19, HeegnerNumber(1)), ErrorCode::NonIntegralConstant);
}

TEST_CASE("plan invariants") {
  for (int h : {3, 7, 11, 19, 43, 67, 163}) {
    for (std::int64_t n2 = 1; n2 <= 301; n2 += 2) {
      const auto plan = build_plan(n2, HeegnerNumber(h));
      CHECK(plan.poly.A() == n2);
      CHECK(plan.pairs.size() == static_cast<std::size_t>((n2 + 1) / 2));
      std::vector<int> seen(n2 + 1, 0);
      std::set<BigInt> frequencies;
      for (const auto& pair : plan.pairs) {
        ++seen[pair.low];
        ++seen[pair.high];
        CHECK(pair.low != pair.high);
        CHECK(evaluate(plan.poly, BigInt(pair.low)) == pair.frequency);
        CHECK(evaluate(plan.poly, BigInt(pair.high)) == pair.frequency);
        frequencies.insert(pair.frequency);
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
      CHECK(frequencies.size() == plan.pairs.size());
      for (std::int64_t n = 0; n <= n2; ++n) {
        CHECK(mirror_channel(plan, mirror_channel(plan, n)) == n);
        CHECK(plan.entries[n] == plan.entries[mirror_channel(plan, n)]);
      }
    }
  }
}

TEST_CASE("frequency_report flags composites instead of rejecting") {
  const auto report = frequency_report(build_plan(19, k163));
  REQUIRE(report.size() == 10);
  CHECK(report[4].channels == std::pair<std::int64_t, std::int64_t>{4, 15});
  CHECK(report[4].frequency == 71);
  CHECK(report[4].is_prime);
  for (const auto& row : report) CHECK(row.is_prime == is_prime(row.frequency));

  // Euler's polynomial fails at n = 40, so a wide enough plan carries a composite.
  const auto wide = frequency_report(build_plan(201, k163));
  CHECK(std::any_of(wide.begin(), wide.end(), [](const auto& row) { return !row.is_prime; }));
}

TEST_CASE("plan_to_json") {
  const auto doc = nlohmann::json::parse(plan_to_json(build_plan(19, k163)));
  CHECK(doc["n2"] == 19);
  CHECK(doc["Zk"] == 10);
  CHECK(doc["H"] == 163);
  CHECK(doc["polynomial"] == "n^2 - 19n + 131");
  REQUIRE(doc["pairs"].size() == 10);
  CHECK(doc["pairs"][4]["channels"] == nlohmann::json::array({4, 15}));
  CHECK(doc["pairs"][4]["frequency"] == "71");
  CHECK(doc["pairs"][4]["is_prime"] == true);
}
