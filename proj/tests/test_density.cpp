#include <doctest.h>

#include <algorithm>
#include <set>

#include "heegner/density.hpp"
#include "heegner/random.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace heegner;

namespace {

const HeegnerNumber k163(163);

QuadraticPolynomial zk_poly(long zk, int h = 163) { return construct_from_zk(BigInt(zk), HeegnerNumber(h)); }

std::uint64_t count_with_flags(const QuadraticPolynomial& poly, std::int64_t lo, std::int64_t hi,
                               const std::vector<char>& flags) {
  std::uint64_t count = 0;
  for (std::int64_t n = lo; n <= hi; ++n) {
    const BigInt v = evaluate(poly, BigInt(static_cast<long>(n)));
    REQUIRE(v.get_ui() < flags.size());
    count += flags[v.get_ui()] ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST_CASE("scan reproduces known counts") {
  const auto table2 = scan(FamilyParams(BigInt(1), BigInt(80), k163), 0, 159);
  CHECK(table2.prime_count == 146);
  CHECK(table2.composite_count == 14);
  std::set<std::int64_t> composites;
  for (const auto& r : table2.records) {
    if (!r.is_prime) composites.insert(r.n);
  }
  CHECK(composites ==
        std::set<std::int64_t>{3, 14, 23, 30, 35, 38, 39, 120, 121, 124, 129, 136, 145, 156});

  CHECK(scan(zk_poly(0), 0, 99).prime_count == 86);
  CHECK(scan(zk_poly(100), 0, 199).prime_count == 172);
}

TEST_CASE("scan report shape") {
  const auto report = scan(zk_poly(10), -5, 30);
  CHECK(report.records.size() == 36);
  CHECK(report.prime_count + report.composite_count == 36);
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    CHECK(report.records[i].n == -5 + static_cast<std::int64_t>(i));
    CHECK(report.records[i].value == evaluate(report.poly, BigInt(report.records[i].n)));
  }
  CHECK_FALSE(report.params.has_value());
  CHECK_ERROR_CODE(scan(zk_poly(10), 5, 4), ErrorCode::EmptyRange);
}

TEST_CASE("scan counts agree with an independent sieve") {
  const auto flags = oracle::prime_flags(250'000);
  const struct {
    long zk;
    std::int64_t hi;
  } cases[] = {{80, 159}, {0, 99}, {100, 199}, {250, 499}, {500, 999}, {40, 99}, {50, 99}};
  for (const auto& c : cases) {
    const auto poly = zk_poly(c.zk);
    CHECK(scan(poly, 0, c.hi).prime_count == count_with_flags(poly, 0, c.hi, flags));
  }
  for (long k = 0; k <= 100; ++k) {
    const auto poly = zk_poly(k);
    CHECK(scan(poly, 0, 99).prime_count == count_with_flags(poly, 0, 99, flags));
  }
}

TEST_CASE("threaded scans are identical to serial ones") {
  const auto poly = zk_poly(250);
  const auto serial = scan(poly, 0, 499, 1);
  for (unsigned threads : {2u, 3u, 7u, 64u}) {
    const auto parallel = scan(poly, 0, 499, threads);
    CHECK(parallel.records == serial.records);
    CHECK(parallel.prime_count == serial.prime_count);
  }
  CHECK(k_sweep(BigInt(1), k163, 0, 30, 0, 99, 4) == k_sweep(BigInt(1), k163, 0, 30, 0, 99, 1));
}

TEST_CASE("merge_reports") {
  const auto poly = zk_poly(80);
  const auto full = scan(poly, 0, 159);
  const auto low = scan(poly, 0, 79);
  const auto high = scan(poly, 80, 159);
  for (const auto& merged : {merge_reports(low, high), merge_reports(high, low)}) {
    CHECK(merged.n_lo == 0);
    CHECK(merged.n_hi == 159);
    CHECK(merged.records == full.records);
    CHECK(merged.prime_count == 146);
    CHECK(merged.composite_count == 14);
  }
  CHECK_ERROR_CODE(merge_reports(low, scan(poly, 81, 159)), ErrorCode::InvalidRange);
  CHECK_ERROR_CODE(merge_reports(low, scan(zk_poly(81), 80, 159)), ErrorCode::InvalidRange);
}

TEST_CASE("k_sweep") {
  const auto entries = k_sweep(BigInt(1), k163, 0, 100, 0, 99);
  REQUIRE(entries.size() == 101);
  const auto at = [&](std::int64_t k) { return entries[static_cast<std::size_t>(k)].prime_count; };
  CHECK(at(40) == 95);
  CHECK(at(50) == 92);
  CHECK(at(100) == 86);

  std::set<std::int64_t> maxima;
  const auto best = std::max_element(entries.begin(), entries.end(), [](auto& a, auto& b) {
                      return a.prime_count < b.prime_count;
                    })->prime_count;
  CHECK(best == 95);
  for (const auto& e : entries) {
    if (e.prime_count == best) maxima.insert(e.k);
  }
  CHECK(maxima == std::set<std::int64_t>{35, 36, 37, 38, 39, 40, 60, 61, 62, 63, 64, 65});

  // Euler's polynomial is prime for n = 0..39.
  CHECK(k_sweep(BigInt(1), k163, 0, 0, 0, 39) == std::vector<SweepEntry>{{0, 40}});

  CHECK_ERROR_CODE(k_sweep(BigInt(1), HeegnerNumber(1), 0, 3, 0, 9), ErrorCode::NonIntegralConstant);
  CHECK_ERROR_CODE(k_sweep(BigInt(1), k163, 3, 2, 0, 9), ErrorCode::EmptyRange);
}

TEST_CASE("symmetry_check") {
  CHECK(symmetry_check(scan(zk_poly(80), 0, 159)));
  CHECK(symmetry_check(scan(zk_poly(10), 0, 19)));
  CHECK(symmetry_check(scan(zk_poly(10), 0, 10)));
  CHECK(symmetry_check(scan(zk_poly(10), 0, 3)));  // no mirrored pair inside

  auto tampered = scan(zk_poly(10), 0, 19);
  tampered.records[4].value += 2;
  CHECK_FALSE(symmetry_check(tampered));

  SeededRandom rng(3);
  for (int i = 0; i < 50; ++i) {
    const long zk = rng.uniform(BigInt(1), BigInt(400)).get_si();
    const auto poly = zk_poly(zk, 43);
    CHECK(symmetry_check(scan(poly, 0, poly.A().get_si())));
  }
}

TEST_CASE("export_report") {
  const auto report = scan(FamilyParams(BigInt(1), BigInt(80), k163), 0, 159);

  const auto csv = export_report(report, ExportFormat::Csv);
  CHECK(csv.rfind("n,value,is_prime\n0,6361,true\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 161);
  CHECK(csv.find("\n3,5893,false\n") != std::string::npos);

  const auto json_text = export_report(report, ExportFormat::Json);
  const auto parsed = parse_report_json(json_text);
  CHECK(parsed.poly == report.poly);
  CHECK(parsed.records == report.records);
  CHECK(parsed.prime_count == 146);
  REQUIRE(parsed.params.has_value());
  CHECK(parsed.params->k == 80);
  CHECK(export_report(parsed, ExportFormat::Json) == json_text);

  const auto bare = scan(zk_poly(3), 0, 4);
  CHECK_FALSE(parse_report_json(export_report(bare, ExportFormat::Json)).params.has_value());
}

TEST_CASE("parse_report_json rejects bad documents") {
  const auto text = export_report(scan(zk_poly(10), 0, 5), ExportFormat::Json);
  CHECK_ERROR_CODE(parse_report_json("{"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(parse_report_json("[]"), ErrorCode::ParseError);

  auto missing = text;
  missing.replace(missing.find("\"prime_count\""), 13, "\"primes_count\"");
  CHECK_ERROR_CODE(parse_report_json(missing), ErrorCode::MissingField);

  auto tampered = text;
  tampered.replace(tampered.find("\"131\""), 5, "\"133\"");
  CHECK_ERROR_CODE(parse_report_json(tampered), ErrorCode::InvariantViolation);
}
