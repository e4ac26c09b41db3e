#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heegner/bigint.hpp"
#include "heegner/polynomial.hpp"

namespace heegner {

struct ScanRecord {
  std::int64_t n;
  BigInt value;
  bool is_prime;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// Evaluation of one polynomial over every n in [n_lo, n_hi].
/// Invariant: records are sorted by n, cover the range exactly, and
/// prime_count + composite_count == n_hi - n_lo + 1.
struct ScanReport {
  QuadraticPolynomial poly;
  std::optional<FamilyParams> params;  // absent when scanned from a bare polynomial
  std::int64_t n_lo;
  std::int64_t n_hi;
  std::vector<ScanRecord> records;
  std::uint64_t prime_count;
  std::uint64_t composite_count;
};

/// Throws Error(EmptyRange) when n_lo > n_hi.
ScanReport scan(const QuadraticPolynomial& poly, std::int64_t n_lo, std::int64_t n_hi,
                unsigned threads = 1);
ScanReport scan(const FamilyParams& params, std::int64_t n_lo, std::int64_t n_hi,
                unsigned threads = 1);

/// Joins two reports of the same polynomial over adjacent ranges (in either
/// order). Throws Error(InvalidRange) when the ranges are not adjacent or the
/// polynomials differ.
ScanReport merge_reports(const ScanReport& first, const ScanReport& second);

struct SweepEntry {
  std::int64_t k;
  std::uint64_t prime_count;

  friend bool operator==(const SweepEntry&, const SweepEntry&) = default;
};

/// Prime counts of f_{Z,k,H} over [n_lo, n_hi], one entry per k in [k_lo, k_hi].
std::vector<SweepEntry> k_sweep(const BigInt& Z, HeegnerNumber H, std::int64_t k_lo,
                                std::int64_t k_hi, std::int64_t n_lo, std::int64_t n_hi,
                                unsigned threads = 1);

/// True iff value(n) == value(A - n) for every n whose mirror also lies in
/// the scanned range. Vacuously true when no mirror pair overlaps.
bool symmetry_check(const ScanReport& report);

enum class ExportFormat { Csv, Json };

/// CSV: header "n,value,is_prime" then one row per record.
/// JSON: object with params, polynomial, n_lo, n_hi, prime_count,
/// composite_count and records; big integers as decimal strings.
std::string export_report(const ScanReport& report, ExportFormat format);

/// Inverse of export_report(..., Json). Throws Error(ParseError),
/// Error(MissingField) or Error(InvariantViolation).
ScanReport parse_report_json(std::string_view text);

}  // namespace heegner
