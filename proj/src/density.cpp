#include "heegner/density.hpp"

#include <algorithm>
#include <unordered_map>

#include <json.hpp>

#include "heegner/error.hpp"
#include "heegner/parallel.hpp"
#include "heegner/primality.hpp"

namespace heegner {

using nlohmann::json;

namespace {

void tally(ScanReport& report) {
  report.prime_count = static_cast<std::uint64_t>(
      std::count_if(report.records.begin(), report.records.end(),
                    [](const ScanRecord& r) { return r.is_prime; }));
  report.composite_count = report.records.size() - report.prime_count;
}

}  // namespace

ScanReport scan(const QuadraticPolynomial& poly, std::int64_t n_lo, std::int64_t n_hi,
                unsigned threads) {
  if (n_lo > n_hi) {
    throw Error(ErrorCode::EmptyRange, "scan range [" + std::to_string(n_lo) + ", " +
                                           std::to_string(n_hi) + "] is empty");
  }
  const auto count = static_cast<std::size_t>(n_hi - n_lo) + 1;
  std::vector<ScanRecord> records(count);
  parallel_slices(count, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::int64_t n = n_lo + static_cast<std::int64_t>(i);
      BigInt value = evaluate(poly, BigInt(static_cast<long>(n)));
      const bool prime = is_prime(value);
      records[i] = ScanRecord{n, std::move(value), prime};
    }
  });
  ScanReport report{poly, std::nullopt, n_lo, n_hi, std::move(records), 0, 0};
  tally(report);
  return report;
}

ScanReport scan(const FamilyParams& params, std::int64_t n_lo, std::int64_t n_hi,
                unsigned threads) {
  ScanReport report = scan(construct(params), n_lo, n_hi, threads);
  report.params = params;
  return report;
}

ScanReport merge_reports(const ScanReport& first, const ScanReport& second) {
  if (!(first.poly == second.poly)) {
    throw Error(ErrorCode::InvalidRange, "cannot merge scans of different polynomials");
  }
  const ScanReport* lower = &first;
  const ScanReport* upper = &second;
  if (upper->n_lo < lower->n_lo) std::swap(lower, upper);
  if (lower->n_hi + 1 != upper->n_lo) {
    throw Error(ErrorCode::InvalidRange, "merged scan ranges must be adjacent");
  }
  ScanReport merged = *lower;
  merged.n_hi = upper->n_hi;
  merged.records.insert(merged.records.end(), upper->records.begin(), upper->records.end());
  if (!merged.params) merged.params = upper->params;
  tally(merged);
  return merged;
}

std::vector<SweepEntry> k_sweep(const BigInt& Z, HeegnerNumber H, std::int64_t k_lo,
                                std::int64_t k_hi, std::int64_t n_lo, std::int64_t n_hi,
                                unsigned threads) {
  if (k_lo > k_hi) {
    throw Error(ErrorCode::EmptyRange, "k range [" + std::to_string(k_lo) + ", " +
                                           std::to_string(k_hi) + "] is empty");
  }
  // Fail fast on a non-constructible H before spawning work.
  construct(FamilyParams(Z, BigInt(static_cast<long>(k_lo)), H));

  const auto count = static_cast<std::size_t>(k_hi - k_lo) + 1;
  std::vector<SweepEntry> entries(count);
  parallel_slices(count, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::int64_t k = k_lo + static_cast<std::int64_t>(i);
      const auto report = scan(FamilyParams(Z, BigInt(static_cast<long>(k)), H), n_lo, n_hi);
      entries[i] = SweepEntry{k, report.prime_count};
    }
  });
  return entries;
}

bool symmetry_check(const ScanReport& report) {
  std::unordered_map<std::int64_t, const BigInt*> by_n;
  by_n.reserve(report.records.size());
  for (const auto& r : report.records) by_n.emplace(r.n, &r.value);

  for (const auto& r : report.records) {
    const BigInt mirror = mirror_index(report.poly, BigInt(static_cast<long>(r.n)));
    if (!mirror.fits_slong_p()) continue;
    const auto it = by_n.find(mirror.get_si());
    if (it != by_n.end() && *it->second != r.value) return false;
  }
  return true;
}

namespace {

json params_json(const ScanReport& report) {
  if (!report.params) return nullptr;
  return json{{"Z", to_decimal(report.params->Z)},
              {"k", to_decimal(report.params->k)},
              {"H", report.params->H.value()}};
}

template <typename T>
T require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::MissingField, std::string("missing '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string export_report(const ScanReport& report, ExportFormat format) {
  if (format == ExportFormat::Csv) {
    std::string out = "n,value,is_prime\n";
    for (const auto& r : report.records) {
      out += std::to_string(r.n) + ',' + to_decimal(r.value) + ',' +
             (r.is_prime ? "true" : "false") + '\n';
    }
    return out;
  }

  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back({{"n", r.n}, {"value", to_decimal(r.value)}, {"is_prime", r.is_prime}});
  }
  json doc{{"params", params_json(report)},
           {"polynomial",
            {{"A", to_decimal(report.poly.A())},
             {"B", to_decimal(report.poly.B())},
             {"H", report.poly.H().value()}}},
           {"n_lo", report.n_lo},
           {"n_hi", report.n_hi},
           {"prime_count", report.prime_count},
           {"composite_count", report.composite_count},
           {"records", std::move(records)}};
  return doc.dump(2) + '\n';
}

ScanReport parse_report_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "report must be a JSON object");

  const json poly_doc = require<json>(doc, "polynomial");
  const BigInt A = parse_bigint(require<std::string>(poly_doc, "A"));
  const BigInt B = parse_bigint(require<std::string>(poly_doc, "B"));
  const HeegnerNumber H(require<int>(poly_doc, "H"));
  if (mpz_even_p(A.get_mpz_t())) throw Error(ErrorCode::InvariantViolation, "A must be odd");
  const QuadraticPolynomial poly = construct_from_zk((A + 1) / 2, H);
  if (poly.B() != B) throw Error(ErrorCode::InvariantViolation, "4B != A^2 + H");

  std::optional<FamilyParams> params;
  if (const json p = require<json>(doc, "params"); !p.is_null()) {
    params.emplace(parse_bigint(require<std::string>(p, "Z")),
                   parse_bigint(require<std::string>(p, "k")), HeegnerNumber(require<int>(p, "H")));
    if (!(construct(*params) == poly)) {
      throw Error(ErrorCode::InvariantViolation, "params do not generate the stated polynomial");
    }
  }

  ScanReport report{poly,
                    params,
                    require<std::int64_t>(doc, "n_lo"),
                    require<std::int64_t>(doc, "n_hi"),
                    {},
                    require<std::uint64_t>(doc, "prime_count"),
                    require<std::uint64_t>(doc, "composite_count")};
  for (const auto& r : require<json>(doc, "records")) {
    report.records.push_back(ScanRecord{require<std::int64_t>(r, "n"),
                                        parse_bigint(require<std::string>(r, "value")),
                                        require<bool>(r, "is_prime")});
  }

  const auto expected = static_cast<std::uint64_t>(report.n_hi - report.n_lo + 1);
  if (report.n_lo > report.n_hi || report.records.size() != expected ||
      report.prime_count + report.composite_count != expected) {
    throw Error(ErrorCode::InvariantViolation, "record count does not match the range");
  }
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    if (r.n != report.n_lo + static_cast<std::int64_t>(i) ||
        r.value != evaluate(poly, BigInt(static_cast<long>(r.n)))) {
      throw Error(ErrorCode::InvariantViolation, "record " + std::to_string(i) + " is inconsistent");
    }
  }
  return report;
}

}  // namespace heegner
