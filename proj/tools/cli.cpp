#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "heegner/bateman_horn.hpp"
#include "heegner/channels.hpp"
#include "heegner/density.hpp"
#include "heegner/error.hpp"
#include "heegner/keygen.hpp"
#include "heegner/optimizer.hpp"
#include "heegner/polynomial.hpp"
#include "heegner/primality.hpp"

namespace heegner::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return Format::Table;
}

unsigned resolve_threads(std::optional<unsigned> flag) {
  if (flag) return std::max(1u, *flag);
  if (const char* env = std::getenv("HEEGNER_FORGE_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value >= 1) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

SeededRandom make_rng(const std::optional<std::uint64_t>& seed) {
  return seed ? SeededRandom(*seed) : SeededRandom::from_entropy();
}

// ---------------------------------------------------------------------------
// Subcommand handlers. Each writes data to `out` in the requested format.

struct PolyArgs {
  std::string Z = "1";
  std::string k;
  int H = 163;

  FamilyParams params() const { return FamilyParams(parse_bigint(Z), parse_bigint(k), HeegnerNumber(H)); }
};

void run_scan(const PolyArgs& p, std::int64_t from, std::int64_t to, Format format,
              unsigned threads, std::ostream& out) {
  const ScanReport report = scan(p.params(), from, to, threads);
  switch (format) {
    case Format::Json: out << export_report(report, ExportFormat::Json); return;
    case Format::Csv: out << export_report(report, ExportFormat::Csv); return;
    case Format::Table: break;
  }
  fmt::print(out, "f(n) = {}  n in [{}, {}]\n", report.poly.to_string(), from, to);
  fmt::print(out, "{:>8}  {:>24}  {}\n", "n", "f(n)", "status");
  for (const auto& r : report.records) {
    fmt::print(out, "{:>8}  {:>24}  {}\n", r.n, to_decimal(r.value), r.is_prime ? "prime" : "composite");
  }
  fmt::print(out, "primes: {}  composites: {}  mirror-symmetric: {}\n", report.prime_count,
             report.composite_count, symmetry_check(report) ? "yes" : "no");
}

void run_sweep(const std::string& Z, int H, std::int64_t k_from, std::int64_t k_to,
               std::int64_t n_from, std::int64_t n_to, Format format, unsigned threads,
               std::ostream& out) {
  const BigInt z = parse_bigint(Z);
  const HeegnerNumber h(H);
  const auto entries = k_sweep(z, h, k_from, k_to, n_from, n_to, threads);
  std::uint64_t best = 0;
  for (const auto& e : entries) best = std::max(best, e.prime_count);

  const auto poly_of = [&](std::int64_t k) {
    return construct(FamilyParams(z, BigInt(static_cast<long>(k)), h));
  };
  if (format == Format::Csv) {
    out << "k,A,B,prime_count\n";
    for (const auto& e : entries) {
      const auto poly = poly_of(e.k);
      fmt::print(out, "{},{},{},{}\n", e.k, to_decimal(poly.A()), to_decimal(poly.B()), e.prime_count);
    }
  } else if (format == Format::Json) {
    json rows = json::array();
    json argmax = json::array();
    for (const auto& e : entries) {
      const auto poly = poly_of(e.k);
      rows.push_back({{"k", e.k},
                      {"A", to_decimal(poly.A())},
                      {"B", to_decimal(poly.B())},
                      {"prime_count", e.prime_count}});
      if (e.prime_count == best) argmax.push_back(e.k);
    }
    print_json(out, {{"Z", Z},
                     {"H", H},
                     {"n_from", n_from},
                     {"n_to", n_to},
                     {"entries", std::move(rows)},
                     {"max_prime_count", best},
                     {"argmax_k", std::move(argmax)}});
  } else {
    fmt::print(out, "{:>6}  {:<28}  {}\n", "k", "polynomial", "primes");
    for (const auto& e : entries) {
      fmt::print(out, "{:>6}  {:<28}  {}{}\n", e.k, poly_of(e.k).to_string(), e.prime_count,
                 e.prime_count == best ? "  *max" : "");
    }
  }
}

void run_constant(const PolyArgs& p, std::uint64_t cutoff, Format format, unsigned threads,
                  std::ostream& out) {
  const auto poly = construct(p.params());
  const auto estimate = exact_constant(poly, cutoff, threads);
  const auto& method = std::get<ExactProduct>(estimate.method);
  if (format == Format::Json) {
    print_json(out, {{"polynomial", poly.to_string()},
                     {"H", p.H},
                     {"cutoff", cutoff},
                     {"euler_product", method.euler_product},
                     {"constant", estimate.constant}});
  } else if (format == Format::Csv) {
    out << "polynomial,cutoff,euler_product,constant\n";
    fmt::print(out, "{},{},{:.12f},{:.12f}\n", poly.to_string(), cutoff, method.euler_product,
               estimate.constant);
  } else {
    fmt::print(out, "f(n) = {}\ncutoff: {}\nEuler product: {:.10f}\nconstant (product / deg f): {:.10f}\n",
               poly.to_string(), cutoff, method.euler_product, estimate.constant);
  }
}

void run_approx(int H, std::uint64_t x, std::optional<double> delta_override, Format format,
                std::ostream& out) {
  const auto census = residue_census(HeegnerNumber(H), x);
  const double delta = delta_override.value_or(census.delta_p);
  const auto estimate = approx_constant(delta, x);
  const double factor = approx_exponent_factor(x);
  if (format == Format::Json) {
    print_json(out, {{"H", H},
                     {"x", x},
                     {"qr_count", census.qr_count},
                     {"nqr_count", census.nqr_count},
                     {"delta_p_census", census.delta_p},
                     {"delta_p_used", delta},
                     {"delta_p_reference", kReferenceDeltaP},
                     {"exponent_factor", factor},
                     {"constant", estimate.constant}});
  } else if (format == Format::Csv) {
    out << "H,x,qr_count,nqr_count,delta_p_census,delta_p_used,exponent_factor,constant\n";
    fmt::print(out, "{},{},{},{},{:.10f},{:.10f},{:.8f},{:.9f}\n", H, x, census.qr_count,
               census.nqr_count, census.delta_p, delta, factor, estimate.constant);
  } else {
    fmt::print(out,
               "H = {}, x = {}\nQR primes: {}  NQR primes: {}\ndelta_p (census): {:.8f}\n"
               "delta_p (used): {:.8f}   reference: {}\nlog10(log10 x) + {}: {:.8f}\n"
               "approximate constant: {:.9f}\n",
               H, x, census.qr_count, census.nqr_count, census.delta_p, delta, kReferenceDeltaP,
               kFittedGamma, factor, estimate.constant);
  }
}

void run_richness(const PolyArgs& p, std::int64_t from, std::int64_t to, std::uint64_t cutoff,
                  Format format, unsigned threads, std::ostream& out) {
  const auto poly = construct(p.params());
  const auto r = richness_report(poly, from, to, cutoff, threads);
  if (format == Format::Json) {
    json doc{{"polynomial", poly.to_string()},
             {"n_from", from},
             {"n_to", to},
             {"cutoff", cutoff},
             {"constant", r.estimate.constant},
             {"actual", r.actual},
             {"expected_sum", r.expected},
             {"ratio", r.ratio}};
    doc["expected_simple"] = r.expected_simple ? json(*r.expected_simple) : json(nullptr);
    print_json(out, doc);
  } else if (format == Format::Csv) {
    out << "polynomial,n_from,n_to,constant,actual,expected_sum,expected_simple,ratio\n";
    fmt::print(out, "{},{},{},{:.8f},{},{:.4f},{},{:.6f}\n", poly.to_string(), from, to,
               r.estimate.constant, r.actual, r.expected,
               r.expected_simple ? fmt::format("{:.4f}", *r.expected_simple) : "", r.ratio);
  } else {
    fmt::print(out, "f(n) = {}  n in [{}, {}]\nconstant: {:.8f}\nactual primes: {}\n"
                    "expected (sum C/ln f(n)): {:.4f}\n",
               poly.to_string(), from, to, r.estimate.constant, r.actual, r.expected);
    if (r.expected_simple) fmt::print(out, "expected (C N / ln N): {:.4f}\n", *r.expected_simple);
    fmt::print(out, "actual / expected: {:.4f}\n", r.ratio);
  }
}

void run_optimize(std::int64_t from, std::int64_t to, int H, std::optional<std::int64_t> window,
                  Format format, unsigned threads, std::ostream& out) {
  const auto result = optimize(from, to, HeegnerNumber(H), window, threads);
  const auto score_json = [](const ZkScore& s) {
    return json{{"Zk", s.zk}, {"prime_count", s.prime_count}};
  };
  const auto n_total = static_cast<std::uint64_t>(to - from + 1);
  if (format == Format::Json) {
    json scores = json::array();
    for (const auto& s : result.candidate_scores) scores.push_back(score_json(s));
    json doc{{"n_from", from},
             {"n_to", to},
             {"H", H},
             {"candidates", result.candidates},
             {"candidate_scores", std::move(scores)},
             {"heuristic_best", score_json(result.best)}};
    if (result.sweep) {
      json sweep = json::array();
      for (const auto& s : *result.sweep) sweep.push_back(score_json(s));
      doc["sweep"] = std::move(sweep);
      doc["empirical_best"] = score_json(*result.empirical_best);
    }
    print_json(out, doc);
  } else if (format == Format::Csv) {
    out << "kind,Zk,prime_count,composite_count\n";
    for (const auto& s : result.candidate_scores) {
      fmt::print(out, "candidate,{},{},{}\n", s.zk, s.prime_count, n_total - s.prime_count);
    }
    if (result.sweep) {
      for (const auto& s : *result.sweep) {
        fmt::print(out, "sweep,{},{},{}\n", s.zk, s.prime_count, n_total - s.prime_count);
      }
    }
  } else {
    fmt::print(out, "range [{}, {}], H = {}\n", from, to, H);
    for (const auto& s : result.candidate_scores) {
      fmt::print(out, "candidate Zk = {:<6} {}  primes: {}  composites: {}\n", s.zk,
                 construct_from_zk(BigInt(static_cast<long>(s.zk)), HeegnerNumber(H)).to_string(),
                 s.prime_count, n_total - s.prime_count);
    }
    fmt::print(out, "heuristic optimum: Zk = {} ({} primes)\n", result.best.zk, result.best.prime_count);
    if (result.empirical_best) {
      fmt::print(out, "empirical optimum over the sweep: Zk = {} ({} primes)\n",
                 result.empirical_best->zk, result.empirical_best->prime_count);
    }
  }
}

struct KeygenArgs {
  int H = 163;
  std::size_t min_bits = 200;
  std::string z_lo = "10^80";
  std::string z_hi = "10^85";
  std::string k_lo = "10^80";
  std::string k_hi = "10^85";
  std::uint64_t max_attempts = 10'000;
  int mr_rounds = 40;
  bool paper_faithful = false;
  std::string out_file;
  bool public_only = false;
  std::optional<std::uint64_t> seed;
};

void run_keygen(const KeygenArgs& a, Format format, std::ostream& out, std::ostream& err) {
  KeygenConfig config;
  config.H = HeegnerNumber(a.H);
  config.min_bits = a.min_bits;
  config.z_range = {parse_bigint(a.z_lo), parse_bigint(a.z_hi)};
  config.k_range = {parse_bigint(a.k_lo), parse_bigint(a.k_hi)};
  config.max_attempts = a.max_attempts;
  config.mr_rounds = a.paper_faithful ? 1 : a.mr_rounds;
  config.rng_seed = a.seed;

  SeededRandom rng = make_rng(a.seed);
  const auto start = Clock::now();
  const StructuredKeyPair kp = generate_keypair(config, rng);
  fmt::print(err, "structured keygen: {:.2f} ms (Miller-Rabin rounds: {})\n", elapsed_ms(start),
             config.mr_rounds);

  bool secrets_on_stdout = !a.public_only;
  if (!a.out_file.empty()) {
    std::ofstream file(a.out_file);
    if (!file) throw Error(ErrorCode::DomainError, "cannot write " + a.out_file);
    file << serialize_keypair(kp, true);
    secrets_on_stdout = false;
  }

  if (format == Format::Json) {
    out << serialize_keypair(kp, secrets_on_stdout);
    return;
  }
  if (format == Format::Csv) {
    out << "field,value,bits\n";
    const auto row = [&](const char* name, const BigInt& v) {
      fmt::print(out, "{},{},{}\n", name, to_decimal(v), bit_length(v));
    };
    if (secrets_on_stdout) {
      row("Z1", kp.sp1.Z), row("k1", kp.sp1.k), row("p1", kp.sp1.p);
      row("Z2", kp.sp2.Z), row("k2", kp.sp2.k), row("p2", kp.sp2.p);
    }
    row("N", kp.N);
    return;
  }
  if (secrets_on_stdout) {
    fmt::print(out, "Z1 ({} bits): {}\nk1 ({} bits): {}\np1 ({} bits): {}\n", bit_length(kp.sp1.Z),
               to_decimal(kp.sp1.Z), bit_length(kp.sp1.k), to_decimal(kp.sp1.k),
               bit_length(kp.sp1.p), to_decimal(kp.sp1.p));
    fmt::print(out, "Z2 ({} bits): {}\nk2 ({} bits): {}\np2 ({} bits): {}\n", bit_length(kp.sp2.Z),
               to_decimal(kp.sp2.Z), bit_length(kp.sp2.k), to_decimal(kp.sp2.k),
               bit_length(kp.sp2.p), to_decimal(kp.sp2.p));
  }
  fmt::print(out, "H: {}\nN ({} bits): {}\n", a.H, bit_length(kp.N), to_decimal(kp.N));
}

void run_recover(const std::string& p, int H, Format format, std::ostream& out) {
  const BigInt prime = parse_bigint(p);
  const BigInt zk = recover_zk(prime, HeegnerNumber(H));
  if (format == Format::Json) {
    print_json(out, {{"p", p}, {"H", H}, {"Zk", to_decimal(zk)}});
  } else if (format == Format::Csv) {
    fmt::print(out, "p,H,Zk\n{},{},{}\n", p, H, to_decimal(zk));
  } else {
    fmt::print(out, "Zk = {}\n", to_decimal(zk));
  }
}

void run_channels(std::int64_t n2, int H, Format format, std::ostream& out) {
  const ChannelPlan plan = build_plan(n2, HeegnerNumber(H));
  if (format == Format::Json) {
    out << plan_to_json(plan);
    return;
  }
  const auto rows = frequency_report(plan);
  if (format == Format::Csv) {
    out << "low,high,frequency,is_prime\n";
    for (const auto& r : rows) {
      fmt::print(out, "{},{},{},{}\n", r.channels.first, r.channels.second, to_decimal(r.frequency),
                 r.is_prime ? "true" : "false");
    }
    return;
  }
  fmt::print(out, "n2 = {}, Zk = {}, f(n) = {}\n", plan.n2, plan.zk, plan.poly.to_string());
  fmt::print(out, "{:>10}  {:>16}  {}\n", "channels", "frequency", "status");
  for (const auto& r : rows) {
    fmt::print(out, "{:>10}  {:>16}  {}\n", fmt::format("({},{})", r.channels.first, r.channels.second),
               to_decimal(r.frequency), r.is_prime ? "prime" : "composite");
  }
}

void run_catalog(Format format, std::ostream& out) {
  const auto entries = famous_catalog();
  if (format == Format::Json) {
    json rows = json::array();
    for (const auto& e : entries) {
      rows.push_back({{"name", e.name},
                      {"Zk", to_decimal(e.params.zk())},
                      {"H", e.params.H.value()},
                      {"A", to_decimal(e.poly.A())},
                      {"B", to_decimal(e.poly.B())},
                      {"polynomial", e.poly.to_string()}});
    }
    print_json(out, rows);
  } else if (format == Format::Csv) {
    out << "name,Zk,H,A,B\n";
    for (const auto& e : entries) {
      fmt::print(out, "{},{},{},{},{}\n", e.name, to_decimal(e.params.zk()), e.params.H.value(),
                 to_decimal(e.poly.A()), to_decimal(e.poly.B()));
    }
  } else {
    for (const auto& e : entries) {
      fmt::print(out, "{:<18} Zk = {:<4} H = {:<4} {}\n", e.name, to_decimal(e.params.zk()),
                 e.params.H.value(), e.poly.to_string());
    }
  }
}

void run_baseline(std::size_t bits, const std::optional<std::uint64_t>& seed, Format format,
                  std::ostream& out, std::ostream& err) {
  SeededRandom rng = make_rng(seed);
  const auto start = Clock::now();
  const BigInt p1 = baseline_random_prime(bits, rng);
  BigInt p2 = baseline_random_prime(bits, rng);
  while (p2 == p1) p2 = baseline_random_prime(bits, rng);
  const BigInt n = p1 * p2;
  fmt::print(err, "baseline keygen: {:.2f} ms\n", elapsed_ms(start));

  if (format == Format::Json) {
    print_json(out, {{"bits", bits}, {"p1", to_decimal(p1)}, {"p2", to_decimal(p2)}, {"N", to_decimal(n)}});
  } else if (format == Format::Csv) {
    fmt::print(out, "field,value,bits\np1,{},{}\np2,{},{}\nN,{},{}\n", to_decimal(p1), bit_length(p1),
               to_decimal(p2), bit_length(p2), to_decimal(n), bit_length(n));
  } else {
    fmt::print(out, "p1 ({} bits): {}\np2 ({} bits): {}\nN ({} bits): {}\n", bit_length(p1),
               to_decimal(p1), bit_length(p2), to_decimal(p2), bit_length(n), to_decimal(n));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime-rich quadratic family toolkit", "heegner-forge"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  std::optional<unsigned> threads_flag;
  app.add_option("--output-format", format_name, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--threads", threads_flag, "worker threads (default $HEEGNER_FORGE_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  const auto add_poly = [](CLI::App* sub, PolyArgs& p) {
    sub->add_option("--Z", p.Z, "Z (decimal or 10^e)")->capture_default_str();
    sub->add_option("--k", p.k, "k (decimal or 10^e)")->required();
    sub->add_option("--H", p.H, "Heegner number")->capture_default_str();
  };

  PolyArgs scan_poly;
  std::int64_t scan_from = 0;
  std::int64_t scan_to = 0;
  auto* scan_cmd = app.add_subcommand("scan", "evaluate f over an n-range and test primality");
  add_poly(scan_cmd, scan_poly);
  scan_cmd->add_option("--from", scan_from)->required();
  scan_cmd->add_option("--to", scan_to)->required();

  std::string sweep_z = "1";
  int sweep_h = 163;
  std::int64_t k_from = 0, k_to = 0, n_from = 0, n_to = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "prime counts for every k in a range");
  sweep_cmd->add_option("--Z", sweep_z)->capture_default_str();
  sweep_cmd->add_option("--H", sweep_h)->capture_default_str();
  sweep_cmd->add_option("--k-from", k_from)->required();
  sweep_cmd->add_option("--k-to", k_to)->required();
  sweep_cmd->add_option("--n-from", n_from)->required();
  sweep_cmd->add_option("--n-to", n_to)->required();

  PolyArgs const_poly;
  std::uint64_t const_cutoff = kDefaultCutoff;
  auto* const_cmd = app.add_subcommand("constant", "truncated Bateman-Horn Euler product");
  add_poly(const_cmd, const_poly);
  const_cmd->add_option("--cutoff", const_cutoff)->capture_default_str();

  int approx_h = 163;
  std::uint64_t approx_x = 0;
  std::optional<double> delta_override;
  auto* approx_cmd = app.add_subcommand("approx", "quadratic-residue census and approximate constant");
  approx_cmd->add_option("--H", approx_h)->capture_default_str();
  approx_cmd->add_option("--x", approx_x)->required();
  approx_cmd->add_option("--delta-p", delta_override, "use this delta_p instead of the census value");

  PolyArgs rich_poly;
  std::int64_t rich_from = 0, rich_to = 0;
  std::uint64_t rich_cutoff = kDefaultCutoff;
  auto* rich_cmd = app.add_subcommand("richness", "actual versus expected prime counts");
  add_poly(rich_cmd, rich_poly);
  rich_cmd->add_option("--from", rich_from)->required();
  rich_cmd->add_option("--to", rich_to)->required();
  rich_cmd->add_option("--cutoff", rich_cutoff)->capture_default_str();

  std::int64_t opt_from = 0, opt_to = 0;
  int opt_h = 163;
  std::optional<std::int64_t> opt_window;
  auto* opt_cmd = app.add_subcommand("optimize", "choose Zk for an n-range");
  opt_cmd->add_option("--from", opt_from)->required();
  opt_cmd->add_option("--to", opt_to)->required();
  opt_cmd->add_option("--H", opt_h)->capture_default_str();
  opt_cmd->add_option("--sweep-window", opt_window, "also scan Zk within this distance of the pick");

  KeygenArgs kg;
  auto* kg_cmd = app.add_subcommand("keygen", "structured prime key pair");
  kg_cmd->add_option("--H", kg.H)->capture_default_str();
  kg_cmd->add_option("--min-bits", kg.min_bits)->capture_default_str();
  kg_cmd->add_option("--z-lo", kg.z_lo)->capture_default_str();
  kg_cmd->add_option("--z-hi", kg.z_hi)->capture_default_str();
  kg_cmd->add_option("--k-lo", kg.k_lo)->capture_default_str();
  kg_cmd->add_option("--k-hi", kg.k_hi)->capture_default_str();
  kg_cmd->add_option("--max-attempts", kg.max_attempts)->capture_default_str();
  kg_cmd->add_option("--mr-rounds", kg.mr_rounds)->capture_default_str();
  kg_cmd->add_flag("--paper-faithful", kg.paper_faithful, "single Miller-Rabin round per candidate");
  kg_cmd->add_option("--out", kg.out_file, "write the secret key document here");
  kg_cmd->add_flag("--public-only", kg.public_only, "print only {H, N}");
  kg_cmd->add_option("--seed", kg.seed);

  std::string rec_p;
  int rec_h = 163;
  auto* rec_cmd = app.add_subcommand("recover", "recover the product Zk from a structured prime");
  rec_cmd->add_option("--p", rec_p)->required();
  rec_cmd->add_option("--H", rec_h)->capture_default_str();

  std::int64_t ch_n2 = 0;
  int ch_h = 163;
  auto* ch_cmd = app.add_subcommand("channels", "symmetric channel to frequency plan");
  ch_cmd->add_option("--n2", ch_n2)->required();
  ch_cmd->add_option("--H", ch_h)->capture_default_str();

  auto* cat_cmd = app.add_subcommand("catalog", "historical members of the family");

  std::size_t base_bits = 0;
  std::optional<std::uint64_t> base_seed;
  auto* base_cmd = app.add_subcommand("baseline", "naive random-prime key pair for timing");
  base_cmd->add_option("--bits", base_bits)->required();
  base_cmd->add_option("--seed", base_seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  const Format format = parse_format(format_name);
  const unsigned threads = resolve_threads(threads_flag);
  try {
    if (scan_cmd->parsed()) {
      run_scan(scan_poly, scan_from, scan_to, format, threads, out);
    } else if (sweep_cmd->parsed()) {
      run_sweep(sweep_z, sweep_h, k_from, k_to, n_from, n_to, format, threads, out);
    } else if (const_cmd->parsed()) {
      run_constant(const_poly, const_cutoff, format, threads, out);
    } else if (approx_cmd->parsed()) {
      run_approx(approx_h, approx_x, delta_override, format, out);
    } else if (rich_cmd->parsed()) {
      run_richness(rich_poly, rich_from, rich_to, rich_cutoff, format, threads, out);
    } else if (opt_cmd->parsed()) {
      run_optimize(opt_from, opt_to, opt_h, opt_window, format, threads, out);
    } else if (kg_cmd->parsed()) {
      run_keygen(kg, format, out, err);
    } else if (rec_cmd->parsed()) {
      run_recover(rec_p, rec_h, format, out);
    } else if (ch_cmd->parsed()) {
      run_channels(ch_n2, ch_h, format, out);
    } else if (cat_cmd->parsed()) {
      run_catalog(format, out);
    } else if (base_cmd->parsed()) {
      run_baseline(base_bits, base_seed, format, out, err);
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace heegner::cli
