#include "heegner/bateman_horn.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "heegner/density.hpp"
#include "heegner/error.hpp"
#include "heegner/parallel.hpp"
#include "heegner/primality.hpp"

namespace heegner {

namespace {

constexpr std::uint64_t kBruteForceOmegaBound = 13;
constexpr std::size_t kProductBlock = 4096;

int brute_force_omega(const QuadraticPolynomial& poly, std::uint64_t p) {
  const unsigned long a = mpz_fdiv_ui(poly.A().get_mpz_t(), p);
  const unsigned long b = mpz_fdiv_ui(poly.B().get_mpz_t(), p);
  int roots = 0;
  for (std::uint64_t n = 0; n < p; ++n) {
    // n^2 - a n + b with every term reduced; p <= 13 here so no overflow.
    if ((n * n + (p - a) * n + b) % p == 0) ++roots;
  }
  return roots;
}

int omega_unchecked(const QuadraticPolynomial& poly, std::uint64_t p) {
  if (p <= kBruteForceOmegaBound) return brute_force_omega(poly, p);
  const auto h = static_cast<std::uint64_t>(poly.H().value());
  if (h % p == 0) return 1;
  return 1 + jacobi_symbol(-static_cast<std::int64_t>(h), p);
}

// ln of a positive big integer without overflowing a double.
double ln_positive(const BigInt& value) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double fa, double fm, double fb, double whole,
                        double tolerance, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tolerance) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tolerance / 2, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tolerance / 2, depth - 1);
}

}  // namespace

int omega(const QuadraticPolynomial& poly, std::uint64_t p) {
  if (!is_prime(BigInt(static_cast<unsigned long>(p)))) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  return omega_unchecked(poly, p);
}

BatemanHornEstimate exact_constant(const QuadraticPolynomial& poly, std::uint64_t cutoff,
                                   unsigned threads) {
  if (cutoff < 1000) {
    throw Error(ErrorCode::DomainError, "exact_constant cutoff must be >= 1000");
  }
  if (omega_unchecked(poly, 2) == 2) {
    throw Error(ErrorCode::FixedPrimeDivisor,
                "every value of " + poly.to_string() + " is even; the product vanishes");
  }
  const std::vector<std::uint32_t> primes = sieve(cutoff);
  const std::size_t blocks = (primes.size() + kProductBlock - 1) / kProductBlock;
  std::vector<double> partial(blocks, 0.0);
  parallel_slices(blocks, threads, [&](std::size_t first, std::size_t last) {
    for (std::size_t blk = first; blk < last; ++blk) {
      const std::size_t end = std::min(primes.size(), (blk + 1) * kProductBlock);
      double sum = 0.0;
      for (std::size_t i = blk * kProductBlock; i < end; ++i) {
        const double p = primes[i];
        sum += std::log1p(-omega_unchecked(poly, primes[i]) / p) - std::log1p(-1.0 / p);
      }
      partial[blk] = sum;
    }
  });
  double log_product = 0.0;
  for (double s : partial) log_product += s;

  const double product = std::exp(log_product);
  return BatemanHornEstimate{product / 2.0, ExactProduct{cutoff, product}, std::nullopt,
                             std::nullopt};
}

double logarithmic_integral(double x) {
  if (!(x >= 2.0)) throw Error(ErrorCode::DomainError, "Li(x) requires x >= 2");
  if (x == 2.0) return 0.0;
  const auto integrand = [](double u) { return std::exp(u) / u; };
  const double a = std::log(2.0);
  const double b = std::log(x);
  const double fa = integrand(a);
  const double fb = integrand(b);
  const double fm = integrand(0.5 * (a + b));
  const double whole = simpson(fa, fm, fb, a, b);
  // Relative target 1e-10 on a rough magnitude keeps the result well inside 1e-6.
  const double tolerance = 1e-10 * std::max(1.0, x / b);
  return adaptive_simpson(integrand, a, b, fa, fm, fb, whole, tolerance, 60);
}

double expected_count_simple(double constant, double N) {
  if (!(N >= 3.0)) throw Error(ErrorCode::DomainError, "expected_count_simple requires N >= 3");
  return constant * N / std::log(N);
}

double expected_count_sum(const QuadraticPolynomial& poly, double constant, std::int64_t n_lo,
                          std::int64_t n_hi) {
  if (n_lo > n_hi) throw Error(ErrorCode::EmptyRange, "expected_count_sum: empty range");
  double sum = 0.0;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const BigInt value = evaluate(poly, BigInt(static_cast<long>(n)));
    if (value < 3) {
      throw Error(ErrorCode::ValueTooSmall,
                  "f(" + std::to_string(n) + ") = " + value.get_str() + " < 3");
    }
    sum += 1.0 / ln_positive(value);
  }
  return constant * sum;
}

ResidueCensus residue_census(HeegnerNumber H, std::uint64_t x) {
  if (x < 3) throw Error(ErrorCode::DomainError, "residue_census requires x >= 3");
  const auto h = static_cast<std::uint64_t>(H.value());
  std::uint64_t qr = 0;
  std::uint64_t nqr = 0;
  for (const std::uint32_t p : sieve(x)) {
    if (p == 2 || h % p == 0) continue;
    if (jacobi_symbol(-static_cast<std::int64_t>(h), p) == 1) {
      ++qr;
    } else {
      ++nqr;
    }
  }
  const std::uint64_t total = qr + nqr;
  const double delta =
      total == 0 ? 0.0
                 : static_cast<double>(qr > nqr ? qr - nqr : nqr - qr) / static_cast<double>(total);
  return ResidueCensus{H, x, qr, nqr, delta};
}

double approx_exponent_factor(std::uint64_t x) {
  if (x <= 10) throw Error(ErrorCode::DomainError, "approx_constant requires x > 10");
  return std::log10(std::log10(static_cast<double>(x))) + kFittedGamma;
}

BatemanHornEstimate approx_constant(double delta_p, std::uint64_t x) {
  if (!(delta_p >= 0.0 && delta_p <= 1.0)) {
    throw Error(ErrorCode::DomainError, "delta_p must lie in [0, 1]");
  }
  const double constant = std::exp(delta_p * approx_exponent_factor(x));
  return BatemanHornEstimate{constant, DeltaApprox{delta_p, x}, std::nullopt, std::nullopt};
}

RichnessReport richness_report(const QuadraticPolynomial& poly, std::int64_t n_lo,
                               std::int64_t n_hi, std::uint64_t cutoff, unsigned threads) {
  const ScanReport report = scan(poly, n_lo, n_hi, threads);
  BatemanHornEstimate estimate = exact_constant(poly, cutoff, threads);
  const double expected = expected_count_sum(poly, estimate.constant, n_lo, n_hi);
  estimate.expected_count = expected;
  estimate.range = std::make_pair(n_lo, n_hi);

  std::optional<double> simple;
  if (const double length = static_cast<double>(n_hi - n_lo + 1); length >= 3.0) {
    simple = expected_count_simple(estimate.constant, length);
  }
  return RichnessReport{report.prime_count, expected,
                        static_cast<double>(report.prime_count) / expected, simple, estimate};
}

}  // namespace heegner
