#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>

#include "heegner/heegner_number.hpp"
#include "heegner/polynomial.hpp"

namespace heegner {

/// Euler-Mascheroni constant. Kept for reference; the quadratic-residue
/// approximation uses the fitted kFittedGamma instead.
inline constexpr double kEulerGamma = 0.5772156649015329;

/// Fitted additive constant in log C ~ delta_p * (log10(log10 x) + gamma').
inline constexpr double kFittedGamma = 39.1751;

/// Reference residue imbalance for H = 163 (the census value at x = 6361);
/// used when the caller supplies it instead of running a census.
inline constexpr double kReferenceDeltaP = 0.03023;

inline constexpr std::uint64_t kDefaultCutoff = 1'000'000;

struct ExactProduct {
  std::uint64_t cutoff;
  /// prod_{p <= cutoff} (1 - omega(p)/p) / (1 - 1/p), p = 2 included.
  double euler_product;
};

struct DeltaApprox {
  double delta_p;
  std::uint64_t x;
};

/// `constant` is the coefficient of Li(N) (and of N / ln N) in the
/// prime-count prediction: the Euler product divided by deg f = 2.
struct BatemanHornEstimate {
  double constant;
  std::variant<ExactProduct, DeltaApprox> method;
  std::optional<double> expected_count;
  std::optional<std::pair<std::int64_t, std::int64_t>> range;
};

/// Number of distinct roots of f mod p.
/// p = 2 and p <= 13 are counted directly; otherwise 1 + (-H/p) for p not
/// dividing H and 1 (double root) for p | H.
/// Throws Error(NotPrime) when p is not prime.
int omega(const QuadraticPolynomial& poly, std::uint64_t p);

/// Truncated Euler product over p <= cutoff, accumulated as a sum of logs in
/// fixed-size prime blocks (so the result does not depend on `threads`).
/// Throws Error(DomainError) for cutoff < 1000 or above the sieve limit, and
/// Error(FixedPrimeDivisor) when every value of f is even (H = 7).
BatemanHornEstimate exact_constant(const QuadraticPolynomial& poly,
                                   std::uint64_t cutoff = kDefaultCutoff, unsigned threads = 1);

/// Li(x) = integral from 2 to x of dt / ln t by adaptive Simpson quadrature
/// in u = ln t. Throws Error(DomainError) for x < 2.
double logarithmic_integral(double x);

/// C N / ln N. Throws Error(DomainError) for N < 3.
double expected_count_simple(double constant, double N);

/// sum_{n = n_lo}^{n_hi} C / ln f(n). Throws Error(ValueTooSmall) if some
/// f(n) < 3 and Error(EmptyRange) when n_lo > n_hi.
double expected_count_sum(const QuadraticPolynomial& poly, double constant, std::int64_t n_lo,
                          std::int64_t n_hi);

struct ResidueCensus {
  HeegnerNumber H;
  std::uint64_t x;
  std::uint64_t qr_count;
  std::uint64_t nqr_count;
  double delta_p;  // |qr - nqr| / (qr + nqr)
};

/// Classifies odd primes p <= x with p not dividing H by (-H/p).
/// Throws Error(DomainError) for x < 3.
ResidueCensus residue_census(HeegnerNumber H, std::uint64_t x);

/// log10(log10 x) + kFittedGamma, the multiplier of delta_p.
double approx_exponent_factor(std::uint64_t x);

/// exp(delta_p * (log10(log10 x) + kFittedGamma)). Both logarithms are base
/// 10, which gives the factor 39.75528632 at x = 6361. Throws Error(DomainError) for x <= 10
/// or delta_p outside [0, 1].
BatemanHornEstimate approx_constant(double delta_p, std::uint64_t x);

struct RichnessReport {
  std::uint64_t actual;
  double expected;  // expected_count_sum with the exact constant
  double ratio;     // actual / expected
  std::optional<double> expected_simple;  // C N / ln N with N = range length
  BatemanHornEstimate estimate;
};

RichnessReport richness_report(const QuadraticPolynomial& poly, std::int64_t n_lo,
                               std::int64_t n_hi, std::uint64_t cutoff = kDefaultCutoff,
                               unsigned threads = 1);

}  // namespace heegner
