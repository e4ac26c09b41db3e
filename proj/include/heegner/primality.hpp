#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "heegner/bigint.hpp"
#include "heegner/random.hpp"

namespace heegner {

enum class Verdict { Composite, ProbablePrime, ProvenPrime };

struct PrimalityVerdict {
  Verdict verdict;
  /// For Composite: the base that exposed compositeness, or a nontrivial
  /// factor when the verdict came from trial division.
  std::optional<BigInt> witness;

  bool composite() const noexcept { return verdict == Verdict::Composite; }
};

/// Jacobi symbol (a/n) for odd n >= 1. Negative a is reduced mod n first.
/// Throws Error(EvenModulus) for even n and Error(DomainError) for n < 1.
int jacobi_symbol(const BigInt& a, const BigInt& n);
int jacobi_symbol(std::int64_t a, std::uint64_t n);

/// One Miller-Rabin round: true when n is a strong probable prime to base.
/// Requires n odd > 2 and 2 <= base <= n - 2.
bool strong_probable_prime(const BigInt& n, const BigInt& base);

/// Miller-Rabin with `rounds` uniformly random bases in [2, n-2].
/// Requires n odd > 2 and rounds >= 1 (Error(DomainError) otherwise).
PrimalityVerdict miller_rabin(const BigInt& n, int rounds, RandomSource& rng);

/// Miller-Rabin over a caller-chosen list of bases (each reduced into range).
PrimalityVerdict miller_rabin_bases(const BigInt& n, std::span<const BigInt> bases);

/// a^(n-1) mod n == 1. Requires n > 2 and 1 < base < n - 1
/// (Error(BaseOutOfRange) otherwise).
PrimalityVerdict fermat_test(const BigInt& n, const BigInt& base);

/// Euler-criterion test against the Jacobi symbol with random bases in [2, n-1].
PrimalityVerdict solovay_strassen(const BigInt& n, int rounds, RandomSource& rng);

inline constexpr std::uint64_t kWilsonLimit = 10'000;

/// Exact verdict from (n-1)! = -1 (mod n). Returns ProvenPrime or Composite
/// (with the smallest prime factor as witness). Also covers Lagrange's
/// formulation, which is the same congruence.
/// Throws Error(OutOfOracleRange) outside [2, kWilsonLimit].
PrimalityVerdict wilson_oracle(std::uint64_t n);

/// Deterministic below kDeterministicBound (Miller-Rabin with the first
/// thirteen prime bases), otherwise those bases plus 64 fixed-seed random
/// rounds.
bool is_prime(const BigInt& n);

inline constexpr std::uint64_t kSieveLimit = 100'000'000;

/// All primes <= limit in increasing order.
/// Throws Error(LimitTooLarge) above kSieveLimit and Error(DomainError) below 2.
std::vector<std::uint32_t> sieve(std::uint64_t limit);

}  // namespace heegner
