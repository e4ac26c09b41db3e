#include "heegner/primality.hpp"

#include <array>
#include <string>

#include "heegner/error.hpp"

namespace heegner {

namespace {

constexpr std::array<unsigned long, 13> kSmallPrimeBases = {2,  3,  5,  7,  11, 13, 17,
                                                            19, 23, 29, 31, 37, 41};

// Sorenson & Webster: bases 2..41 are deterministic below this bound.
const BigInt& deterministic_bound() {
  static const BigInt bound("3317044064679887385961981", 10);
  return bound;
}

void require_odd_above_two(const BigInt& n, const char* who) {
  if (n <= 2 || mpz_even_p(n.get_mpz_t())) {
    throw Error(ErrorCode::DomainError,
                std::string(who) + " requires an odd n > 2, got " + n.get_str());
  }
}

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// Binary Jacobi algorithm on 0 <= a < n, n odd.
template <typename Int, typename IsEven, typename Mod8, typename Swap>
int jacobi_loop(Int a, Int n, IsEven is_even, Mod8 mod8, Swap mod4_both_three) {
  int result = 1;
  while (a != 0) {
    while (is_even(a)) {
      a /= 2;
      const auto r = mod8(n);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (mod4_both_three(a, n)) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

int jacobi_symbol(const BigInt& a, const BigInt& n) {
  if (sgn(n) < 1) throw Error(ErrorCode::DomainError, "Jacobi modulus must be >= 1");
  if (mpz_even_p(n.get_mpz_t())) {
    throw Error(ErrorCode::EvenModulus, "Jacobi symbol undefined for even n = " + n.get_str());
  }
  BigInt reduced;
  mpz_fdiv_r(reduced.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return jacobi_loop(
      reduced, n, [](const BigInt& v) { return mpz_even_p(v.get_mpz_t()) != 0; },
      [](const BigInt& v) { return mpz_fdiv_ui(v.get_mpz_t(), 8); },
      [](const BigInt& x, const BigInt& y) {
        return mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(y.get_mpz_t(), 4) == 3;
      });
}

int jacobi_symbol(std::int64_t a, std::uint64_t n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "Jacobi modulus must be >= 1");
  if (n % 2 == 0) {
    throw Error(ErrorCode::EvenModulus, "Jacobi symbol undefined for even n = " + std::to_string(n));
  }
  std::uint64_t reduced;
  if (a >= 0) {
    reduced = static_cast<std::uint64_t>(a) % n;
  } else {
    const std::uint64_t mag = static_cast<std::uint64_t>(-(a + 1)) + 1;
    reduced = (n - mag % n) % n;
  }
  return jacobi_loop(
      reduced, n, [](std::uint64_t v) { return v % 2 == 0; },
      [](std::uint64_t v) { return v % 8; },
      [](std::uint64_t x, std::uint64_t y) { return x % 4 == 3 && y % 4 == 3; });
}

bool strong_probable_prime(const BigInt& n, const BigInt& base) {
  const BigInt n_minus_1 = n - 1;
  // n - 1 = 2^r d with d odd.
  const mp_bitcnt_t r = mpz_scan1(n_minus_1.get_mpz_t(), 0);
  BigInt d;
  mpz_fdiv_q_2exp(d.get_mpz_t(), n_minus_1.get_mpz_t(), r);

  BigInt x = powm(base, d, n);
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

PrimalityVerdict miller_rabin(const BigInt& n, int rounds, RandomSource& rng) {
  require_odd_above_two(n, "miller_rabin");
  if (rounds < 1) throw Error(ErrorCode::DomainError, "miller_rabin needs rounds >= 1");
  if (n == 3) return {Verdict::ProbablePrime, std::nullopt};
  const BigInt hi = n - 2;
  for (int i = 0; i < rounds; ++i) {
    BigInt base = rng.uniform(BigInt(2), hi);
    if (!strong_probable_prime(n, base)) return {Verdict::Composite, std::move(base)};
  }
  return {Verdict::ProbablePrime, std::nullopt};
}

PrimalityVerdict miller_rabin_bases(const BigInt& n, std::span<const BigInt> bases) {
  require_odd_above_two(n, "miller_rabin_bases");
  for (const auto& raw : bases) {
    BigInt base = raw % n;
    // Bases congruent to 0, 1 or -1 carry no information.
    if (base < 2 || base > n - 2) continue;
    if (!strong_probable_prime(n, base)) return {Verdict::Composite, std::move(base)};
  }
  return {Verdict::ProbablePrime, std::nullopt};
}

PrimalityVerdict fermat_test(const BigInt& n, const BigInt& base) {
  if (n <= 2) throw Error(ErrorCode::DomainError, "fermat_test requires n > 2");
  if (base <= 1 || base >= n - 1) {
    throw Error(ErrorCode::BaseOutOfRange,
                "base " + base.get_str() + " outside (1, " + BigInt(n - 1).get_str() + ")");
  }
  if (powm(base, n - 1, n) != 1) return {Verdict::Composite, base};
  return {Verdict::ProbablePrime, std::nullopt};
}

PrimalityVerdict solovay_strassen(const BigInt& n, int rounds, RandomSource& rng) {
  require_odd_above_two(n, "solovay_strassen");
  if (rounds < 1) throw Error(ErrorCode::DomainError, "solovay_strassen needs rounds >= 1");
  const BigInt exponent = (n - 1) / 2;
  for (int i = 0; i < rounds; ++i) {
    BigInt a = rng.uniform(BigInt(2), n - 1);
    const int symbol = jacobi_symbol(a, n);
    if (symbol == 0) return {Verdict::Composite, std::move(a)};
    const BigInt expected = symbol == 1 ? BigInt(1) : BigInt(n - 1);
    if (powm(a, exponent, n) != expected) return {Verdict::Composite, std::move(a)};
  }
  return {Verdict::ProbablePrime, std::nullopt};
}

PrimalityVerdict wilson_oracle(std::uint64_t n) {
  if (n < 2 || n > kWilsonLimit) {
    throw Error(ErrorCode::OutOfOracleRange,
                "wilson_oracle covers [2, " + std::to_string(kWilsonLimit) + "], got " +
                    std::to_string(n));
  }
  std::uint64_t factorial = 1;
  for (std::uint64_t i = 2; i < n; ++i) factorial = factorial * i % n;
  if ((factorial + 1) % n == 0) return {Verdict::ProvenPrime, std::nullopt};

  std::uint64_t factor = 2;
  while (n % factor != 0) ++factor;
  return {Verdict::Composite, BigInt(static_cast<unsigned long>(factor))};
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (const unsigned long p : kSmallPrimeBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  // No prime factor <= 41, so n < 43^2 is prime.
  if (n < 43 * 43) return true;

  for (const unsigned long base : kSmallPrimeBases) {
    if (!strong_probable_prime(n, BigInt(base))) return false;
  }
  if (n < deterministic_bound()) return true;

  SeededRandom rng(0x9e3779b97f4a7c15ULL);
  return !miller_rabin(n, 64, rng).composite();
}

std::vector<std::uint32_t> sieve(std::uint64_t limit) {
  if (limit > kSieveLimit) {
    throw Error(ErrorCode::LimitTooLarge,
                "sieve limit " + std::to_string(limit) + " exceeds " + std::to_string(kSieveLimit));
  }
  if (limit < 2) throw Error(ErrorCode::DomainError, "sieve limit must be >= 2");

  // composite[i] describes the odd number 2i + 1.
  std::vector<bool> composite(limit / 2 + 1, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[m / 2] = true;
  }

  std::vector<std::uint32_t> primes{2};
  for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i) {
    if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(2 * i + 1));
  }
  return primes;
}

}  // namespace heegner
