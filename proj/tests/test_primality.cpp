#include <doctest.h>

#include <algorithm>
#include <vector>

#include "heegner/primality.hpp"
#include "heegner/random.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace heegner;

TEST_CASE("jacobi_symbol examples") {
  for (long a : {-163L, 0L, 1L, 2L, 12345L}) CHECK(jacobi_symbol(BigInt(a), BigInt(1)) == 1);

  // x^2 = -163 (mod 41) is solvable: search [0, 40].
  bool has_root = false;
  for (long x = 0; x < 41; ++x) has_root |= ((x * x + 163) % 41 == 0);
  REQUIRE(has_root);
  CHECK(jacobi_symbol(BigInt(-163), BigInt(41)) == 1);
  CHECK(jacobi_symbol(std::int64_t{-163}, std::uint64_t{41}) == 1);

  REQUIRE(oracle::jacobi_by_definition(2, 15) == 1);
  CHECK(jacobi_symbol(BigInt(2), BigInt(15)) == 1);

  CHECK_ERROR_CODE(jacobi_symbol(BigInt(3), BigInt(10)), ErrorCode::EvenModulus);
  CHECK_ERROR_CODE(jacobi_symbol(std::int64_t{3}, std::uint64_t{10}), ErrorCode::EvenModulus);
  CHECK_ERROR_CODE(jacobi_symbol(BigInt(3), BigInt(-5)), ErrorCode::DomainError);
}

TEST_CASE("jacobi_symbol matches its definition") {
  for (std::uint64_t n = 1; n < 400; n += 2) {
    for (std::int64_t a = -60; a <= 60; ++a) {
      const int expected = oracle::jacobi_by_definition(a, n);
      CHECK(jacobi_symbol(a, n) == expected);
      CHECK(jacobi_symbol(BigInt(static_cast<long>(a)), BigInt(static_cast<unsigned long>(n))) ==
            expected);
    }
  }
}

TEST_CASE("jacobi_symbol is completely multiplicative") {
  SeededRandom rng(11);
  for (int i = 0; i < 2000; ++i) {
    const BigInt a = rng.uniform(BigInt(-100000), BigInt(100000));
    const BigInt b = rng.uniform(BigInt(-100000), BigInt(100000));
    const BigInt n = 2 * rng.uniform(BigInt(0), BigInt(50000)) + 1;
    const BigInt m = 2 * rng.uniform(BigInt(0), BigInt(50000)) + 1;
    CHECK(jacobi_symbol(a * b, n) == jacobi_symbol(a, n) * jacobi_symbol(b, n));
    CHECK(jacobi_symbol(a, n * m) == jacobi_symbol(a, n) * jacobi_symbol(a, m));
  }
}

TEST_CASE("Euler's criterion on primes below 1000") {
  for (const auto p : sieve(1000)) {
    if (p == 2) continue;
    for (std::int64_t a = 1; a < 200; ++a) {
      if (a % p == 0) continue;
      const auto power = oracle::pow_mod(static_cast<std::uint64_t>(a), (p - 1) / 2, p);
      const int expected = power == 1 ? 1 : -1;
      REQUIRE((power == 1 || power == p - 1));
      CHECK(jacobi_symbol(a, p) == expected);
    }
  }
}

TEST_CASE("miller_rabin") {
  SeededRandom rng(5);
  CHECK(miller_rabin(BigInt(41), 1, rng).verdict == Verdict::ProbablePrime);
  CHECK(miller_rabin(BigInt(41), 40, rng).verdict == Verdict::ProbablePrime);
  CHECK(miller_rabin(BigInt(3), 5, rng).verdict == Verdict::ProbablePrime);

  const auto square = miller_rabin(BigInt(1681), 10, rng);
  CHECK(square.composite());
  CHECK(square.witness.has_value());

  // 2047 = 23 * 89 is a strong pseudoprime to base 2 only.
  const BigInt two[] = {BigInt(2)};
  CHECK(strong_probable_prime(BigInt(2047), BigInt(2)));
  CHECK(miller_rabin_bases(BigInt(2047), two).verdict == Verdict::ProbablePrime);
  const BigInt two_three[] = {BigInt(2), BigInt(3)};
  const auto exposed = miller_rabin_bases(BigInt(2047), two_three);
  CHECK(exposed.composite());
  CHECK(*exposed.witness == 3);
  CHECK(miller_rabin(BigInt(2047), 20, rng).composite());

  CHECK_ERROR_CODE(miller_rabin(BigInt(10), 1, rng), ErrorCode::DomainError);
  CHECK_ERROR_CODE(miller_rabin(BigInt(2), 1, rng), ErrorCode::DomainError);
  CHECK_ERROR_CODE(miller_rabin(BigInt(41), 0, rng), ErrorCode::DomainError);
}

TEST_CASE("miller_rabin never rejects a prime below 10^5") {
  SeededRandom rng(17);
  for (const auto p : sieve(100'000)) {
    if (p < 3) continue;
    CHECK_FALSE(miller_rabin(BigInt(static_cast<unsigned long>(p)), 5, rng).composite());
  }
}

TEST_CASE("fermat_test") {
  CHECK(fermat_test(BigInt(41), BigInt(2)).verdict == Verdict::ProbablePrime);
  REQUIRE(oracle::pow_mod(2, 340, 341) == 1);
  CHECK(fermat_test(BigInt(341), BigInt(2)).verdict == Verdict::ProbablePrime);
  REQUIRE(oracle::pow_mod(2, 14, 15) == 4);
  const auto v = fermat_test(BigInt(15), BigInt(2));
  CHECK(v.composite());
  CHECK(*v.witness == 2);

  CHECK_ERROR_CODE(fermat_test(BigInt(41), BigInt(1)), ErrorCode::BaseOutOfRange);
  CHECK_ERROR_CODE(fermat_test(BigInt(41), BigInt(40)), ErrorCode::BaseOutOfRange);
  CHECK_ERROR_CODE(fermat_test(BigInt(2), BigInt(1)), ErrorCode::DomainError);
}

TEST_CASE("solovay_strassen") {
  SeededRandom rng(23);
  CHECK(solovay_strassen(BigInt(41), 10, rng).verdict == Verdict::ProbablePrime);
  CHECK(solovay_strassen(BigInt(1763), 20, rng).composite());
  // 561 is a Carmichael number; Euler-Jacobi catches it.
  CHECK(solovay_strassen(BigInt(561), 20, rng).composite());
  CHECK_ERROR_CODE(solovay_strassen(BigInt(100), 3, rng), ErrorCode::DomainError);
}

TEST_CASE("solovay_strassen and miller_rabin agree on odd n below 10^4") {
  SeededRandom rng(29);
  const auto flags = oracle::prime_flags(10'000);
  for (unsigned long n = 3; n < 10'000; n += 2) {
    const bool mr = !miller_rabin(BigInt(n), 20, rng).composite();
    const bool ss = !solovay_strassen(BigInt(n), 30, rng).composite();
    CHECK(mr == ss);
    CHECK(mr == static_cast<bool>(flags[n]));
  }
}

TEST_CASE("wilson_oracle") {
  CHECK(wilson_oracle(41).verdict == Verdict::ProvenPrime);
  const auto v = wilson_oracle(4331);
  CHECK(v.composite());
  CHECK(*v.witness == 61);  // 4331 = 61 * 71
  CHECK(wilson_oracle(2).verdict == Verdict::ProvenPrime);
  CHECK(wilson_oracle(4).composite());
  CHECK_ERROR_CODE(wilson_oracle(10'001), ErrorCode::OutOfOracleRange);
  CHECK_ERROR_CODE(wilson_oracle(1), ErrorCode::OutOfOracleRange);
}

TEST_CASE("is_prime, wilson_oracle and sieve agree on [2, 10^4]") {
  const auto primes = sieve(10'000);
  std::vector<bool> in_sieve(10'001, false);
  for (auto p : primes) in_sieve[p] = true;
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    const bool wilson = wilson_oracle(n).verdict == Verdict::ProvenPrime;
    CHECK(is_prime(BigInt(static_cast<unsigned long>(n))) == wilson);
    CHECK(in_sieve[n] == wilson);
  }
}

TEST_CASE("is_prime") {
  CHECK(is_prime(BigInt(6361)));
  CHECK_FALSE(is_prime(BigInt(5893)));
  CHECK_FALSE(is_prime(BigInt(0)));
  CHECK_FALSE(is_prime(BigInt(1)));
  CHECK_FALSE(is_prime(BigInt(-7)));
  CHECK(is_prime(BigInt(2)));
  CHECK_FALSE(is_prime(BigInt(561)));
  // Strong pseudoprime to every prime base up to 37.
  CHECK_FALSE(is_prime(BigInt("318665857834031151167461", 10)));
  CHECK_FALSE(is_prime(BigInt("3825123056546413051", 10)));
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727", 10)));  // 2^127 - 1
  // Above the deterministic bound.
  const BigInt m89 = (BigInt(1) << 89) - 1;
  const BigInt m61 = (BigInt(1) << 61) - 1;
  CHECK(is_prime(m89));
  CHECK_FALSE(is_prime(m89 * m61));
  CHECK_FALSE(is_prime(m89 * m89));
}

TEST_CASE("is_prime matches trial division on random 40-bit integers") {
  SeededRandom rng(31);
  for (int i = 0; i < 3000; ++i) {
    const BigInt n = rng.uniform(BigInt(0), BigInt(1UL << 40));
    CHECK(is_prime(n) == oracle::trial_division_is_prime(n.get_ui()));
  }
}

TEST_CASE("sieve") {
  CHECK(sieve(10) == std::vector<std::uint32_t>{2, 3, 5, 7});
  CHECK(sieve(2) == std::vector<std::uint32_t>{2});
  CHECK(sieve(1'000'000).size() == 78498);

  const auto flags = oracle::prime_flags(200'000);
  const auto primes = sieve(200'000);
  CHECK(static_cast<std::size_t>(std::count(flags.begin(), flags.end(), 1)) == primes.size());
  for (auto p : primes) CHECK(flags[p] == 1);

  CHECK_ERROR_CODE(sieve(100'000'001), ErrorCode::LimitTooLarge);
  CHECK_ERROR_CODE(sieve(1), ErrorCode::DomainError);
}
