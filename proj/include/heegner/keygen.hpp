#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "heegner/bigint.hpp"
#include "heegner/heegner_number.hpp"
#include "heegner/random.hpp"

namespace heegner {

struct KeygenConfig {
  HeegnerNumber H{163};
  std::size_t min_bits = 200;
  std::pair<BigInt, BigInt> z_range = default_range();
  std::pair<BigInt, BigInt> k_range = default_range();
  std::uint64_t max_attempts = 10'000;
  int mr_rounds = 40;  // 1 reproduces the single-pass variant
  std::optional<std::uint64_t> rng_seed;

  /// [10^80, 10^85].
  static std::pair<BigInt, BigInt> default_range();

  /// Throws Error(DomainError) unless low < high for both ranges, low >= 0,
  /// min_bits >= 8, mr_rounds >= 1 and max_attempts >= 1.
  void validate() const;
};

/// p = (bk^2 + H) / 4 with bk = 2 Z k - 1. (Z, k) is the secret material;
/// only the product Zk can be recovered from p.
struct StructuredPrime {
  BigInt Z;
  BigInt k;
  BigInt bk;
  BigInt p;

  friend bool operator==(const StructuredPrime&, const StructuredPrime&) = default;
};

struct StructuredKeyPair {
  HeegnerNumber H;
  StructuredPrime sp1;
  StructuredPrime sp2;
  BigInt N;  // sp1.p * sp2.p

  friend bool operator==(const StructuredKeyPair&, const StructuredKeyPair&) = default;
};

struct PublicKey {
  HeegnerNumber H;
  BigInt N;
};

/// Draws (Z, k) uniformly from the configured ranges with Z != k until the
/// candidate meets min_bits, has Jacobi(-H, p) = 1 and passes mr_rounds of
/// Miller-Rabin. The Jacobi check never rejects a prime p not dividing H,
/// since bk^2 = -H (mod p); it only screens composites.
/// Throws Error(ExhaustedAttempts) after max_attempts rejections and
/// Error(NonIntegralConstant) for H in {1, 2}, Error(FixedPrimeDivisor) for
/// H = 7 (every candidate is even).
StructuredPrime generate_structured_prime(const KeygenConfig& config, RandomSource& rng);

/// Two structured primes; the second is regenerated while it equals the first.
StructuredKeyPair generate_keypair(const KeygenConfig& config, RandomSource& rng);

/// (sqrt(4p - H) + 1) / 2, the product Z k. Throws Error(NotStructured) when
/// 4p - H is negative, not a perfect square, or has an even root.
BigInt recover_zk(const BigInt& p, HeegnerNumber H);

struct RsaRoundTrip {
  BigInt ciphertext;
  BigInt recovered;
  BigInt private_exponent;
};

/// Textbook RSA over N = p1 p2: c = m^e mod N, m' = c^d mod N with
/// d = e^-1 mod (p1 - 1)(p2 - 1).
/// Throws Error(ExponentNotCoprime) and Error(DomainError) for m outside [0, N).
RsaRoundTrip rsa_roundtrip(const StructuredKeyPair& keypair, const BigInt& message,
                           const BigInt& e = BigInt(65537));

/// A random odd integer of exactly `bits` bits, redrawn until it passes 40
/// Miller-Rabin rounds. Throws Error(DomainError) for bits < 8.
BigInt baseline_random_prime(std::size_t bits, RandomSource& rng);

/// JSON with decimal-string integers. Public form: {"H", "N"}; the secret
/// form adds Z1, k1, p1, Z2, k2, p2.
std::string serialize_keypair(const StructuredKeyPair& keypair, bool include_secrets);

/// Throws Error(ParseError), Error(MissingField) (e.g. for a public-only
/// document) or Error(InvariantViolation) when the fields disagree.
StructuredKeyPair deserialize_keypair(std::string_view text);

/// Accepts either form.
PublicKey deserialize_public_key(std::string_view text);

}  // namespace heegner
