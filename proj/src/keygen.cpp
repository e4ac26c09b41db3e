#include "heegner/keygen.hpp"

#include <json.hpp>

#include "heegner/error.hpp"
#include "heegner/primality.hpp"

namespace heegner {

using nlohmann::json;

namespace {

constexpr int kBaselineRounds = 40;

BigInt structured_value(const BigInt& bk, HeegnerNumber H) { return (bk * bk + H.value()) / 4; }

StructuredPrime rebuild(const BigInt& Z, const BigInt& k, HeegnerNumber H) {
  BigInt bk = 2 * Z * k - 1;
  BigInt p = structured_value(bk, H);
  return StructuredPrime{Z, k, std::move(bk), std::move(p)};
}

std::string require_string(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::MissingField, std::string("missing '") + key + "'");
  const auto& field = doc.at(key);
  if (!field.is_string()) {
    throw Error(ErrorCode::ParseError, std::string("'") + key + "' must be a decimal string");
  }
  return field.get<std::string>();
}

json parse_object(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "key document must be a JSON object");
  return doc;
}

HeegnerNumber parse_h(const json& doc) {
  if (!doc.contains("H")) throw Error(ErrorCode::MissingField, "missing 'H'");
  if (!doc.at("H").is_number_integer()) throw Error(ErrorCode::ParseError, "'H' must be an integer");
  return HeegnerNumber(doc.at("H").get<int>());
}

}  // namespace

std::pair<BigInt, BigInt> KeygenConfig::default_range() {
  return {parse_bigint("10^80"), parse_bigint("10^85")};
}

void KeygenConfig::validate() const {
  for (const auto* range : {&z_range, &k_range}) {
    if (sgn(range->first) < 0 || range->first >= range->second) {
      throw Error(ErrorCode::DomainError, "sampling ranges need 0 <= low < high");
    }
  }
  if (min_bits < 8) throw Error(ErrorCode::DomainError, "min_bits must be >= 8");
  if (mr_rounds < 1) throw Error(ErrorCode::DomainError, "mr_rounds must be >= 1");
  if (max_attempts < 1) throw Error(ErrorCode::DomainError, "max_attempts must be >= 1");
}

StructuredPrime generate_structured_prime(const KeygenConfig& config, RandomSource& rng) {
  config.validate();
  if (!config.H.integral_constant()) {
    throw Error(ErrorCode::NonIntegralConstant,
                "H = " + std::to_string(config.H.value()) + " cannot produce integral primes");
  }
  if (config.H.value() % 8 == 7) {
    throw Error(ErrorCode::FixedPrimeDivisor,
                "H = " + std::to_string(config.H.value()) + " makes every candidate even");
  }
  const BigInt minus_h(-config.H.value());
  for (std::uint64_t attempt = 0; attempt < config.max_attempts; ++attempt) {
    BigInt Z = rng.uniform(config.z_range.first, config.z_range.second);
    BigInt k = rng.uniform(config.k_range.first, config.k_range.second);
    if (Z == k) continue;
    StructuredPrime candidate = rebuild(Z, k, config.H);
    if (bit_length(candidate.p) < config.min_bits) continue;
    if (candidate.p <= 2 || mpz_even_p(candidate.p.get_mpz_t())) continue;
    if (jacobi_symbol(minus_h, candidate.p) != 1) continue;
    if (miller_rabin(candidate.p, config.mr_rounds, rng).composite()) continue;
    return candidate;
  }
  throw Error(ErrorCode::ExhaustedAttempts,
              "no structured prime of >= " + std::to_string(config.min_bits) + " bits in " +
                  std::to_string(config.max_attempts) + " attempts");
}

StructuredKeyPair generate_keypair(const KeygenConfig& config, RandomSource& rng) {
  StructuredPrime first = generate_structured_prime(config, rng);
  StructuredPrime second = generate_structured_prime(config, rng);
  while (second.p == first.p) second = generate_structured_prime(config, rng);
  BigInt modulus = first.p * second.p;
  return StructuredKeyPair{config.H, std::move(first), std::move(second), std::move(modulus)};
}

BigInt recover_zk(const BigInt& p, HeegnerNumber H) {
  const BigInt radicand = 4 * p - H.value();
  if (sgn(radicand) < 0) {
    throw Error(ErrorCode::NotStructured, "4p - H is negative for p = " + p.get_str());
  }
  const BigInt root = integer_sqrt(radicand);
  if (root * root != radicand || mpz_even_p(root.get_mpz_t())) {
    throw Error(ErrorCode::NotStructured, "4p - H is not an odd square; p = " + p.get_str() +
                                              " is not f(0) for H = " + std::to_string(H.value()));
  }
  return (root + 1) / 2;
}

RsaRoundTrip rsa_roundtrip(const StructuredKeyPair& keypair, const BigInt& message,
                           const BigInt& e) {
  const BigInt& n = keypair.N;
  if (sgn(message) < 0 || message >= n) {
    throw Error(ErrorCode::DomainError, "message must lie in [0, N)");
  }
  const BigInt phi = (keypair.sp1.p - 1) * (keypair.sp2.p - 1);
  BigInt d;
  if (mpz_invert(d.get_mpz_t(), e.get_mpz_t(), phi.get_mpz_t()) == 0) {
    throw Error(ErrorCode::ExponentNotCoprime, "gcd(e, phi(N)) != 1 for e = " + e.get_str());
  }
  BigInt c;
  BigInt m;
  mpz_powm(c.get_mpz_t(), message.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
  mpz_powm(m.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  return RsaRoundTrip{std::move(c), std::move(m), std::move(d)};
}

BigInt baseline_random_prime(std::size_t bits, RandomSource& rng) {
  if (bits < 8) throw Error(ErrorCode::DomainError, "baseline_random_prime needs bits >= 8");
  const BigInt lo = BigInt(1) << static_cast<mp_bitcnt_t>(bits - 1);
  const BigInt hi = (BigInt(1) << static_cast<mp_bitcnt_t>(bits)) - 1;
  while (true) {
    BigInt candidate = rng.uniform(lo, hi);
    mpz_setbit(candidate.get_mpz_t(), 0);
    if (!miller_rabin(candidate, kBaselineRounds, rng).composite()) return candidate;
  }
}

std::string serialize_keypair(const StructuredKeyPair& keypair, bool include_secrets) {
  json doc{{"H", keypair.H.value()}, {"N", to_decimal(keypair.N)}};
  if (include_secrets) {
    doc["Z1"] = to_decimal(keypair.sp1.Z);
    doc["k1"] = to_decimal(keypair.sp1.k);
    doc["p1"] = to_decimal(keypair.sp1.p);
    doc["Z2"] = to_decimal(keypair.sp2.Z);
    doc["k2"] = to_decimal(keypair.sp2.k);
    doc["p2"] = to_decimal(keypair.sp2.p);
  }
  return doc.dump(2) + '\n';
}

StructuredKeyPair deserialize_keypair(std::string_view text) {
  const json doc = parse_object(text);
  const HeegnerNumber H = parse_h(doc);
  const BigInt N = parse_bigint(require_string(doc, "N"));

  const auto read_prime = [&](const char* z_key, const char* k_key, const char* p_key) {
    StructuredPrime sp = rebuild(parse_bigint(require_string(doc, z_key)),
                                 parse_bigint(require_string(doc, k_key)), H);
    if (sp.p != parse_bigint(require_string(doc, p_key))) {
      throw Error(ErrorCode::InvariantViolation,
                  std::string(p_key) + " does not equal ((2Zk - 1)^2 + H) / 4");
    }
    return sp;
  };
  StructuredPrime sp1 = read_prime("Z1", "k1", "p1");
  StructuredPrime sp2 = read_prime("Z2", "k2", "p2");
  if (sp1.p == sp2.p) throw Error(ErrorCode::InvariantViolation, "p1 and p2 must differ");
  if (sp1.p * sp2.p != N) throw Error(ErrorCode::InvariantViolation, "N != p1 * p2");
  return StructuredKeyPair{H, std::move(sp1), std::move(sp2), N};
}

PublicKey deserialize_public_key(std::string_view text) {
  const json doc = parse_object(text);
  return PublicKey{parse_h(doc), parse_bigint(require_string(doc, "N"))};
}

}  // namespace heegner
