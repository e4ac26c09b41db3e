#include "heegner/bigint.hpp"

#include <algorithm>
#include <cctype>

#include "heegner/error.hpp"

namespace heegner {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  BigInt result;
  if (const auto caret = body.find('^'); caret != std::string_view::npos) {
    const auto base = body.substr(0, caret);
    const auto exponent = body.substr(caret + 1);
    if (base != "10" || !all_digits(exponent) || exponent.size() > 6) {
      throw Error(ErrorCode::ParseError, "expected 10^<digits>, got '" + std::string(text) + "'");
    }
    mpz_ui_pow_ui(result.get_mpz_t(), 10, std::stoul(std::string(exponent)));
  } else {
    if (!all_digits(body)) {
      throw Error(ErrorCode::ParseError, "not a decimal integer: '" + std::string(text) + "'");
    }
    result.set_str(std::string(body), 10);
  }
  return negative ? BigInt(-result) : result;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::size_t bit_length(const BigInt& value) {
  if (sgn(value) == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

BigInt integer_sqrt(const BigInt& n) {
  if (sgn(n) < 0) throw Error(ErrorCode::DomainError, "integer_sqrt of a negative number");
  if (n < 2) return n;
  // Start above the root: 2^ceil(bits/2) > sqrt(n). Newton then decreases
  // monotonically until it stops.
  BigInt x = BigInt(1) << static_cast<mp_bitcnt_t>((bit_length(n) + 1) / 2);
  while (true) {
    BigInt next = (x + n / x) >> 1;
    if (next >= x) break;
    x = std::move(next);
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

}  // namespace heegner
