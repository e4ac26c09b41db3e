#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace heegner {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses a decimal integer ("-123") or a power of ten ("10^80").
/// Throws Error(ParseError) on anything else.
BigInt parse_bigint(std::string_view text);

std::string to_decimal(const BigInt& value);

/// Number of significant bits of |value|; 0 for zero.
std::size_t bit_length(const BigInt& value);

/// floor(sqrt(n)) by Newton iteration. Throws Error(DomainError) for n < 0.
BigInt integer_sqrt(const BigInt& n);

}  // namespace heegner
