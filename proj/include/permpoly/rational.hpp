#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace permpoly {

// Counts are arbitrary-precision integers and all geometry is exact
// rational; no floating point is allowed anywhere near rank or face
// decisions.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" text form ("p" when q == 1). Never decimals.
std::string rational_to_string(const Rational& r);

/// Parses "p" or "p/q" with optional sign; rejects anything else
/// (including q == 0).
Rational rational_from_string(std::string_view text);

BigInt binomial(unsigned long n, unsigned long k);

}  // namespace permpoly
