#pragma once

#include <gmpxx.h>

#include <string>

#include "walkbound/errors.hpp"

namespace walkbound {

// Exact rational numbers.  All weight and threshold arithmetic in this
// library is exact; doubles appear only in rendering and in the Hoeffding
// comparison value.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

// Accepts "p/q" (q > 0), plain integers, and decimal literals.  Decimals are
// read in base 10, so "0.3" is exactly 3/10 — never a binary float.  Throws
// parse_error on anything else.
Rat parse_rational(const std::string& text);

// Canonical form: "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

// Decimal rendering, exact when the denominator divides a power of ten and
// the expansion fits in max_digits; correctly rounded (ties to even)
// otherwise.  Trailing zeros are kept only up to the exact expansion.
std::string rat_to_decimal(const Rat& r, int max_digits);

mpz_class rat_ceil(const Rat& r);
mpz_class rat_floor(const Rat& r);
bool rat_is_integer(const Rat& r);

}  // namespace walkbound
