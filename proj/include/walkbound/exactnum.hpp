#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "walkbound/errors.hpp"

namespace walkbound {

// Arbitrary-precision non-negative integer used for binomial coefficients
// and sign-pattern counts.
using BigCount = mpz_class;

/// C(n, j); 0 when j < 0 or j > n.
BigCount binom(int n, long j);

/// Partial row sum: sum of C(n, t) for t in [t_lo, n].
BigCount binom_tail_sum(int n, long t_lo);

// An exact probability whose denominator is a power of two: value =
// numerator / 2^exponent.  Canonical form (numerator odd, or zero with
// exponent zero) is enforced at construction, so equality is equality of
// the two fields.
class DyadicProb {
 public:
  DyadicProb() : num_(0), exp_(0) {}

  // count / 2^exponent, canonicalized.  Throws std::domain_error when the
  // value would leave [0, 1].
  static DyadicProb from_count(BigCount count, unsigned long exponent);

  static DyadicProb zero() { return DyadicProb(); }
  static DyadicProb one() { return from_count(1, 0); }

  // Exact conversion of an IEEE double in [0, 1]; every finite double is a
  // dyadic rational, so this is lossless.
  static DyadicProb from_double_exact(double v);

  // Accepts the forms emitted by this library: "p/2^e", "p/q" with q a
  // power of two, and bare integers "0"/"1".  Throws parse_error.
  static DyadicProb parse(const std::string& text);

  const BigCount& numerator() const { return num_; }
  unsigned long exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && exp_ == 0; }

  DyadicProb operator+(const DyadicProb& other) const;
  // Requires *this >= other; throws std::domain_error below zero.
  DyadicProb operator-(const DyadicProb& other) const;
  DyadicProb halved() const;
  // min(1, 2 * value), exactly.
  DyadicProb doubled_clamped() const;

  std::strong_ordering operator<=>(const DyadicProb& other) const;
  bool operator==(const DyadicProb& other) const = default;

  // numerator * 2^(n - exponent); requires exponent <= n.  This is the
  // exact count behind a probability with denominator 2^n.
  BigCount scaled_pow2(unsigned long n) const;

  // "p/q" with q = 2^exponent written out in decimal ("5/16", "1", "0").
  std::string to_fraction_string() const;
  // "p/2^e" — unambiguous regardless of exponent size.
  std::string to_pow2_string() const;
  // Correctly rounded decimal with the given number of fractional digits
  // (ties to even).  digits >= 1.
  std::string to_decimal(int digits) const;
  // Exact decimal expansion (dyadics always have one), trailing zeros
  // trimmed to at least one fractional digit.
  std::string to_exact_decimal() const;

  double to_double() const;

 private:
  DyadicProb(BigCount num, unsigned long exp) : num_(std::move(num)), exp_(exp) {}
  void canonicalize();

  BigCount num_;
  unsigned long exp_;
};

// a + b clamped at 1 (used when adding a tolerance to a value that may
// already be close to 1).
DyadicProb dyadic_add_clamped(const DyadicProb& a, const DyadicProb& b);

}  // namespace walkbound
