#include "walkbound/walk.hpp"

namespace walkbound {

DyadicProb walk_point(int n, long k) {
  if (n < 0) throw std::domain_error("walk_point: n must be non-negative");
  long a = k < 0 ? -k : k;
  if (a > n) return DyadicProb::zero();
  if (((n + k) & 1L) != 0) return DyadicProb::zero();
  return DyadicProb::from_count(binom(n, (n + k) / 2),
                                static_cast<unsigned long>(n));
}

DyadicProb walk_tail(int n, const Rat& x) {
  if (n < 0) throw std::domain_error("walk_tail: n must be non-negative");
  mpz_class kz = rat_ceil(x);
  if (kz > n) return DyadicProb::zero();
  if (kz <= -n) return DyadicProb::one();
  long k = kz.get_si();
  long j = k;
  if (((j + n) & 1L) != 0) ++j;  // smallest j >= k with the parity of n
  // P{W_n >= x} = sum of C(n, (n+j)/2) / 2^n over support points j >= k.
  return DyadicProb::from_count(binom_tail_sum(n, (n + j) / 2),
                                static_cast<unsigned long>(n));
}

DyadicProb walk_interval(int n, long k) {
  if (n < 0) throw std::domain_error("walk_interval: n must be non-negative");
  if (k < 1) throw std::domain_error("walk_interval: k must be >= 1");
  // Support points j with -k < j <= k and j == n (mod 2); their counts are
  // the k largest binomial coefficients of row n.
  long lo = -k + 1;
  if (((lo + n) & 1L) != 0) ++lo;
  if (lo < -n) {
    lo = -n;
    if (((lo + n) & 1L) != 0) ++lo;
  }
  long hi = k > n ? n : k;
  if (((hi + n) & 1L) != 0) --hi;
  if (lo > hi) return DyadicProb::zero();
  BigCount count = 0;
  for (long j = lo; j <= hi; j += 2) count += binom(n, (n + j) / 2);
  return DyadicProb::from_count(std::move(count),
                                static_cast<unsigned long>(n));
}

}  // namespace walkbound
