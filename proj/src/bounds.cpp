#include "walkbound/bounds.hpp"

#include <cmath>

namespace walkbound {

namespace {

void require_positive(const Rat& x, const char* who) {
  if (x <= 0) throw std::domain_error(std::string(who) + ": x must be > 0");
}

// Clamp an exact integer to a long.  Callers pass a limit beyond the walk
// length, where the point probability is zero either way.
long clamp_to_long(const mpz_class& v, long limit) {
  if (v > limit) return limit;
  if (v < -limit) return -limit;
  return v.get_si();
}

}  // namespace

const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::tail: return "tail";
    case BoundKind::point: return "point";
    case BoundKind::point_step: return "point_step";
    case BoundKind::point_positive: return "point_positive";
    case BoundKind::interval: return "interval";
    case BoundKind::katona: return "katona";
    case BoundKind::milner: return "milner";
    case BoundKind::kleitman: return "kleitman";
  }
  return "?";
}

ParityIndicator::ParityIndicator(const Rat& x_, int n_) : x(x_), n(n_) {
  mpz_class k = rat_ceil(x_);
  k += n_;
  value = mpz_even_p(k.get_mpz_t()) ? 1 : 0;
}

BoundReport tail_bound(int n, const Rat& x) {
  if (n < 1) throw std::domain_error("tail_bound: n must be >= 1");
  require_positive(x, "tail_bound");
  ParityIndicator ind(x, n);
  long m = ind.value ? n : n - 1;
  return BoundReport{walk_tail(static_cast<int>(m), x), m,
                     ind.value ? ParityCase::even : ParityCase::odd,
                     BoundKind::tail};
}

DyadicProb point_bound_step(int n, const Rat& x) {
  if (n < 0) throw std::domain_error("point_bound_step: n must be >= 0");
  require_positive(x, "point_bound_step");
  mpz_class kz = rat_ceil(x);
  mpz_class s = kz + n;
  long m = mpz_even_p(s.get_mpz_t()) ? n : n - 1;
  if (m < 0) return DyadicProb::zero();
  long k = clamp_to_long(kz, m + 2);
  return walk_point(static_cast<int>(m), k);
}

BoundReport point_bound(int n, const Rat& x) {
  if (n < 1) throw std::domain_error("point_bound: n must be >= 1");
  require_positive(x, "point_bound");
  ParityIndicator ind(x, n);
  mpz_class kz = rat_ceil(x);
  long base = ind.value ? n : n - 1;
  mpz_class k2 = kz * kz;
  long m = k2 < base ? k2.get_si() : base;
  long k = clamp_to_long(kz, m + 2);
  return BoundReport{walk_point(static_cast<int>(m), k), m,
                     ind.value ? ParityCase::even : ParityCase::odd,
                     BoundKind::point};
}

DyadicProb point_bound_positive(int n, const Rat& x) {
  if (n < 1) throw std::domain_error("point_bound_positive: n must be >= 1");
  require_positive(x, "point_bound_positive");
  mpz_class kz = rat_ceil(x);
  mpz_class s = kz + n;
  if (!mpz_even_p(s.get_mpz_t())) kz += 1;
  long k = clamp_to_long(kz, n + 2);
  return walk_point(n, k);
}

DyadicProb lo_bound(int n, long k) {
  if (n < 1) throw std::domain_error("lo_bound: n must be >= 1");
  if (k < 1) throw std::domain_error("lo_bound: k must be >= 1");
  return walk_interval(n, k);
}

BigCount katona_bound(int n, long k) {
  if (k < 1) throw std::domain_error("katona_bound: k must be >= 1");
  if (k > n) throw std::domain_error("katona_bound: k must be <= n");
  if ((k + n) % 2 == 0) {
    long t = (k + n) / 2;
    return binom_tail_sum(n, t);
  }
  long t = (k + n + 1) / 2;
  return binom_tail_sum(n, t) + binom(n - 1, t - 1);
}

BigCount milner_bound(int n, long k) {
  if (k < 1) throw std::domain_error("milner_bound: k must be >= 1");
  if (k > n) throw std::domain_error("milner_bound: k must be <= n");
  long t = (n + k + 1) / 2;  // ceil((n+k)/2)
  return binom(n, t);
}

BigCount kleitman_bound(int n, long k) {
  if (k < 1) throw std::domain_error("kleitman_bound: k must be >= 1");
  if (k > n) throw std::domain_error("kleitman_bound: k must be <= n");
  return katona_bound(n, k);
}

double hoeffding_bound(int n, double x) {
  if (n < 1) throw std::domain_error("hoeffding_bound: n must be >= 1");
  if (!(x > 0)) throw std::domain_error("hoeffding_bound: x must be > 0");
  return std::exp(-x * x / (2.0 * n));
}

DyadicProb kwapien_rhs(int n, const Rat& x) {
  if (n < 1) throw std::domain_error("kwapien_rhs: n must be >= 1");
  require_positive(x, "kwapien_rhs");
  return walk_tail(n, x).doubled_clamped();
}

}  // namespace walkbound
