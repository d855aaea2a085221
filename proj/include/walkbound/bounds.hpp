#pragma once

#include "walkbound/exactnum.hpp"
#include "walkbound/rational.hpp"
#include "walkbound/walk.hpp"

namespace walkbound {

// Closed-form right-hand sides of the tail, point, interval and set-family
// inequalities, plus the Hoeffding and Kwapien comparison values.

enum class ParityCase { even, odd };

enum class BoundKind {
  tail,            // optimal tail bound P{S_n >= x}
  point,           // optimal point bound P{S_n = x} (walk length min(n, k^2))
  point_step,      // staircase point bound B_n(x) for nonzero weights
  point_positive,  // sharper point bound for strictly positive weights
  interval,        // Littlewood-Offord interval bound
  katona,          // k-intersecting family cardinality
  milner,          // k-intersecting antichain cardinality
  kleitman,        // bounded-diameter family cardinality
};

const char* bound_kind_name(BoundKind k);

// Indicator used by the parity case split: value = 1 iff ceil(x) + n is even.
struct ParityIndicator {
  Rat x;
  int n;
  int value;
  ParityIndicator(const Rat& x_, int n_);
};

struct BoundReport {
  DyadicProb bound;
  long effective_walk_length;  // the walk length the bound evaluates
  ParityCase parity;
  BoundKind kind;
};

/// Optimal tail bound: P{W_n >= x} in the even parity case, P{W_{n-1} >= x}
/// in the odd one.  Requires n >= 1 and x > 0.
BoundReport tail_bound(int n, const Rat& x);

/// Staircase bound B_n(x) for P{S_n = x} with nonzero weights:
/// P{W_n = k} or P{W_{n-1} = k} by the parity of n + k, k = ceil(x).
DyadicProb point_bound_step(int n, const Rat& x);

/// Optimal point bound: P{W_m = k} with m = min(n, k^2) or min(n-1, k^2)
/// by parity.  Requires n >= 1 and x > 0.
BoundReport point_bound(int n, const Rat& x);

/// Sharper point bound valid for strictly positive weights: P{W_n = k} or
/// P{W_n = k+1} by parity.  The positivity hypothesis is the caller's.
DyadicProb point_bound_positive(int n, const Rat& x);

/// Littlewood-Offord bound: P{W_n in (-k, k]}.
DyadicProb lo_bound(int n, long k);

/// Maximum size of a k-intersecting family of subsets of [n].
BigCount katona_bound(int n, long k);

/// Maximum size of a k-intersecting antichain: C(n, ceil((n+k)/2)).
BigCount milner_bound(int n, long k);

/// Maximum size of a family with diameter <= n - k (same value as
/// katona_bound; kept separate so each inequality has its own surface).
BigCount kleitman_bound(int n, long k);

/// exp(-x^2 / 2n), for comparison only (floating point).
double hoeffding_bound(int n, double x);

/// min(1, 2 P{W_n >= x}), exactly.
DyadicProb kwapien_rhs(int n, const Rat& x);

}  // namespace walkbound
