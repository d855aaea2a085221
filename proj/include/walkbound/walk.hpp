#pragma once

#include "walkbound/exactnum.hpp"
#include "walkbound/rational.hpp"

namespace walkbound {

// Exact distribution of the simple random walk W_n (n independent +-1
// steps, support {-n, -n+2, ..., n}).

/// P{W_n = k}; zero when |k| > n or the parity of k does not match n.
DyadicProb walk_point(int n, long k);

/// P{W_n >= x} for exact rational x (1 when x <= -n, 0 when x > n).
DyadicProb walk_tail(int n, const Rat& x);

/// P{W_n in (-k, k]} for k >= 1: the sum of the k largest binomial
/// coefficients in row n, over 2^n.
DyadicProb walk_interval(int n, long k);

}  // namespace walkbound
