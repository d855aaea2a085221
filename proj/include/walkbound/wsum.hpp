#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "walkbound/exactnum.hpp"
#include "walkbound/rational.hpp"

namespace walkbound {

// Exact distribution engine for S_n = a_1 e_1 + ... + a_n e_n with rational
// weights a_i and independent random signs e_i.

// Weights are stored in canonical form: sign-normalized to non-negative and
// sorted ascending.  Negating a weight leaves the distribution of S_n
// unchanged, so the canonical form loses nothing (and is itself a tested
// property).  Weights of any magnitude are accepted; the |a_i| <= 1 and
// |a_i| >= 1 hypotheses of specific inequalities are exposed as predicates
// and checked by the callers that need them.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rat> raw);

  // Comma-separated values, each "p/q" or decimal: "1,1,0.5".
  static WeightVector parse_list(const std::string& csv);
  // One rational per line; blank lines and '#' comments are skipped.
  static WeightVector load_file(const std::string& path);

  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rat>& weights() const { return weights_; }

  bool all_positive() const;      // strictly positive
  bool all_at_most_one() const;   // every a_i <= 1
  bool all_at_least_one() const;  // every a_i >= 1

  Rat sum() const;

  // Canonical comma-separated form, usable to reproduce any computation.
  std::string digest() const;

 private:
  std::vector<Rat> weights_;
};

enum class Engine { enumerate, convolve, meet_in_middle, auto_select };

Engine parse_engine(const std::string& name);
const char* engine_name(Engine e);

struct DistributionOptions {
  // Maximum number of distinct support points any engine may materialize.
  std::size_t support_budget = std::size_t(1) << 22;
  // Maximum |SA| * |SB| pair work for the meet-in-the-middle merge.
  std::uint64_t pair_work_budget = std::uint64_t(1) << 26;
};

// The exact law of S_n: sorted support values with their sign-pattern
// counts.  Counts sum to 2^n and the support is symmetric about zero;
// both invariants are checked at construction.
class WalkDistribution {
 public:
  int n() const { return n_; }
  std::size_t support_size() const { return values_.size(); }
  const Rat& value(std::size_t i) const { return values_[i]; }
  const BigCount& count(std::size_t i) const { return counts_[i]; }

  /// P{S_n >= x}.
  DyadicProb tail_geq(const Rat& x) const;
  /// P{S_n = x}.
  DyadicProb point_mass(const Rat& x) const;
  /// Number of sign patterns with S_n in (lo, hi].
  BigCount count_in(const Rat& lo_open, const Rat& hi_closed) const;

  static WalkDistribution from_support(int n, std::vector<Rat> values,
                                       std::vector<BigCount> counts);

 private:
  int n_ = 0;
  std::vector<Rat> values_;
  std::vector<BigCount> counts_;
  std::vector<BigCount> cumulative_;  // prefix sums of counts_
};

/// Exact distribution of S_n.  All engines produce identical results;
/// auto_select picks convolve when the scaled-integer support provably fits
/// the budget and meet-in-the-middle otherwise.
WalkDistribution distribution(const WeightVector& w,
                              Engine engine = Engine::auto_select,
                              const DistributionOptions& opts = {});

// Serial reference: one plain rational sum per sign pattern, no scaling, no
// incremental updates.  Kept as the independent oracle for the parallel
// kernels; n is capped low because it is deliberately naive.
WalkDistribution distribution_reference(const WeightVector& w);

DyadicProb tail_prob(const WeightVector& w, const Rat& x,
                     Engine engine = Engine::auto_select);
DyadicProb point_prob(const WeightVector& w, const Rat& x,
                      Engine engine = Engine::auto_select);

struct IntervalResult {
  Rat x_star;        // a maximizing window is (x_star - k, x_star + k]
  DyadicProb prob;   // the exact maximum
  bool hypothesis_met;  // all |a_i| >= 1 (Littlewood-Offord hypothesis)
};

/// Maximum over real x of P{S_n in (x-k, x+k]}.  The maximum of a half-open
/// window over an atomic measure is attained with the closed right end at a
/// support atom, so a sliding window over the sorted support is exhaustive.
/// Ties are broken toward the smallest x_star.
IntervalResult best_interval_prob(const WeightVector& w, long k,
                                  Engine engine = Engine::auto_select);
IntervalResult best_interval_prob(const WalkDistribution& dist,
                                  const WeightVector& w, long k);

}  // namespace walkbound
