#include "walkbound/wsum.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace walkbound {

namespace {

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

WeightVector::WeightVector(std::vector<Rat> raw) : weights_(std::move(raw)) {
  for (Rat& r : weights_) {
    if (r < 0) r = -r;
    r.canonicalize();
  }
  std::sort(weights_.begin(), weights_.end());
}

WeightVector WeightVector::parse_list(const std::string& csv) {
  std::vector<Rat> raw;
  std::string item;
  std::stringstream ss(csv);
  bool any_char = csv.find_first_not_of(" \t") != std::string::npos;
  if (!any_char) return WeightVector(std::move(raw));
  while (std::getline(ss, item, ',')) raw.push_back(parse_rational(item));
  return WeightVector(std::move(raw));
}

WeightVector WeightVector::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open weight file: " + path);
  std::vector<Rat> raw;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    raw.push_back(parse_rational(line));
  }
  return WeightVector(std::move(raw));
}

bool WeightVector::all_positive() const {
  for (const Rat& r : weights_)
    if (r <= 0) return false;
  return true;
}

bool WeightVector::all_at_most_one() const {
  for (const Rat& r : weights_)
    if (r > 1) return false;
  return true;
}

bool WeightVector::all_at_least_one() const {
  for (const Rat& r : weights_)
    if (r < 1) return false;
  return true;
}

Rat WeightVector::sum() const {
  Rat s = 0;
  for (const Rat& r : weights_) s += r;
  return s;
}

std::string WeightVector::digest() const {
  std::string s;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ',';
    s += rat_to_string(weights_[i]);
  }
  return s;
}

Engine parse_engine(const std::string& name) {
  if (name == "enumerate") return Engine::enumerate;
  if (name == "convolve") return Engine::convolve;
  if (name == "meet_in_middle" || name == "mim") return Engine::meet_in_middle;
  if (name == "auto") return Engine::auto_select;
  throw parse_error("unknown engine: '" + name + "'");
}

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::enumerate: return "enumerate";
    case Engine::convolve: return "convolve";
    case Engine::meet_in_middle: return "meet_in_middle";
    case Engine::auto_select: return "auto";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Scaled-integer kernels.
//
// Weights are scaled by the least common multiple of their denominators so
// every partial sum is an integer.  Kernels are templated over the integer
// type: int64_t when the scaled magnitudes provably fit, mpz_class otherwise.
// ---------------------------------------------------------------------------

namespace {

template <typename Int>
using CountMap = std::map<Int, BigCount>;

// One contiguous index range [lo, hi) of the 2^n sign patterns, walked in
// Gray-code order so each step updates the running sum by a single +-2a_i.
template <typename Int>
void enumerate_range(const std::vector<Int>& twice, const Int& base_sum,
                     std::uint64_t lo, std::uint64_t hi,
                     std::map<Int, std::uint64_t>& out) {
  std::uint64_t gray = lo ^ (lo >> 1);
  Int sum = base_sum;  // caller passes the sum for gray(lo)
  for (std::uint64_t i = lo;;) {
    ++out[sum];
    ++i;
    if (i >= hi) break;
    int b = std::countr_zero(i);
    gray ^= (std::uint64_t(1) << b);
    if ((gray >> b) & 1)
      sum += twice[static_cast<std::size_t>(b)];
    else
      sum -= twice[static_cast<std::size_t>(b)];
  }
}

template <typename Int>
Int gray_sum(const std::vector<Int>& p, std::uint64_t index) {
  std::uint64_t gray = index ^ (index >> 1);
  Int sum = 0;
  for (std::size_t b = 0; b < p.size(); ++b) {
    if ((gray >> b) & 1)
      sum += p[b];
    else
      sum -= p[b];
  }
  return sum;
}

template <typename Int>
CountMap<Int> enumerate_support(const std::vector<Int>& p,
                                std::size_t budget) {
  const int n = static_cast<int>(p.size());
  const std::uint64_t total = std::uint64_t(1) << n;
  std::vector<Int> twice(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) twice[i] = p[i] * 2;

  int chunks = 1;
  if (n > 12) chunks = std::min<std::uint64_t>(total >> 10, max_threads() * 8);
  if (chunks < 1) chunks = 1;

  std::vector<std::map<Int, std::uint64_t>> partial(chunks);
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    std::uint64_t lo = total / chunks * c;
    std::uint64_t hi = (c == chunks - 1) ? total : total / chunks * (c + 1);
    enumerate_range(twice, gray_sum(p, lo), lo, hi, partial[c]);
  }

  CountMap<Int> merged;
  for (auto& part : partial) {
    for (auto& [value, count] : part) merged[value] += count;
    if (merged.size() > budget)
      throw resource_error("enumerate support exceeds budget of " +
                           std::to_string(budget) + " points");
  }
  return merged;
}

template <typename Int>
std::vector<std::pair<Int, BigCount>> convolve_support(
    const std::vector<Int>& p, std::size_t budget) {
  std::vector<std::pair<Int, BigCount>> cur;
  cur.emplace_back(Int(0), BigCount(1));
  for (const Int& w : p) {
    if (w == 0) {
      for (auto& e : cur) e.second <<= 1;
      continue;
    }
    std::vector<std::pair<Int, BigCount>> next;
    next.reserve(cur.size() * 2);
    std::size_t i = 0, j = 0;  // i: shifted down by w, j: shifted up
    while (i < cur.size() || j < cur.size()) {
      if (j >= cur.size()) {
        next.emplace_back(cur[i].first - w, cur[i].second);
        ++i;
        continue;
      }
      if (i >= cur.size()) {
        next.emplace_back(cur[j].first + w, cur[j].second);
        ++j;
        continue;
      }
      Int down = cur[i].first - w;
      Int up = cur[j].first + w;
      if (down < up) {
        next.emplace_back(std::move(down), cur[i].second);
        ++i;
      } else if (up < down) {
        next.emplace_back(std::move(up), cur[j].second);
        ++j;
      } else {
        next.emplace_back(std::move(down), cur[i].second + cur[j].second);
        ++i;
        ++j;
      }
    }
    if (next.size() > budget)
      throw resource_error("convolve support exceeds budget of " +
                           std::to_string(budget) + " points");
    cur = std::move(next);
  }
  return cur;
}

template <typename Int>
CountMap<Int> mim_support(const std::vector<Int>& p,
                          const DistributionOptions& opts) {
  const std::size_t half = p.size() / 2;
  std::vector<Int> left(p.begin(), p.begin() + half);
  std::vector<Int> right(p.begin() + half, p.end());
  CountMap<Int> ls = enumerate_support(left, opts.support_budget);
  CountMap<Int> rs = enumerate_support(right, opts.support_budget);

  std::uint64_t work =
      static_cast<std::uint64_t>(ls.size()) * static_cast<std::uint64_t>(rs.size());
  if (work > opts.pair_work_budget)
    throw resource_error("meet_in_middle pair work " + std::to_string(work) +
                         " exceeds budget of " +
                         std::to_string(opts.pair_work_budget));

  std::vector<std::pair<Int, BigCount>> lv(ls.begin(), ls.end());
  std::vector<std::pair<Int, BigCount>> rv(rs.begin(), rs.end());

  int threads = std::max(1, max_threads());
  std::vector<CountMap<Int>> partial(threads);
#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    CountMap<Int>& local = partial[omp_get_thread_num()];
#else
    CountMap<Int>& local = partial[0];
#endif
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(lv.size()); ++i)
      for (const auto& [rvalue, rcount] : rv)
        local[lv[static_cast<std::size_t>(i)].first + rvalue] +=
            lv[static_cast<std::size_t>(i)].second * rcount;
  }

  CountMap<Int> merged;
  for (auto& part : partial) {
    for (auto& [value, count] : part) merged[value] += count;
    if (merged.size() > opts.support_budget)
      throw resource_error("meet_in_middle support exceeds budget of " +
                           std::to_string(opts.support_budget) + " points");
  }
  return merged;
}

struct ScaledWeights {
  mpz_class den;             // common denominator, > 0
  std::vector<mpz_class> p;  // a_i * den, non-negative
  mpz_class sum_abs;
  bool fits64;
};

ScaledWeights scale_weights(const WeightVector& w) {
  ScaledWeights s;
  s.den = 1;
  for (const Rat& r : w.weights())
    mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), r.get_den().get_mpz_t());
  s.sum_abs = 0;
  for (const Rat& r : w.weights()) {
    mpz_class scaled = r.get_num() * (s.den / r.get_den());
    s.sum_abs += scaled;
    s.p.push_back(std::move(scaled));
  }
  const mpz_class limit = mpz_class(1) << 60;
  s.fits64 = s.den < limit && s.sum_abs < limit;
  return s;
}

std::vector<std::int64_t> to_int64(const std::vector<mpz_class>& p) {
  std::vector<std::int64_t> out;
  out.reserve(p.size());
  for (const mpz_class& v : p) out.push_back(v.get_si());
  return out;
}

template <typename Int>
WalkDistribution support_to_distribution(int n, const CountMap<Int>& support,
                                         const mpz_class& den) {
  std::vector<Rat> values;
  std::vector<BigCount> counts;
  values.reserve(support.size());
  counts.reserve(support.size());
  for (const auto& [value, count] : support) {
    Rat v(mpz_class(value), den);
    v.canonicalize();
    values.push_back(std::move(v));
    counts.push_back(count);
  }
  return WalkDistribution::from_support(n, std::move(values), std::move(counts));
}

template <typename Int>
WalkDistribution support_to_distribution(
    int n, const std::vector<std::pair<Int, BigCount>>& support,
    const mpz_class& den) {
  std::vector<Rat> values;
  std::vector<BigCount> counts;
  values.reserve(support.size());
  counts.reserve(support.size());
  for (const auto& [value, count] : support) {
    Rat v(mpz_class(value), den);
    v.canonicalize();
    values.push_back(std::move(v));
    counts.push_back(count);
  }
  return WalkDistribution::from_support(n, std::move(values), std::move(counts));
}

}  // namespace

WalkDistribution WalkDistribution::from_support(int n, std::vector<Rat> values,
                                                std::vector<BigCount> counts) {
  WalkDistribution d;
  d.n_ = n;
  d.values_ = std::move(values);
  d.counts_ = std::move(counts);
  if (d.values_.size() != d.counts_.size())
    throw std::logic_error("distribution: value/count size mismatch");
  BigCount total = 0;
  d.cumulative_.reserve(d.counts_.size());
  for (std::size_t i = 0; i < d.values_.size(); ++i) {
    if (i > 0 && !(d.values_[i - 1] < d.values_[i]))
      throw std::logic_error("distribution: support not strictly increasing");
    if (d.counts_[i] <= 0)
      throw std::logic_error("distribution: non-positive count");
    total += d.counts_[i];
    d.cumulative_.push_back(total);
  }
  const std::size_t s = d.values_.size();
  for (std::size_t i = 0; i < s; ++i) {
    if (d.values_[i] != -d.values_[s - 1 - i] ||
        d.counts_[i] != d.counts_[s - 1 - i])
      throw std::logic_error("distribution: support not symmetric");
  }
  BigCount expect = 1;
  expect <<= static_cast<unsigned long>(n);
  if (total != expect)
    throw std::logic_error("distribution: counts do not sum to 2^n");
  return d;
}

DyadicProb WalkDistribution::tail_geq(const Rat& x) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), x);
  std::size_t idx = static_cast<std::size_t>(it - values_.begin());
  if (idx == values_.size()) return DyadicProb::zero();
  BigCount count = cumulative_.back() -
                   (idx == 0 ? BigCount(0) : cumulative_[idx - 1]);
  return DyadicProb::from_count(std::move(count),
                                static_cast<unsigned long>(n_));
}

DyadicProb WalkDistribution::point_mass(const Rat& x) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), x);
  if (it == values_.end() || *it != x) return DyadicProb::zero();
  return DyadicProb::from_count(
      counts_[static_cast<std::size_t>(it - values_.begin())],
      static_cast<unsigned long>(n_));
}

BigCount WalkDistribution::count_in(const Rat& lo_open,
                                    const Rat& hi_closed) const {
  auto lo_it = std::upper_bound(values_.begin(), values_.end(), lo_open);
  auto hi_it = std::upper_bound(values_.begin(), values_.end(), hi_closed);
  std::size_t lo = static_cast<std::size_t>(lo_it - values_.begin());
  std::size_t hi = static_cast<std::size_t>(hi_it - values_.begin());
  if (hi <= lo) return 0;
  return cumulative_[hi - 1] - (lo == 0 ? BigCount(0) : cumulative_[lo - 1]);
}

WalkDistribution distribution(const WeightVector& w, Engine engine,
                              const DistributionOptions& opts) {
  const int n = w.size();
  if (n == 0)
    return WalkDistribution::from_support(0, {Rat(0)}, {BigCount(1)});

  ScaledWeights s = scale_weights(w);

  if (engine == Engine::auto_select) {
    // Convolve when the lattice-span bound on the support provably fits the
    // budget; otherwise fall back to meet-in-the-middle.
    mpz_class g = 0;
    for (const mpz_class& v : s.p)
      if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    mpz_class bound = g == 0 ? mpz_class(1) : mpz_class(s.sum_abs / g + 1);
    if (bound <= static_cast<long>(opts.support_budget))
      engine = Engine::convolve;
    else if (n <= 40)
      engine = Engine::meet_in_middle;
    else
      throw resource_error(
          "auto engine: n > 40 and scaled support bound " + bound.get_str() +
          " exceeds budget of " + std::to_string(opts.support_budget));
  }

  if ((engine == Engine::enumerate || engine == Engine::meet_in_middle) &&
      n > 40)
    throw resource_error("engine " + std::string(engine_name(engine)) +
                         " is limited to n <= 40 (got n = " +
                         std::to_string(n) + ")");

  switch (engine) {
    case Engine::enumerate:
      if (s.fits64)
        return support_to_distribution(
            n, enumerate_support(to_int64(s.p), opts.support_budget), s.den);
      return support_to_distribution(
          n, enumerate_support(s.p, opts.support_budget), s.den);
    case Engine::convolve:
      if (s.fits64)
        return support_to_distribution(
            n, convolve_support(to_int64(s.p), opts.support_budget), s.den);
      return support_to_distribution(
          n, convolve_support(s.p, opts.support_budget), s.den);
    case Engine::meet_in_middle:
      if (s.fits64)
        return support_to_distribution(n, mim_support(to_int64(s.p), opts),
                                       s.den);
      return support_to_distribution(n, mim_support(s.p, opts), s.den);
    default:
      throw std::logic_error("unreachable engine");
  }
}

WalkDistribution distribution_reference(const WeightVector& w) {
  const int n = w.size();
  if (n > 22)
    throw resource_error("distribution_reference is limited to n <= 22");
  std::map<Rat, std::uint64_t> acc;
  const std::uint64_t total = std::uint64_t(1) << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Rat sum = 0;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1)
        sum += w.weights()[static_cast<std::size_t>(i)];
      else
        sum -= w.weights()[static_cast<std::size_t>(i)];
    }
    ++acc[sum];
  }
  std::vector<Rat> values;
  std::vector<BigCount> counts;
  for (auto& [value, count] : acc) {
    values.push_back(value);
    counts.push_back(BigCount(static_cast<unsigned long>(count)));
  }
  return WalkDistribution::from_support(n, std::move(values), std::move(counts));
}

DyadicProb tail_prob(const WeightVector& w, const Rat& x, Engine engine) {
  return distribution(w, engine).tail_geq(x);
}

DyadicProb point_prob(const WeightVector& w, const Rat& x, Engine engine) {
  return distribution(w, engine).point_mass(x);
}

IntervalResult best_interval_prob(const WalkDistribution& dist,
                                  const WeightVector& w, long k) {
  if (k < 1) throw std::domain_error("best_interval_prob: k must be >= 1");
  Rat width(2 * k);
  BigCount best_count = -1;
  Rat best_right;
  for (std::size_t j = 0; j < dist.support_size(); ++j) {
    const Rat& v = dist.value(j);
    BigCount c = dist.count_in(v - width, v);
    if (c > best_count) {
      best_count = c;
      best_right = v;
    }
  }
  IntervalResult r;
  r.x_star = best_right - Rat(k);
  r.x_star.canonicalize();
  r.prob = DyadicProb::from_count(best_count,
                                  static_cast<unsigned long>(dist.n()));
  r.hypothesis_met = w.all_at_least_one();
  return r;
}

IntervalResult best_interval_prob(const WeightVector& w, long k,
                                  Engine engine) {
  WalkDistribution dist = distribution(w, engine);
  return best_interval_prob(dist, w, k);
}

}  // namespace walkbound
