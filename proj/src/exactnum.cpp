#include "walkbound/exactnum.hpp"

#include <cmath>
#include <cctype>
#include <cstddef>
#include <utility>

namespace walkbound {

BigCount binom(int n, long j) {
  if (n < 0) throw std::domain_error("binom: n must be non-negative");
  if (j < 0 || j > n) return 0;
  long jj = j;
  if (jj > n - jj) jj = n - jj;
  // Multiplicative formula; each intermediate division is exact.
  BigCount r = 1;
  for (long i = 1; i <= jj; ++i) {
    r *= static_cast<unsigned long>(n - jj + i);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

BigCount binom_tail_sum(int n, long t_lo) {
  if (t_lo > n) return 0;
  if (t_lo < 0) t_lo = 0;
  BigCount term = binom(n, t_lo);
  BigCount sum = term;
  for (long t = t_lo; t < n; ++t) {
    // C(n, t+1) = C(n, t) * (n - t) / (t + 1)
    term *= static_cast<unsigned long>(n - t);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(),
                    static_cast<unsigned long>(t + 1));
    sum += term;
  }
  return sum;
}

void DyadicProb::canonicalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  unsigned long tz = mpz_scan1(num_.get_mpz_t(), 0);
  unsigned long shift = tz < exp_ ? tz : exp_;
  if (shift > 0) {
    num_ >>= shift;
    exp_ -= shift;
  }
}

DyadicProb DyadicProb::from_count(BigCount count, unsigned long exponent) {
  if (count < 0) throw std::domain_error("dyadic numerator must be non-negative");
  DyadicProb p(std::move(count), exponent);
  p.canonicalize();
  BigCount limit = 1;
  limit <<= p.exp_;
  if (p.num_ > limit) throw std::domain_error("dyadic probability exceeds 1");
  return p;
}

DyadicProb DyadicProb::from_double_exact(double v) {
  if (!(v >= 0.0) || v > 1.0 || !std::isfinite(v))
    throw std::domain_error("from_double_exact requires v in [0,1]");
  int e2 = 0;
  double m = std::frexp(v, &e2);  // v = m * 2^e2, m in [0.5, 1)
  long long mant = static_cast<long long>(std::ldexp(m, 53));
  // v = mant * 2^(e2 - 53); e2 <= 1 for v <= 1.
  long exp = 53 - e2;
  BigCount num = static_cast<long>(mant);
  if (exp < 0) {  // only v == 1 (mant = 2^52, e2 = 1)
    num <<= static_cast<unsigned long>(-exp);
    exp = 0;
  }
  return from_count(std::move(num), static_cast<unsigned long>(exp));
}

DyadicProb DyadicProb::operator+(const DyadicProb& other) const {
  unsigned long e = exp_ > other.exp_ ? exp_ : other.exp_;
  BigCount n = (num_ << (e - exp_)) + (other.num_ << (e - other.exp_));
  return from_count(std::move(n), e);
}

DyadicProb DyadicProb::operator-(const DyadicProb& other) const {
  unsigned long e = exp_ > other.exp_ ? exp_ : other.exp_;
  BigCount a = num_ << (e - exp_);
  BigCount b = other.num_ << (e - other.exp_);
  if (a < b) throw std::domain_error("dyadic subtraction below zero");
  return from_count(a - b, e);
}

DyadicProb DyadicProb::halved() const {
  if (num_ == 0) return zero();
  return DyadicProb(num_, exp_ + 1);  // numerator stays odd
}

DyadicProb DyadicProb::doubled_clamped() const {
  if (num_ == 0) return zero();
  if (exp_ == 0) return one();  // value is already 1
  DyadicProb d(num_, exp_ - 1);
  BigCount limit = 1;
  limit <<= d.exp_;
  if (d.num_ > limit) return one();
  return d;
}

std::strong_ordering DyadicProb::operator<=>(const DyadicProb& other) const {
  unsigned long e = exp_ > other.exp_ ? exp_ : other.exp_;
  BigCount a = num_ << (e - exp_);
  BigCount b = other.num_ << (e - other.exp_);
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigCount DyadicProb::scaled_pow2(unsigned long n) const {
  if (exp_ > n)
    throw std::domain_error("scaled_pow2: exponent exceeds requested power");
  return num_ << (n - exp_);
}

std::string DyadicProb::to_fraction_string() const {
  if (exp_ == 0) return num_.get_str();
  BigCount den = 1;
  den <<= exp_;
  return num_.get_str() + "/" + den.get_str();
}

std::string DyadicProb::to_pow2_string() const {
  return num_.get_str() + "/2^" + std::to_string(exp_);
}

std::string DyadicProb::to_decimal(int digits) const {
  if (digits < 1) throw std::domain_error("to_decimal: digits must be >= 1");
  BigCount scaled = num_;
  for (int i = 0; i < digits; ++i) scaled *= 10;
  BigCount q = scaled >> exp_;
  BigCount rem = scaled - (q << exp_);
  BigCount twice = rem << 1;
  BigCount den = 1;
  den <<= exp_;
  int c = cmp(twice, den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  std::string s = q.get_str();
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return s;
}

std::string DyadicProb::to_exact_decimal() const {
  int digits = exp_ == 0 ? 1 : static_cast<int>(exp_);
  std::string s = to_decimal(digits);
  std::size_t last = s.find_last_not_of('0');
  if (s[last] == '.') ++last;  // keep one fractional digit
  return s.substr(0, last + 1);
}

double DyadicProb::to_double() const {
  mpq_class q(num_);
  mpq_class r;
  mpq_div_2exp(r.get_mpq_t(), q.get_mpq_t(), exp_);
  return r.get_d();
}

DyadicProb DyadicProb::parse(const std::string& text) {
  std::string s = text;
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw parse_error("empty dyadic value");
  s = s.substr(b, e - b + 1);

  auto digits_only = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  try {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
      if (!digits_only(s)) throw parse_error("");
      return from_count(BigCount(s, 10), 0);
    }
    std::string p = s.substr(0, slash);
    std::string q = s.substr(slash + 1);
    if (!digits_only(p)) throw parse_error("");
    BigCount num(p, 10);
    if (q.rfind("2^", 0) == 0) {
      std::string es = q.substr(2);
      if (!digits_only(es)) throw parse_error("");
      return from_count(std::move(num), std::stoul(es));
    }
    if (!digits_only(q)) throw parse_error("");
    BigCount den(q, 10);
    if (den == 0 || mpz_popcount(den.get_mpz_t()) != 1)
      throw parse_error("");
    return from_count(std::move(num), mpz_scan1(den.get_mpz_t(), 0));
  } catch (const std::domain_error& err) {
    throw parse_error(std::string("invalid dyadic value '") + text + "': " +
                      err.what());
  } catch (const parse_error&) {
    throw parse_error("malformed dyadic value: '" + text + "'");
  } catch (const std::exception&) {
    throw parse_error("malformed dyadic value: '" + text + "'");
  }
}

DyadicProb dyadic_add_clamped(const DyadicProb& a, const DyadicProb& b) {
  unsigned long e = std::max(a.exponent(), b.exponent());
  BigCount n = (a.numerator() << (e - a.exponent())) +
               (b.numerator() << (e - b.exponent()));
  BigCount limit = 1;
  limit <<= e;
  if (n > limit) return DyadicProb::one();
  return DyadicProb::from_count(std::move(n), e);
}

}  // namespace walkbound
