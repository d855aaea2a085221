#include "walkbound/rational.hpp"

#include <cctype>
#include <cstddef>

namespace walkbound {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat make_rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rational(const std::string& text) {
  std::string s = text;
  // trim
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw parse_error("empty rational");
  s = s.substr(b, e - b + 1);

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s = s.substr(1);
  }
  if (s.empty()) throw parse_error("malformed rational: '" + text + "'");

  Rat r;
  if (std::size_t slash = s.find('/'); slash != std::string::npos) {
    std::string p = s.substr(0, slash);
    std::string q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q))
      throw parse_error("malformed rational: '" + text + "'");
    mpz_class num(p, 10), den(q, 10);
    if (den == 0) throw parse_error("zero denominator: '" + text + "'");
    r = Rat(num, den);
  } else if (std::size_t dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot);
    std::string fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty())
      throw parse_error("malformed rational: '" + text + "'");
    if (!ip.empty() && !all_digits(ip))
      throw parse_error("malformed rational: '" + text + "'");
    if (!fp.empty() && !all_digits(fp))
      throw parse_error("malformed rational: '" + text + "'");
    mpz_class num(ip.empty() ? std::string("0") : ip, 10);
    mpz_class den = 1;
    for (char c : fp) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    r = Rat(num, den);
  } else {
    if (!all_digits(s)) throw parse_error("malformed rational: '" + text + "'");
    r = Rat(mpz_class(s, 10));
  }
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_to_decimal(const Rat& r, int max_digits) {
  if (max_digits < 1) throw std::domain_error("max_digits must be >= 1");
  bool negative = r < 0;
  mpz_class num = abs(r.get_num());
  const mpz_class& den = r.get_den();

  // Exact expansion length, when one exists within max_digits.
  int digits = max_digits;
  {
    mpz_class pow10 = 1;
    for (int d = 0; d <= max_digits; ++d) {
      if (mpz_divisible_p(pow10.get_mpz_t(), den.get_mpz_t())) {
        digits = d < 1 ? 1 : d;
        break;
      }
      pow10 *= 10;
    }
  }

  mpz_class scaled = num;
  for (int i = 0; i < digits; ++i) scaled *= 10;
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(),
              den.get_mpz_t());
  mpz_class twice = rem * 2;
  int cmp = ::cmp(twice, den);
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string s = q.get_str();
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (negative && q != 0) s.insert(0, "-");
  return s;
}

mpz_class rat_ceil(const Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

mpz_class rat_floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace walkbound
