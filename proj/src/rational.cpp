#include "luk/rational.hpp"

#include "luk/errors.hpp"

#include <cctype>

namespace luk {

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error("malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational q(Integer(1), p);
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

unsigned long ceil_log2(const Integer& x) {
  if (x <= 1) return 0;
  Integer y = x - 1;
  return mpz_sizeinbase(y.get_mpz_t(), 2);
}

bool interval_contains(const Endpoint& lo, const Endpoint& hi, const Rational& x) {
  if (lo.value && (lo.open ? x <= *lo.value : x < *lo.value)) return false;
  if (hi.value && (hi.open ? x >= *hi.value : x > *hi.value)) return false;
  return true;
}

bool interval_empty(const Endpoint& lo, const Endpoint& hi) {
  if (!lo.value || !hi.value) return false;
  if (*lo.value < *hi.value) return false;
  if (*lo.value > *hi.value) return true;
  return lo.open || hi.open;
}

namespace {

// Interval assumed nonempty, not containing 0, and lying in the positive reals.
Rational simplest_positive(const Endpoint& lo, const Endpoint& hi) {
  const Rational& low = *lo.value;
  Integer fl = floor(low);
  bool low_is_int = Rational(fl) == low;
  Rational cand = (low_is_int && !lo.open) ? low : Rational(fl + 1);
  if (interval_contains(lo, hi, cand)) return cand;
  // The interval sits strictly inside (fl, fl + 1); write x = fl + 1/y.
  Endpoint ylo{Rational(1) / (*hi.value - fl), hi.open};
  Endpoint yhi = low_is_int ? Endpoint::unbounded() : Endpoint{Rational(1) / (low - fl), lo.open};
  Rational y = simplest_positive(ylo, yhi);
  return Rational(fl) + Rational(1) / y;
}

}  // namespace

Rational simplest_in(const Endpoint& lo, const Endpoint& hi) {
  if (interval_empty(lo, hi)) throw Error("simplest_in: empty interval");
  if (interval_contains(lo, hi, Rational(0))) return Rational(0);
  if (hi.value && *hi.value <= 0) {
    Endpoint mlo{Rational(-*hi.value), hi.open};
    Endpoint mhi = lo.value ? Endpoint{Rational(-*lo.value), lo.open} : Endpoint::unbounded();
    return -simplest_positive(mlo, mhi);
  }
  return simplest_positive(lo, hi);
}

}  // namespace luk
