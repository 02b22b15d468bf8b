#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace luk {

/// Exact arbitrary-precision rational; always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (q > 0). Throws luk::Error on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// 2^e for any integer e (negative exponents give 1/2^|e|).
Rational pow2(long e);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational abs(const Rational& q);

/// ceil(log2(x)) for an integer x >= 1, exact.
unsigned long ceil_log2(const Integer& x);

/// One end of an interval on the rational line. An empty value means the
/// interval is unbounded on that side.
struct Endpoint {
  std::optional<Rational> value;
  bool open = false;

  static Endpoint unbounded() { return {}; }
  static Endpoint closed(Rational v) { return {std::move(v), false}; }
  static Endpoint open_at(Rational v) { return {std::move(v), true}; }
};

bool interval_empty(const Endpoint& lo, const Endpoint& hi);
bool interval_contains(const Endpoint& lo, const Endpoint& hi, const Rational& x);

/// The rational of smallest denominator in the interval, ties broken toward
/// zero. Requires a nonempty interval.
Rational simplest_in(const Endpoint& lo, const Endpoint& hi);

}  // namespace luk
