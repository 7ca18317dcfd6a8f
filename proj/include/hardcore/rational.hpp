#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hardcore {

using Integer = mpz_class;
/// Always canonical: positive denominator, reduced.
using Rational = mpq_class;

/// Accepts "p", "p/q", "-p/q" and decimal forms like "0.25" or "1e-30".
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, long exponent);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// The rational with the smallest denominator (then smallest |numerator|) in [lo, hi].
Rational simplest_in(const Rational& lo, const Rational& hi);

inline int sign(const Rational& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }

}  // namespace hardcore
