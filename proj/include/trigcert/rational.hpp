#pragma once

// Exact integers and fractions. Every coefficient law in the library is
// evaluated in these types; nothing here ever rounds.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace trigcert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws std::domain_error when den is zero.
Rational make_rational(const Integer& num, const Integer& den);

inline Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

/// Parses "p", "p/q" or a terminating decimal such as "0.999".
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// 2^e as an exact rational; e may be negative.
Rational pow2(long e);

/// q^e for integer e (q must be nonzero when e < 0).
Rational pow(const Rational& q, long e);

Integer pow(const Integer& z, unsigned long e);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace trigcert
