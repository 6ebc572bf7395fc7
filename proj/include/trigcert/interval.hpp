#pragma once

// Outward-rounded interval arithmetic with dyadic (binary floating) endpoints.
//
// Every operation returns an interval that contains the exact image of its
// operands. Endpoints are MPFR numbers; lower bounds are always rounded toward
// -inf and upper bounds toward +inf. The precision of a result is the larger
// of its operands' precisions.

#include "trigcert/rational.hpp"

#include <mpfr.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace trigcert {

/// Raised on division by an interval that contains zero and on evaluations
/// that approach a pole (tan near pi/2).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Interval {
public:
    static constexpr mpfr_prec_t default_precision = 128;

    explicit Interval(mpfr_prec_t prec = default_precision);
    Interval(long value, mpfr_prec_t prec);
    Interval(const Rational& value, mpfr_prec_t prec);
    Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec);

    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    /// Endpoints as exact rationals (they are dyadic, so this is lossless).
    Rational lower_rational() const;
    Rational upper_rational() const;
    Rational midpoint() const;

    /// Endpoints rounded outward to double.
    double lower() const;
    double upper() const;
    double width() const;

    /// Same set re-rounded outward to a different precision.
    Interval with_precision(mpfr_prec_t prec) const;

    bool contains(const Rational& q) const;
    bool contains(const Interval& other) const;
    bool contains_zero() const;
    bool is_point() const;

    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
    bool certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }

    /// +1 / -1 when the sign is certain and nonzero, 0 otherwise.
    int certain_sign() const;

    Interval& operator+=(const Interval& b);
    Interval& operator-=(const Interval& b);
    Interval& operator*=(const Interval& b);
    Interval& operator/=(const Interval& b);

    friend Interval operator-(const Interval& a);
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, long k);
    friend Interval operator/(const Interval& a, unsigned long k);
    friend Interval int_pow(const Interval& a, unsigned n);
    friend Interval sqr(const Interval& a);
    friend Interval abs(const Interval& a);
    friend Interval hull(const Interval& a, const Interval& b);
    friend std::optional<Interval> intersect(const Interval& a, const Interval& b);
    friend Interval mul_2si(const Interval& a, long e);
    friend Interval magnitude(const Interval& a);

private:
    mpfr_t lo_;
    mpfr_t hi_;

    void init(mpfr_prec_t prec);
};

inline Interval operator+(const Interval& a, const Rational& b) {
    return a + Interval(b, a.precision());
}
inline Interval operator-(const Interval& a, const Rational& b) {
    return a - Interval(b, a.precision());
}
inline Interval operator*(const Interval& a, const Rational& b) {
    return a * Interval(b, a.precision());
}
inline Interval operator*(const Rational& b, const Interval& a) { return a * b; }
inline Interval operator/(const Interval& a, const Rational& b) {
    return a / Interval(b, a.precision());
}
inline Interval operator-(const Rational& b, const Interval& a) {
    return Interval(b, a.precision()) - a;
}
inline Interval operator+(const Rational& b, const Interval& a) { return a + b; }

/// Smallest interval [0, m] with m >= |t| for all t in a.
Interval magnitude(const Interval& a);

enum class Ordering { less, greater, undecided };

/// Certain strict comparison: `less` means every point of a is below every
/// point of b.
Ordering compare(const Interval& a, const Interval& b);

/// Decimal digits that both endpoints share, truncated toward zero, e.g.
/// "0.001209" for an enclosure of 0.0012093... Never prints a digit the
/// interval does not certify.
std::string certified_decimal(const Interval& a, int max_fraction_digits = 20);

/// Both endpoints rounded to `digits` significant decimals, for display.
std::string to_string(const Interval& a, int digits = 20);

std::ostream& operator<<(std::ostream& os, const Interval& a);

}  // namespace trigcert
