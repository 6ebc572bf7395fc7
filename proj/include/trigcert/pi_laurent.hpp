#pragma once

// Exact Laurent polynomials in pi with rational coefficients.
//
// Every closed-form sharp constant of the Wilker/Huygens family lives in this
// ring, e.g. (241920 - 2688 pi^4 + 32 pi^6) / (945 pi^8). Since pi is
// transcendental, an element is zero iff all its coefficients are zero, so
// equality and zero tests are exact.

#include "trigcert/interval.hpp"
#include "trigcert/rational.hpp"

#include <map>
#include <string>

namespace trigcert {

class PiLaurent {
public:
    PiLaurent() = default;
    PiLaurent(const Rational& constant);  // NOLINT(google-explicit-constructor)
    PiLaurent(long constant);             // NOLINT(google-explicit-constructor)

    static PiLaurent monomial(const Rational& coefficient, int power);
    static PiLaurent pi_power(int power) { return monomial(1, power); }
    /// (pi/2)^power, any integer power.
    static PiLaurent half_pi_power(int power);

    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coefficient(int power) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    bool is_monomial() const { return terms_.size() == 1; }

    PiLaurent& operator+=(const PiLaurent& b);
    PiLaurent& operator-=(const PiLaurent& b);
    PiLaurent& operator*=(const PiLaurent& b);
    PiLaurent& operator*=(const Rational& b);

    friend PiLaurent operator-(const PiLaurent& a);
    friend bool operator==(const PiLaurent& a, const PiLaurent& b) { return a.terms_ == b.terms_; }

    /// Nonnegative powers for any element; negative powers only for monomials.
    PiLaurent pow(int e) const;

    /// Exact quotient by a nonzero monomial c*pi^p.
    PiLaurent divided_by(const PiLaurent& monomial_divisor) const;

    /// Enclosure of the value using the supplied enclosure of pi.
    Interval eval(const Interval& pi) const;

    /// e.g. "256*pi^-8 - 128/45*pi^-4 + 32/945*pi^-2"
    std::string to_string() const;

private:
    std::map<int, Rational> terms_;

    void add_term(int power, const Rational& c);
};

PiLaurent operator+(PiLaurent a, const PiLaurent& b);
PiLaurent operator-(PiLaurent a, const PiLaurent& b);
PiLaurent operator*(PiLaurent a, const PiLaurent& b);
PiLaurent operator*(PiLaurent a, const Rational& b);
PiLaurent operator*(const Rational& b, PiLaurent a);

inline bool is_zero(const PiLaurent& p) { return p.is_zero(); }
inline std::string to_string(const PiLaurent& p) { return p.to_string(); }

/// Enclosure of sum c_p pi^p at the given precision.
/// Throws std::invalid_argument when precision_bits < 8.
Interval pilaurent_eval(const PiLaurent& c, mpfr_prec_t precision_bits);

/// Sign of a nonzero element, decided by escalating precision; 0 iff zero.
int exact_sign(const PiLaurent& c);

}  // namespace trigcert
