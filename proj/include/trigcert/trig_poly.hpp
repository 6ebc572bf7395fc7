#pragma once

// Exact trigonometric polynomials  sum c * x^p * cos(j x)  and  c * x^p * sin(j x)
// with j >= 0 and PiLaurent coefficients. Products are reduced with the
// product-to-sum rules, so every polynomial has a unique normal form and
// identities can be tested by equality.

#include "trigcert/interval.hpp"
#include "trigcert/pi_laurent.hpp"
#include "trigcert/power_series.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace trigcert {

struct TrigKey {
    int power = 0;      // x^power
    int freq = 0;       // j >= 0
    bool is_sin = false;

    friend bool operator<(const TrigKey& a, const TrigKey& b) {
        return std::tie(a.freq, a.is_sin, a.power) < std::tie(b.freq, b.is_sin, b.power);
    }
    friend bool operator==(const TrigKey& a, const TrigKey& b) {
        return a.power == b.power && a.freq == b.freq && a.is_sin == b.is_sin;
    }
};

class TrigPoly {
public:
    TrigPoly() = default;
    TrigPoly(const PiLaurent& c);  // NOLINT(google-explicit-constructor)
    TrigPoly(long c);              // NOLINT(google-explicit-constructor)

    static TrigPoly x(int power = 1);
    static TrigPoly cos(int freq = 1);
    static TrigPoly sin(int freq = 1);
    static TrigPoly term(const PiLaurent& c, int power, int freq, bool is_sin);

    const std::map<TrigKey, PiLaurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_power() const;
    int max_freq() const;

    TrigPoly& operator+=(const TrigPoly& b);
    TrigPoly& operator-=(const TrigPoly& b);
    TrigPoly& operator*=(const PiLaurent& c);
    TrigPoly& operator*=(const Rational& c) { return *this *= PiLaurent(c); }

    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator-(TrigPoly a) { return a *= PiLaurent(-1L); }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator*(TrigPoly a, const PiLaurent& c) { return a *= c; }
    friend TrigPoly operator*(const PiLaurent& c, TrigPoly a) { return a *= c; }
    friend TrigPoly operator*(TrigPoly a, const Rational& c) { return a *= c; }
    friend TrigPoly operator*(const Rational& c, TrigPoly a) { return a *= c; }
    friend TrigPoly operator*(TrigPoly a, long c) { return a *= PiLaurent(c); }
    friend TrigPoly operator*(long c, TrigPoly a) { return a *= PiLaurent(c); }
    friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.terms_ == b.terms_; }

    TrigPoly pow(unsigned e) const;
    TrigPoly derivative() const;

    /// The polynomial in t of  f(pi/2 - t).
    TrigPoly reflect_at_half_pi() const;

    /// Exact Taylor coefficients at 0 through x^degree.
    PowerSeries<PiLaurent> taylor(int degree) const;

    /// B with |f(x) - taylor(degree)(x)| <= B |x|^(degree+1) for every real x.
    /// Needs degree >= max_power().
    Interval taylor_remainder(int degree, mpfr_prec_t prec) const;

    /// Direct interval evaluation.
    Interval eval(const Interval& x) const;

    std::string to_string() const;

private:
    std::map<TrigKey, PiLaurent> terms_;

    void add(const TrigKey& k, const PiLaurent& c);
};

/// Precomputed per-frequency grouping used for Taylor-model range bounds on
/// subintervals: f(m + h) = sum_j P_j(h) cos(j h) + Q_j(h) sin(j h).
class TaylorModel {
public:
    TaylorModel(const TrigPoly& f, mpfr_prec_t prec, int trig_degree = 24);

    /// Enclosure of {f(x) : x in [m - r, m + r]} with m, r dyadic rationals.
    Interval range(const Rational& m, const Rational& r) const;

    mpfr_prec_t precision() const { return prec_; }

private:
    struct Group {
        int freq;
        std::vector<Interval> cos_coeffs;  // by power of x
        std::vector<Interval> sin_coeffs;
    };
    std::vector<Group> groups_;
    mpfr_prec_t prec_;
    int trig_degree_;
};

}  // namespace trigcert
