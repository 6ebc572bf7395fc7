#include "trigcert/trig_enclose.hpp"

#include "trigcert/pi.hpp"
#include "trigcert/series.hpp"

#include <cmath>
#include <stdexcept>

namespace trigcert {

namespace {

double max_abs(const Interval& x) { return std::max(std::fabs(x.lower()), std::fabs(x.upper())); }

// sum_{i<terms} (-1)^i x^(2i+offset)/(2i+offset)!, plus the remainder.
Interval taylor(const Interval& x, int terms, int offset) {
    const mpfr_prec_t prec = x.precision();
    const double a = max_abs(x);
    if (a > 32) throw DomainError("trig enclosure argument too large");
    Interval x2 = sqr(x);
    Interval term = offset == 0 ? Interval(1L, prec) : x;  // x^k / k!
    Interval sum(prec);
    int k = offset;
    for (int i = 0; i < terms; ++i) {
        if (i % 2 == 0) sum += term;
        else sum -= term;
        term = term * x2 / static_cast<unsigned long>((k + 1) * (k + 2));
        k += 2;
    }
    // term now holds x^k/k! for the first omitted power k
    const bool alternating = x.lower() >= 0 && a * a < static_cast<double>((k + 1) * (k + 2)) && a <= 2.0 + 1e-9;
    if (alternating && x.certainly_nonnegative()) {
        Interval tail = hull(Interval(prec), term);
        if (terms % 2 == 1) tail = -tail;
        return sum + tail;
    }
    // Lagrange: |R| <= |x|^k / k!
    Interval m = magnitude(term);
    return sum + hull(-m, m);
}

Interval clamp_unit(const Interval& v) {
    const mpfr_prec_t prec = v.precision();
    auto r = intersect(v, Interval(Rational(-1), Rational(1), prec));
    return r ? *r : v;
}

}  // namespace

int trig_terms_for(const Interval& x, mpfr_prec_t precision) {
    const double a = std::max(max_abs(x), 0.5);
    // smallest N with a^N / N! < 2^-(precision+8), counting in log2
    double log_term = 0;
    int n = 0;
    const double target = -static_cast<double>(precision) - 8;
    while (true) {
        ++n;
        log_term += std::log2(a) - std::log2(static_cast<double>(n));
        if (n > 2 * a && log_term < target) break;
    }
    return n / 2 + 2;
}

Interval sin_enclose(const Interval& x, int terms) {
    if (terms <= 0) terms = trig_terms_for(x, x.precision());
    if (terms < 2) terms = 2;
    return clamp_unit(taylor(x, terms, 1));
}

Interval cos_enclose(const Interval& x, int terms) {
    if (terms <= 0) terms = trig_terms_for(x, x.precision());
    if (terms < 2) terms = 2;
    return clamp_unit(taylor(x, terms, 0));
}

Interval tan_enclose(const Interval& x, int terms) {
    Interval c = cos_enclose(x, terms);
    if (c.contains_zero()) throw DomainError("tan near a singularity: cosine enclosure contains 0");
    return sin_enclose(x, terms) / c;
}

Interval tan_remainder(unsigned n, const Interval& x) {
    Interval r = tan_enclose(x);
    for (unsigned k = 1; k <= n; ++k) r -= int_pow(x, 2 * k - 1) * tan_coeff(k);
    return r;
}

std::pair<Interval, Interval> tan_tail_bracket(unsigned n, const Interval& x) {
    if (n == 0) throw std::invalid_argument("tan_tail_bracket needs n >= 1");
    const mpfr_prec_t prec = x.precision();
    Interval base = int_pow(x, 2 * n) * tan_enclose(x);
    Interval lower = base * tan_coeff(n + 1);
    Interval two_over_pi = Interval(2L, prec) / pi_enclosure(prec);
    Interval upper = base * int_pow(two_over_pi, 2 * n);
    return {lower, upper};
}

}  // namespace trigcert
