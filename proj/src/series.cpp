#include "trigcert/series.hpp"

#include "trigcert/bernoulli.hpp"
#include "trigcert/pi.hpp"

#include <stdexcept>

namespace trigcert {

Elementary parse_elementary(std::string_view name) {
    if (name == "sin") return Elementary::sin;
    if (name == "cos") return Elementary::cos;
    if (name == "tan") return Elementary::tan;
    if (name == "sin2" || name == "sin^2") return Elementary::sin_squared;
    if (name == "cos2x") return Elementary::cos_2x;
    if (name == "xcot") return Elementary::x_cot;
    throw std::invalid_argument("unknown elementary function: " + std::string(name));
}

std::string to_string(Elementary e) {
    switch (e) {
        case Elementary::sin: return "sin";
        case Elementary::cos: return "cos";
        case Elementary::tan: return "tan";
        case Elementary::sin_squared: return "sin2";
        case Elementary::cos_2x: return "cos2x";
        case Elementary::x_cot: return "xcot";
    }
    return "?";
}

namespace {

RationalSeries sin_cos(bool is_sin, int order) {
    RationalSeries s(order);
    for (int i = is_sin ? 1 : 0; i <= order; i += 2) {
        Rational c = make_rational(Integer(1), factorial(static_cast<unsigned long>(i)));
        s[i] = ((i / 2) % 2 == 0) ? c : Rational(-c);
    }
    return s;
}

}  // namespace

RationalSeries ps_elementary(Elementary e, int order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    switch (e) {
        case Elementary::sin: return sin_cos(true, order);
        case Elementary::cos: return sin_cos(false, order);
        case Elementary::tan: {
            // sin/cos with cos(0) = 1 keeps the full order
            return sin_cos(true, order) / sin_cos(false, order);
        }
        case Elementary::sin_squared: {
            RationalSeries s = sin_cos(true, order);
            return s * s;
        }
        case Elementary::cos_2x: return sin_cos(false, order).scaled_argument(2);
        case Elementary::x_cot: {
            // x cos / sin = cos / (sin/x); needs sin to one extra order
            RationalSeries sx = sin_cos(true, order + 1).shifted(-1);
            return sin_cos(false, order) / sx;
        }
    }
    throw std::logic_error("unreachable");
}

Rational tan_coeff(unsigned k) {
    if (k == 0) throw std::invalid_argument("tan_coeff needs k >= 1");
    Rational p = pow2(2L * k);
    return p * (p - 1) * bernoulli_abs_even(k) / Rational(factorial(2 * k));
}

RatioId parse_ratio_id(std::string_view name) {
    if (name == "wilker-ratio") return RatioId::wilker;
    if (name == "second-wilker-ratio") return RatioId::second_wilker;
    if (name == "huygens-ratio") return RatioId::huygens;
    if (name == "second-huygens-ratio") return RatioId::second_huygens;
    throw std::invalid_argument("unknown ratio expression: " + std::string(name));
}

std::string to_string(RatioId r) {
    switch (r) {
        case RatioId::wilker: return "wilker-ratio";
        case RatioId::second_wilker: return "second-wilker-ratio";
        case RatioId::huygens: return "huygens-ratio";
        case RatioId::second_huygens: return "second-huygens-ratio";
    }
    return "?";
}

std::vector<std::string> ratio_names() {
    return {"wilker-ratio", "second-wilker-ratio", "huygens-ratio", "second-huygens-ratio"};
}

RationalSeries ratio_series(RatioId id, int order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    // Every numerator vanishes to order 4, and x^3 tan x = x^4 (tan x / x).
    const int work = order + 4;
    RationalSeries s_over_x = sin_cos(true, work + 1).shifted(-1);  // sin x / x
    RationalSeries cos = sin_cos(false, work);
    RationalSeries t_over_x = s_over_x / cos;                        // tan x / x
    RationalSeries x_over_s = RationalSeries::constant(1, work) / s_over_x;
    RationalSeries x_over_t = cos * x_over_s;
    RationalSeries num(work);
    switch (id) {
        case RatioId::wilker:
            num = s_over_x * s_over_x + t_over_x - RationalSeries::constant(2, work);
            break;
        case RatioId::second_wilker:
            num = x_over_s * x_over_s + x_over_t - RationalSeries::constant(2, work);
            break;
        case RatioId::huygens:
            num = s_over_x * Rational(2) + t_over_x - RationalSeries::constant(3, work);
            break;
        case RatioId::second_huygens:
            num = x_over_s * Rational(2) + x_over_t - RationalSeries::constant(3, work);
            break;
    }
    return num.shifted(-4) / t_over_x.truncated(order);
}

std::vector<Rational> ratio_taylor(RatioId id, int order) {
    if (order < 1) throw std::invalid_argument("ratio_taylor needs order >= 1");
    RationalSeries s = ratio_series(id, order - 1);
    std::vector<Rational> out;
    for (int i = 0; i < order; i += 2) out.push_back(s[i]);
    return out;
}

namespace {

// Geometric tail sum_{i>=0} q^i for 0 <= q < 1.
Rational geometric(const Rational& q) {
    if (q >= 1) throw DomainError("series_tail_bound: radius outside the convergence zone");
    return 1 / (1 - q);
}

// Rational r with 2/pi < r, certified against the pi enclosure.
Rational two_over_pi_upper() {
    static const Rational r = [] {
        Rational q = make_rational(6367, 10000);
        Interval v = Interval(2L, 64) / pi_enclosure(64);
        if (compare(v, Interval(q, 64)) != Ordering::less) throw std::logic_error("2/pi bound");
        return q;
    }();
    return r;
}

}  // namespace

Rational series_tail_bound(Elementary e, int order, const Rational& radius) {
    if (order < 0) throw std::invalid_argument("negative series order");
    if (sgn(radius) < 0) throw DomainError("negative radius");
    const unsigned long n1 = static_cast<unsigned long>(order) + 1;
    switch (e) {
        case Elementary::sin:
        case Elementary::cos:
            // Lagrange remainder, every derivative bounded by 1
            return make_rational(Integer(1), factorial(n1));
        case Elementary::sin_squared:
            // (1 - cos 2x)/2: derivatives of order >= 1 bounded by 2^(k-1)
            return make_rational(pow(Integer(2), n1 - 1), factorial(n1));
        case Elementary::cos_2x:
            return make_rational(pow(Integer(2), n1), factorial(n1));
        case Elementary::tan: {
            // For k >= 2, t_k < (15/7) (2/pi)^2k by the two-sided Bernoulli bound.
            const Rational q = two_over_pi_upper();
            if (radius * q >= 1) throw DomainError("series_tail_bound: tan radius must stay below pi/2");
            Rational total = 0;
            unsigned k = 1;
            // first omitted odd power 2k-1 > order
            while (2 * static_cast<long>(k) - 1 <= order) ++k;
            if (k == 1) {
                // order 0: the omitted t_1 x contributes x / x^1 = 1
                total = 1;
                k = 2;
            }
            // sum_{j>=k} (15/7) q^2j r^(2j-1-n1)
            Rational first = make_rational(15, 7) * pow(q, 2L * k) * pow(radius, 2L * k - 1 - static_cast<long>(n1));
            total += first * geometric(q * q * radius * radius);
            return total;
        }
        case Elementary::x_cot: {
            // |coefficient of x^2k| = 2^2k |B_2k|/(2k)! < 4 pi^-2k, q = 1/pi < 0.3184
            const Rational q = make_rational(3184, 10000);
            if (radius * q >= 1) throw DomainError("series_tail_bound: x cot x radius must stay below pi");
            unsigned k = 1;
            while (2 * static_cast<long>(k) <= order) ++k;
            Rational first = 4 * pow(q, 2L * k) * pow(radius, 2L * k - static_cast<long>(n1));
            return first * geometric(q * q * radius * radius);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace trigcert
