#include "doctest.h"

#include "trigcert/catalog.hpp"
#include "trigcert/expressions.hpp"
#include "trigcert/pi.hpp"
#include "trigcert/sequences.hpp"
#include "trigcert/series.hpp"
#include "trigcert/trig_enclose.hpp"

#include <cmath>
#include <random>

using namespace trigcert;

namespace {

const TrigPoly X = TrigPoly::x();
const TrigPoly S = TrigPoly::sin();
const TrigPoly C = TrigPoly::cos();

// Random rational in (lo, hi) with denominator 2^20.
Rational random_point(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    return make_rational(static_cast<long>(std::ldexp(u(rng), 20)), 1L << 20);
}

long double reference(ExpressionId id, long double x) {
    const long double s = std::sin(x), t = std::tan(x);
    switch (id) {
        case ExpressionId::wilker: return (s / x) * (s / x) + t / x;
        case ExpressionId::second_wilker: return (x / s) * (x / s) + x / t;
        case ExpressionId::huygens: return 2 * s / x + t / x;
        case ExpressionId::second_huygens: return 2 * x / s + x / t;
        default: return NAN;
    }
}

}  // namespace

TEST_CASE("kernel identities hold as trigonometric polynomials") {
    const TrigPoly N = wilker_ratio_numerator();
    const TrigPoly g = Rational(945) * (X * S * N.derivative() - (9L * S + X * C) * N);
    CHECK(g == kernel_wilker_ratio());

    const TrigPoly NF = huygens_ratio_numerator();
    const TrigPoly G = Rational(420) * (X * S * NF.derivative() - (7L * S + 2L * X * C) * NF);
    CHECK(G == kernel_huygens_ratio());
}

TEST_CASE("kernels vanish to high order at 0 with positive leading terms") {
    auto lg = leading_term(kernel_wilker_ratio(), 80);
    REQUIRE(lg);
    CHECK(exact_sign(lg->second) > 0);
    auto lG = leading_term(kernel_huygens_ratio(), 80);
    REQUIRE(lG);
    CHECK(exact_sign(lG->second) > 0);
}

TEST_CASE("expression enclosures contain higher-precision values and agree with libm") {
    std::mt19937_64 rng(7);
    const ExpressionId ids[] = {ExpressionId::wilker,  ExpressionId::second_wilker, ExpressionId::huygens,
                                ExpressionId::second_huygens, ExpressionId::ratio_f, ExpressionId::ratio_F,
                                ExpressionId::kernel_g, ExpressionId::kernel_G};
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        const Rational x = random_point(rng, 0.05, 1.5);
        for (ExpressionId id : ids) {
            const Interval coarse = eval_expression(id, Interval(x, 128));
            const Interval fine = eval_expression(id, Interval(x, 512));
            REQUIRE(coarse.contains(fine));
            const long double ref = reference(id, static_cast<long double>(x.get_d()));
            if (!std::isnan(ref)) {
                CHECK(std::fabs(static_cast<long double>(fine.lower()) - ref) <= 1e-12L * std::fabs(ref));
                ++checked;
            }
        }
    }
    CHECK(checked == 2000);
}

TEST_CASE("printed kernels match their trigonometric-polynomial forms pointwise") {
    std::mt19937_64 rng(11);
    const TrigPoly g = kernel_wilker_ratio(), G = kernel_huygens_ratio();
    for (int i = 0; i < 200; ++i) {
        const Interval x(random_point(rng, 0.3, 1.57), 256);
        CHECK(compare(g.eval(x), eval_expression(ExpressionId::kernel_g, x)) == Ordering::undecided);
        CHECK(compare(G.eval(x), eval_expression(ExpressionId::kernel_G, x)) == Ordering::undecided);
    }
}

TEST_CASE("tangent remainder lies strictly inside its bracket at 50 points, n = 1..5") {
    std::mt19937_64 rng(3);
    for (unsigned n = 1; n <= 5; ++n) {
        for (int i = 0; i < 50; ++i) {
            const Rational a = random_point(rng, 0.05, 1.55);
            const Interval x(a, 256);
            const Interval r = tan_remainder(n, x);
            auto [l, h] = tan_tail_bracket(n, x);
            CHECK(l.certainly_positive());
            CHECK(compare(l, r) == Ordering::less);
            CHECK(compare(r, h) == Ordering::less);
        }
    }
}

TEST_CASE("cleared forms have the sign of the raw gaps") {
    std::mt19937_64 rng(5);
    for (const auto& c : catalog()) {
        const unsigned n = c.parameterized() ? c.n_default : 0;
        const ClearedForm cf = cleared_form(c, n);
        const double end = c.domain_end ? c.domain_end->get_d() : 1.5707;
        int compared = 0;
        for (int i = 0; i < 100; ++i) {
            const Interval x(random_point(rng, 0.02, end), 256);
            const Interval raw = eval_gap(c, n, x);
            const Interval cleared = eval_cleared(cf.form, x);
            if (raw.contains_zero() || cleared.contains_zero()) continue;
            ++compared;
            CHECK_MESSAGE(raw.certainly_positive() == cleared.certainly_positive(), c.id);
        }
        CHECK_MESSAGE(compared >= 90, c.id);
    }
}

TEST_CASE("eval_cleared covers x = 0 and the kernel is positive at 1") {
    const TrigPoly g = kernel_wilker_ratio();
    CHECK(eval_cleared(g, Interval(0L, 128)).contains(Rational(0)));
    const TrigPoly f = C + X;  // f(0) = 1
    CHECK(eval_cleared(f, Interval(0L, 128)).contains(Rational(1)));
    CHECK(eval_cleared(g, Interval(1L, 128)).certainly_positive());
    CHECK(eval_cleared(kernel_huygens_ratio(), Interval(1L, 128)).certainly_positive());
}

TEST_CASE("ratio f approaches its closed-form limit at pi/2") {
    const PiLaurent b = PiLaurent::monomial(256, -8) + PiLaurent::monomial(make_rational(-128, 45), -4) +
                        PiLaurent::monomial(make_rational(32, 945), -2);
    const Interval limit = pilaurent_eval(b, 256);
    Interval previous(1L, 256);
    for (int j = 4; j <= 12; ++j) {
        const Interval x = half_pi_enclosure(256) - pow2(-j);
        // The ratio increases towards b, so the distance is limit - value.
        const Interval d = limit - eval_expression(ExpressionId::ratio_f, x);
        CHECK(d.certainly_positive());
        CHECK(compare(d, Interval(pow2(-j), 256)) == Ordering::less);
        CHECK(compare(d, previous) == Ordering::less);
        previous = d;
    }
    // At 0 the ratio tends to 16/14175.
    const Interval near0 = eval_expression(ExpressionId::ratio_f, Interval(make_rational(1, 1000), 256));
    CHECK(std::fabs(near0.lower() - 16.0 / 14175) < 1e-7);
}

TEST_CASE("Wilker and Huygens coefficients match the series of the expressions") {
    const int K = 20;
    const RationalSeries s2 = ps_elementary(Elementary::sin_squared, 2 * K + 2).shifted(-2);
    const RationalSeries t = ps_elementary(Elementary::tan, 2 * K + 2).shifted(-1);
    const RationalSeries s = ps_elementary(Elementary::sin, 2 * K + 2).shifted(-1);
    for (unsigned k = 3; k <= static_cast<unsigned>(K); ++k) {
        const int p = 2 * static_cast<int>(k) - 2;
        CHECK(wilker_coeff(k) == s2[p] + t[p]);
        CHECK(huygens_coeff(k) == 2 * s[p] + t[p]);
    }
}
