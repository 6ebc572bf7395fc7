#include "doctest.h"

#include "trigcert/pi.hpp"
#include "trigcert/series.hpp"

#include <random>

using namespace trigcert;

namespace {
Rational q(long a, long b) { return make_rational(a, b); }
}  // namespace

TEST_CASE("elementary series") {
    RationalSeries s = ps_elementary(Elementary::sin, 7);
    std::vector<Rational> expect{0, 1, 0, q(-1, 6), 0, q(1, 120), 0, q(-1, 5040)};
    CHECK(s.coeffs() == expect);
    RationalSeries t = ps_elementary(Elementary::tan, 7);
    CHECK(t[1] == 1);
    CHECK(t[3] == q(1, 3));
    CHECK(t[5] == q(2, 15));
    CHECK(t[7] == q(17, 315));
    std::vector<Rational> c2{1, 0, -2, 0, q(2, 3)};
    CHECK(ps_elementary(Elementary::cos_2x, 4).coeffs() == c2);
    RationalSeries s2 = ps_elementary(Elementary::sin_squared, 6);
    CHECK(s2[2] == 1);
    CHECK(s2[4] == q(-1, 3));
    CHECK(s2[6] == q(2, 45));
    RationalSeries xc = ps_elementary(Elementary::x_cot, 6);
    CHECK(xc[0] == 1);
    CHECK(xc[2] == q(-1, 3));
    CHECK(xc[4] == q(-1, 45));
}

TEST_CASE("series arithmetic contracts") {
    RationalSeries x = RationalSeries::monomial(1, 1, 5);
    RationalSeries one = x / x;
    CHECK(one[0] == 1);
    CHECK(one.valuation() == 0);
    CHECK_THROWS_AS(x / RationalSeries(5), DomainError);
    CHECK_THROWS_AS(RationalSeries::constant(1, 5) / x, DomainError);
}

TEST_CASE("tan coefficient oracle agreement k <= 30") {
    RationalSeries t = ps_elementary(Elementary::tan, 61);
    for (unsigned k = 1; k <= 30; ++k) CHECK_MESSAGE(t[2 * static_cast<int>(k) - 1] == tan_coeff(k), "k=" << k);
}

TEST_CASE("mul/div round trip") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
        RationalSeries f(12), g(12);
        for (int i = 0; i <= 12; ++i) {
            f[i] = q(d(rng), 7);
            g[i] = q(d(rng), 5);
        }
        if (is_zero(g[0])) g[0] = 1;
        RationalSeries h = f / g;
        CHECK((h * g) == f);
    }
}

TEST_CASE("ratio taylor reproduces the printed expansions") {
    std::vector<Rational> w{q(8, 45), q(-8, 945), q(16, 14175), q(8, 467775), q(3184, 638512875),
                            q(272, 638512875), make_rational(Integer(7264), Integer("162820783125"))};
    CHECK(ratio_taylor(RatioId::wilker, 14) == w);
    auto h = ratio_taylor(RatioId::huygens, 6);
    CHECK(h == std::vector<Rational>{q(3, 20), q(1, 280), q(23, 33600)});
    auto h2 = ratio_taylor(RatioId::second_huygens, 6);
    CHECK(h2 == std::vector<Rational>{q(1, 60), q(-1, 280), q(-83, 100800)});
    auto w2 = ratio_taylor(RatioId::second_wilker, 6);
    CHECK(w2[2] == q(-4, 1575));
}

TEST_CASE("series tail bounds") {
    Rational ts = series_tail_bound(Elementary::sin, 7, 1);
    CHECK(ts >= q(1, 362880));
    CHECK(ts <= q(1, 40320));
    CHECK_THROWS_AS(series_tail_bound(Elementary::tan, 7, q(8, 5)), DomainError);
    CHECK(series_tail_bound(Elementary::cos, 3, 0) >= 0);

    // tan, order 7, radius 1/2: sampled against 256-bit enclosures
    const Rational T = series_tail_bound(Elementary::tan, 7, q(1, 2));
    RationalSeries t = ps_elementary(Elementary::tan, 7);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(1, 100000);
    for (int i = 0; i < 10000; ++i) {
        Rational x = make_rational(num(rng), 200000);
        Interval xi(x, 256);
        // tan via mpfr at 256 bits is only a sampling oracle here
        mpfr_t v;
        mpfr_init2(v, 256);
        mpfr_tan(v, xi.lo(), MPFR_RNDN);
        Rational tv;
        mpfr_get_q(tv.get_mpq_t(), v);
        mpfr_clear(v);
        Rational poly = 0, p = 1;
        for (int k = 0; k <= 7; ++k) {
            poly += t[k] * p;
            p *= x;
        }
        Rational err = abs(tv - poly);
        REQUIRE(err <= T * p + pow2(-200));
    }
}
