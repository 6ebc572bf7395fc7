#include "doctest.h"

#include "trigcert/bernoulli.hpp"
#include "trigcert/pi.hpp"
#include "trigcert/rational.hpp"

#include <random>

using namespace trigcert;

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(7, 0) == 1);
}

TEST_CASE("rational parsing and normalization") {
    CHECK(parse_rational("6/8") == make_rational(3, 4));
    CHECK(parse_rational("-0.125") == make_rational(-1, 8));
    CHECK(parse_rational("17") == 17);
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK(to_string(make_rational(4, -6)) == "-2/3");

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-100000, 100000);
    for (int i = 0; i < 500; ++i) {
        long a = d(rng), b = d(rng);
        if (a == 0 || b == 0) continue;
        Rational q = make_rational(a, b);
        CHECK(q * make_rational(b, a) == 1);
        Rational r = q;
        r.canonicalize();
        CHECK(r == q);
        CHECK(q.get_den() > 0);
    }
}

TEST_CASE("bernoulli values") {
    CHECK(bernoulli_abs_even(1) == make_rational(1, 6));
    CHECK(bernoulli_abs_even(2) == make_rational(1, 30));
    CHECK(bernoulli_abs_even(3) == make_rational(1, 42));
    CHECK(bernoulli_abs_even(6) == make_rational(691, 2730));
    CHECK(BernoulliTable::shared().signed_value(1) == make_rational(-1, 2));
}

TEST_CASE("bernoulli recurrence closure m <= 120") {
    auto& t = BernoulliTable::shared();
    for (unsigned m = 2; m <= 120; ++m) {
        Rational s = 0;
        for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m, j)) * t.signed_value(j);
        CHECK_MESSAGE(s == 0, "m=" << m);
    }
}

TEST_CASE("bernoulli two-sided bound") {
    CHECK(bernoulli_bound_check(1, pi_enclosure(64)));
    CHECK(bernoulli_bound_check(10, pi_enclosure(128)));
    for (unsigned k = 1; k <= 60; ++k) CHECK_MESSAGE(bernoulli_bound_check(k, pi_enclosure(256)), "k=" << k);
    // a crude pi never yields a wrong "true"
    Interval wide(make_rational(3, 1), make_rational(4, 1), 64);
    CHECK_FALSE(bernoulli_bound_check(1, wide));
}
