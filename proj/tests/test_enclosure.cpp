#include "doctest.h"

#include "trigcert/interval.hpp"
#include "trigcert/pi.hpp"
#include "trigcert/pi_laurent.hpp"

#include <random>

using namespace trigcert;

TEST_CASE("pi enclosure") {
    Interval p16 = pi_enclosure(16);
    CHECK(p16.contains(parse_rational("3.14159265")));
    CHECK(p16.width() <= std::ldexp(1.0, -12));
    for (mpfr_prec_t prec : {8, 32, 64, 200, 1000}) {
        Interval p = pi_enclosure(prec);
        CHECK(p.contains(parse_rational("3.14159265358979")) == (prec < 50));
        CHECK(p.width() <= std::ldexp(1.0, 4 - static_cast<int>(prec)));
    }
    CHECK(pi_enclosure(1000).contains(parse_rational("3.14159265358979323846264338327950288419716939937510")) == false);
    CHECK(compare(pi_enclosure(1000), Interval(parse_rational("3.1415926535897932384626433832795028841971693993751"), 1000)) == Ordering::greater);
    CHECK(compare(pi_enclosure(1000), Interval(parse_rational("3.1415926535897932384626433832795028841971693993752"), 1000)) == Ordering::less);
    CHECK(compare(sqr(pi_enclosure(32)), Interval(10L, 32)) == Ordering::less);
    CHECK(compare(sqr(half_pi_enclosure(32)) * 8L, Interval(20L, 32)) == Ordering::less);
    CHECK_THROWS(pi_enclosure(4));
}

TEST_CASE("interval basics") {
    Interval a(Rational(1), Rational(2), 64), b(Rational(3), Rational(4), 64);
    Interval s = a + b;
    CHECK(s.lower_rational() == 4);
    CHECK(s.upper_rational() == 6);
    Interval z(Rational(-1), Rational(1), 64);
    CHECK_THROWS_AS(a / z, DomainError);
    Interval m = a * z;
    CHECK(m.lower_rational() == -2);
    CHECK(m.upper_rational() == 2);
    CHECK(compare(sqr(pi_enclosure(16)), Interval(10L, 16)) == Ordering::less);
    CHECK(certified_decimal(Interval(parse_rational("0.0012093"), parse_rational("0.0012094"), 64), 10) == "0.001209");
}

namespace {

// Random expression trees over + - * / on rational leaves; exact vs interval.
struct Eval {
    Rational exact;
    Interval iv;
};

Eval random_tree(std::mt19937_64& rng, int depth, const Rational& x, mpfr_prec_t prec) {
    std::uniform_int_distribution<int> op(0, depth == 0 ? 1 : 6);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    int o = op(rng);
    if (o == 0) return {x, Interval(x, prec)};
    if (o == 1) {
        Rational c = make_rational(num(rng), den(rng));
        return {c, Interval(c, prec)};
    }
    Eval a = random_tree(rng, depth - 1, x, prec);
    Eval b = random_tree(rng, depth - 1, x, prec);
    switch (o) {
        case 2: return {a.exact + b.exact, a.iv + b.iv};
        case 3: return {a.exact - b.exact, a.iv - b.iv};
        case 4: return {a.exact * b.exact, a.iv * b.iv};
        case 5:
            if (b.iv.contains_zero()) return a;
            return {a.exact / b.exact, a.iv / b.iv};
        default: return {a.exact * a.exact, sqr(a.iv)};
    }
}

}  // namespace

TEST_CASE("random-point containment") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 997);
    for (int i = 0; i < 1000; ++i) {
        Rational x = make_rational(num(rng), den(rng));
        auto seed = rng();
        std::mt19937_64 r1(seed);
        Eval e = random_tree(r1, 4, x, 53);
        REQUIRE(e.iv.contains(e.exact));
        // refinement: a higher-precision evaluation of the same tree is not wider
        std::mt19937_64 r2(seed);
        Eval f = random_tree(r2, 4, x, 200);
        CHECK(f.iv.contains(e.exact));
        CHECK(e.iv.contains(f.iv.with_precision(53)));
    }
}

TEST_CASE("PiLaurent") {
    PiLaurent b;
    b += PiLaurent::monomial(256, -8);
    b += PiLaurent::monomial(make_rational(-128, 45), -4);
    b += PiLaurent::monomial(make_rational(32, 945), -2);
    for (mpfr_prec_t prec : {32, 64, 128, 256}) {
        Interval pi = pi_enclosure(prec);
        Interval lit = (Interval(241920L, prec) - int_pow(pi, 4) * 2688L + int_pow(pi, 6) * 32L) /
                       (int_pow(pi, 8) * 945L);
        Interval lb = pilaurent_eval(b, prec);
        CHECK(intersect(lit, lb).has_value());
    }
    CHECK(certified_decimal(pilaurent_eval(b, 128), 6) == "0.001209");
    CHECK(certified_decimal(pilaurent_eval(PiLaurent(make_rational(16, 14175)), 64), 6) == "0.001128");
    Interval z = pilaurent_eval(PiLaurent(), 64);
    CHECK(z.is_point());
    CHECK(z.lower_rational() == 0);
    CHECK((b - b).is_zero());
    CHECK(PiLaurent::half_pi_power(2) == PiLaurent::monomial(make_rational(1, 4), 2));
    CHECK(exact_sign(b) == 1);
    CHECK(b.to_string() == "32/945*pi^-2 - 128/45*pi^-4 + 256*pi^-8");
}
