#include "doctest.h"

#include "trigcert/catalog.hpp"
#include "trigcert/certifier.hpp"
#include "trigcert/expressions.hpp"
#include "trigcert/pi.hpp"
#include "trigcert/series.hpp"

#include <random>

using namespace trigcert;

namespace {

const TrigPoly X = TrigPoly::x();

Rational poly_value(const std::vector<Rational>& ascending, const Rational& x) {
    Rational v = 0;
    for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) v = v * x + *it;
    return v;
}

nlohmann::json without_timing(const Certificate& c) {
    nlohmann::json j = c.to_json();
    j["stats"].erase("seconds");
    return j;
}

}  // namespace

TEST_CASE("sharp Wilker lower bound is proved and its reversal refuted") {
    const InequalityCase& c = find_case("thm3.3-lower");
    const Certificate cert = certify_sign(c, 0);
    CHECK(cert.status == Status::proved);
    CHECK(cert.zero.certified);
    REQUIRE(cert.pi_half);
    CHECK(cert.pi_half->certified);
    CHECK(!cert.leaves.empty());
    for (const auto& leaf : cert.leaves) CHECK(leaf.sign == 1);

    const TrigPoly reversed = -cleared_form(c, 0).form;
    const Certificate bad = certify_positive(reversed, std::nullopt, {});
    CHECK(bad.status == Status::refuted);
    REQUIRE(bad.witness);
    CHECK(bad.witness->get_den() <= 65536);
    CHECK(eval_cleared(reversed, Interval(*bad.witness, 256)).certainly_negative());
    // The raw inequality fails at the witness as well.
    CHECK(eval_gap(c, 0, Interval(*bad.witness, 256)).certainly_positive());
}

TEST_CASE("Wilker's inequality is proved") {
    CHECK(certify_sign(find_case("wilker-1.1"), 0).status == Status::proved);
}

TEST_CASE("an interior dip is refuted at a small-denominator point") {
    // x ((x - 1)^2 - 1/100) is negative on (0.9, 1.1) only.
    const TrigPoly f = X * ((X - TrigPoly(1L)) * (X - TrigPoly(1L)) - TrigPoly(PiLaurent(make_rational(1, 100))));
    const Certificate cert = certify_positive(f, std::nullopt, {});
    REQUIRE(cert.status == Status::refuted);
    REQUIRE(cert.witness);
    const Rational w = *cert.witness;
    CHECK(w > make_rational(9, 10));
    CHECK(w < make_rational(11, 10));
    CHECK(w.get_den() <= 65536);
    CHECK(sgn(poly_value({0, make_rational(99, 100), -2, 1}, w)) < 0);
}

TEST_CASE("a double root ends inconclusive at the depth limit") {
    const TrigPoly f = (X - TrigPoly(1L)) * (X - TrigPoly(1L));
    CertifyConfig config;
    config.max_depth = 12;
    const Certificate cert = certify_positive(f, std::nullopt, config);
    CHECK(cert.status == Status::inconclusive);
    CHECK(!cert.witness);
}

TEST_CASE("certificates are deterministic") {
    for (const char* id : {"thm3.1-upper", "chain-1.7-g3", "mortici-1.12-lower"}) {
        const InequalityCase& c = find_case(id);
        const unsigned n = c.parameterized() ? c.n_default : 0;
        CHECK(without_timing(certify_sign(c, n)) == without_timing(certify_sign(c, n)));
        CHECK(certify_sign(c, n).to_markdown() == certify_sign(c, n).to_markdown());
    }
}

TEST_CASE("soundness spot check: proved gaps are positive at 10000 random points") {
    std::mt19937_64 rng(99);
    for (const auto& c : catalog()) {
        if (c.sweep_only || c.expected != Expectation::proved) continue;
        const unsigned n = c.parameterized() ? c.n_default : 0;
        const Certificate cert = certify_sign(c, n);
        REQUIRE_MESSAGE(cert.status == Status::proved, c.id);
        const Rational end = c.domain_end ? *c.domain_end : half_pi_enclosure(64).lower_rational();
        std::uniform_int_distribution<long> u(1, (1L << 40) - 1);
        int negative = 0, undecided = 0;
        for (int i = 0; i < 10000; ++i) {
            const Rational x = end * make_rational(u(rng), 1L << 40);
            const Interval g = eval_gap(c, n, Interval(x, 512));
            if (g.certainly_negative()) ++negative;
            else if (!g.certainly_positive()) ++undecided;
        }
        CHECK_MESSAGE(negative == 0, c.id);
        CHECK_MESSAGE(undecided == 0, c.id);
    }
}

TEST_CASE("the refuted Mortici upper side fails near 0") {
    const Certificate cert = certify_sign(find_case("mortici-1.12-upper"), 0);
    CHECK(cert.status == Status::refuted);
    REQUIRE(cert.witness);
    CHECK(eval_gap(find_case("mortici-1.12-upper"), 0, Interval(*cert.witness, 256)).certainly_negative());
}

TEST_CASE("tangent remainder constants cannot be improved by 0.1 percent") {
    CertifyConfig config;
    config.tighten = make_rational(1, 1000);
    for (unsigned n = 1; n <= 4; ++n) {
        for (const char* id : {"lemma2.1-lower", "lemma2.1-upper"}) {
            const InequalityCase& c = find_case(id);
            CHECK_MESSAGE(certify_sign(c, n).status == Status::proved, id << " n=" << n);
            const Certificate tight = certify_sign(c, n, config);
            CHECK_MESSAGE(tight.status == Status::refuted, id << " n=" << n);
            REQUIRE(tight.witness);
            const GapForms g = c.forms(n).with_constant(tightened_constant(c.forms(n), config.tighten));
            CHECK(eval_cleared(g.cleared(), Interval(*tight.witness, 512)).certainly_negative());
        }
    }
}

TEST_CASE("best constants") {
    const BestConstantPair a = best_constants("thm3.3");
    CHECK(a.at_zero == PiLaurent(make_rational(16, 14175)));
    CHECK(a.at_zero == PiLaurent(ratio_taylor(RatioId::wilker, 6)[2]));
    CHECK(certified_decimal(a.at_pi_half_enclosure, 6) == "0.001209");
    CHECK(a.zero_is_inf);
    CHECK(a.matches_printed);
    CHECK(a.matches_series);
    CHECK(a.cross_validated);

    const BestConstantPair h = best_constants("thm3.4-huygens");
    CHECK(h.at_zero == PiLaurent(make_rational(23, 33600)));
    CHECK(certified_decimal(h.at_pi_half_enclosure, 6) == "0.000894");

    const BestConstantPair h2 = best_constants("thm3.4-huygens2");
    CHECK(h2.at_zero == PiLaurent(make_rational(83, 100800)));
    CHECK(certified_decimal(h2.at_pi_half_enclosure, 7) == "0.0012901");

    for (const auto& f : sharp_families()) {
        const BestConstantPair p = best_constants(f);
        CHECK_MESSAGE(p.matches_printed, f);
        CHECK_MESSAGE(p.matches_series, f);
        CHECK_MESSAGE(p.cross_validated, f);
    }
    for (unsigned n = 1; n <= 4; ++n) {
        const BestConstantPair l = best_constants("lemma2.1", n);
        CHECK(l.at_zero == PiLaurent(tan_coeff(n + 1)));
        CHECK(l.matches_printed);
    }
}

TEST_CASE("sweeps") {
    CHECK(sweep("thm3.3", 0, 2).size() == 2);
    CHECK_THROWS_AS(sweep("thm3.3", 0, 1), std::invalid_argument);

    const auto chain = sweep("chain-1.7", 0, 200);
    for (const auto& r : chain) {
        REQUIRE(r.gap_lower);
        CHECK(r.gap_lower->certainly_positive());
        CHECK(r.dominance == "NA");
    }

    for (const auto& r : sweep("thm3.3", 0, 200, 256, "chen-cheung-1.8")) CHECK(r.dominance == "1");

    // Against the Sumner bounds the sharp lower bound loses near pi/2: the
    // quartic 8/45 - 8x^2/945 + 16x^4/14175 drops below (2/pi)^4 after x = 1.51882.
    const auto rows = sweep("thm3.3", 0, 1000, 256, "sumner-1.2");
    for (const auto& r : rows) {
        const bool beyond = r.x.lower() > 1.5189;
        const bool before = r.x.upper() < 1.5188;
        if (before) CHECK(r.dominance == "1");
        if (beyond) CHECK(r.dominance == "0");
    }
    const std::string csv = sweep_csv(sweep("huygens-1.3", 0, 3));
    CHECK(csv.rfind("x,gap_lower,gap_upper,dominance\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
