// One line per acceptance criterion; exit status 1 when any line fails.

#include "cli.hpp"

#include "trigcert/appendix.hpp"
#include "trigcert/bernoulli.hpp"
#include "trigcert/catalog.hpp"
#include "trigcert/certifier.hpp"
#include "trigcert/expressions.hpp"
#include "trigcert/pi.hpp"
#include "trigcert/sequences.hpp"
#include "trigcert/series.hpp"
#include "trigcert/trig_enclose.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace trigcert;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        else detail += "; " + why;
        pass = false;
    }
};

bool run_criterion(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && s > limit_seconds) {
        std::ostringstream why;
        why << "took " << s << " s, limit " << limit_seconds << " s";
        o.fail(why.str());
    }
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << s;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << number << ". " << title << " (" << time.str() << " s";
    if (limit_seconds > 0) std::cout << ", limit " << limit_seconds << " s";
    std::cout << ")";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
    return o.pass;
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

Outcome series_reproduction() {
    Outcome o;
    int code = 0;
    const std::string out = cli_output({"series", "--expr", "wilker-ratio", "--order", "14"}, code);
    const std::string expected =
        "8/45\n-8/945\n16/14175\n8/467775\n3184/638512875\n272/638512875\n7264/162820783125\n";
    if (code != 0) o.fail("exit code " + std::to_string(code));
    if (out != expected) o.fail("output was:\n" + out);
    return o;
}

Outcome sharp_constants() {
    Outcome o;
    int code = 0;
    const auto j = nlohmann::json::parse(cli_output({"constants", "--format", "json"}, code));
    if (code != 0) o.fail("exit code " + std::to_string(code));
    struct Expect {
        const char* family;
        const char* endpoint;
        const char* exact;  // empty for closed forms in pi
        const char* decimals;
    };
    const Expect expected[] = {
        {"thm3.3", "at_zero", "16/14175", "0.001128"},        {"thm3.3", "at_pi_half", "", "0.001209"},
        {"thm3.4-wilker2", "at_pi_half", "", "0.004727"},     {"thm3.4-wilker2", "at_zero", "4/1575", "0.002539"},
        {"thm3.4-huygens", "at_zero", "23/33600", "0.000684"}, {"thm3.4-huygens", "at_pi_half", "", "0.000894"},
        {"thm3.4-huygens2", "at_pi_half", "", "0.0012901"},   {"thm3.4-huygens2", "at_zero", "83/100800", "0.0008234"},
    };
    unsigned found = 0;
    for (const auto& e : expected) {
        for (const auto& row : j) {
            if (row["family"] != e.family) continue;
            const auto& c = row[e.endpoint];
            const std::string dec = c["decimal"];
            const std::string name = std::string(e.family) + " " + std::string(c["name"]);
            if (*e.exact && c["exact"] != e.exact) o.fail(name + " exact " + std::string(c["exact"]));
            if (dec.rfind(e.decimals, 0) != 0) o.fail(name + " decimal " + dec + " vs " + e.decimals);
            if (!row["matches_printed"] || !row["matches_series"] || !row["cross_validated"])
                o.fail(std::string(e.family) + " limit checks");
            ++found;
        }
    }
    if (found != 8) o.fail("found " + std::to_string(found) + " of 8 constants");
    if (o.pass) o.detail = "8 constants, exact forms and certified decimals";
    return o;
}

Outcome proof_sequence_numerics() {
    Outcome o;
    unsigned certified = 0;
    for (ProofSequence s : {ProofSequence::a_n, ProofSequence::b_N, ProofSequence::x_n, ProofSequence::y_N}) {
        const PrintedValue pv = proof_sequence_printed(s);
        const Interval v = pilaurent_eval(pv.value, 256);
        const Interval t = pilaurent_eval(proof_sequence_threshold(s, pv.index), 256);
        const std::string vd = certified_decimal(v, 30), td = certified_decimal(t, 30);
        if (vd.rfind(pv.value_decimals, 0) != 0) o.fail(to_string(s) + " value " + vd);
        if (td.rfind(pv.threshold_decimals, 0) != 0) o.fail(to_string(s) + " threshold " + td);
        if (compare(v, t) != Ordering::less) o.fail(to_string(s) + " comparison not certified");
        else ++certified;
    }
    for (const auto& r : sequence_checks(40))
        if (r.status == CheckStatus::fail) o.fail(r.name + ": " + r.detail);
    if (o.pass) o.detail = std::to_string(certified) + " strict comparisons certified, 8 values match";
    return o;
}

Outcome certification_suite() {
    Outcome o;
    struct Item {
        const char* id;
        unsigned lo, hi;
    };
    const Item items[] = {
        {"lemma2.1-lower", 1, 5}, {"lemma2.1-upper", 1, 5}, {"thm3.1-lower", 3, 6}, {"thm3.1-upper", 3, 6},
        {"thm3.2-lower", 2, 6},   {"thm3.2-upper", 2, 6},   {"thm3.3-lower", 0, 0}, {"thm3.3-upper", 0, 0},
        {"thm3.4-wilker2-lower", 0, 0},  {"thm3.4-wilker2-upper", 0, 0},  {"thm3.4-huygens-lower", 0, 0},
        {"thm3.4-huygens-upper", 0, 0},  {"thm3.4-huygens2-lower", 0, 0}, {"thm3.4-huygens2-upper", 0, 0},
        {"wilker-1.1", 0, 0},     {"sumner-1.2-lower", 0, 0}, {"sumner-1.2-upper", 0, 0}, {"huygens-1.3", 0, 0},
        {"wu-srivastava-1.4", 0, 0},
        {"chain-1.7-g1", 0, 0},   {"chain-1.7-g2", 0, 0},   {"chain-1.7-g3", 0, 0},   {"chain-1.7-g4", 0, 0},
        {"chain-1.7-g5", 0, 0},   {"chain-1.7-g6", 0, 0},   {"mortici-1.12-lower", 0, 0},
        {"chen-paris-3.25-lower", 0, 0}, {"chen-paris-3.25-upper", 0, 0},
    };
    unsigned proved = 0;
    for (const auto& item : items) {
        const InequalityCase& c = find_case(item.id);
        for (unsigned n = item.lo; n <= item.hi; ++n) {
            const Certificate cert = certify_sign(c, n);
            if (cert.status == Status::proved) ++proved;
            else o.fail(std::string(item.id) + (n ? " n=" + std::to_string(n) : "") + " " + to_string(cert.status));
        }
    }
    if (o.pass) o.detail = std::to_string(proved) + " certificates PROVED";
    return o;
}

Outcome appendix_verification() {
    Outcome o;
    unsigned errata = 0, checks = 0;
    for (const auto& list : {exp_poly_checks(), appendix_a_checks(20, 20), appendix_b_checks(100), appendix_c_checks(100)})
        for (const auto& r : list) {
            ++checks;
            if (r.status == CheckStatus::fail) o.fail(r.name + ": " + r.detail);
            if (r.status == CheckStatus::erratum) ++errata;
        }
    if (!appendix_range_check(RangeCheck::B, 100)) o.fail("q_n - 20p_n > 0 for n = 9..100");
    if (!appendix_range_check(RangeCheck::C1, 100)) o.fail("(9/4)^n > A_n for n = 6..100");
    if (!appendix_range_check(RangeCheck::C2, 100)) o.fail("C.2 for n = 6..100");
    if (proof_sequence_exact(ProofSequence::A_n, 6) != PiLaurent(make_rational(3138660, 27229)))
        o.fail("A_6 differs from 3138660/27229");
    if (!(make_rational(3138660, 27229) < make_rational(531441, 4096))) o.fail("A_6 >= (9/4)^6");
    if (o.pass)
        o.detail = std::to_string(checks) + " exact checks, " + std::to_string(errata) +
                   " printed intermediates differ (conclusions hold)";
    return o;
}

Outcome sharpness_witnesses() {
    Outcome o;
    CertifyConfig config;
    config.tighten = make_rational(1, 1000);
    unsigned refuted = 0;
    const auto probe = [&](const InequalityCase& c, unsigned n) {
        const Certificate cert = certify_sign(c, n, config);
        const std::string label = c.id + (n ? " n=" + std::to_string(n) : "");
        if (cert.status != Status::refuted || !cert.witness) {
            o.fail(label + " " + to_string(cert.status));
            return;
        }
        const GapForms g = c.forms(n).with_constant(tightened_constant(c.forms(n), config.tighten));
        if (!eval_cleared(g.cleared(), Interval(*cert.witness, 512)).certainly_negative())
            o.fail(label + " witness not confirmed");
        else ++refuted;
    };
    for (unsigned n = 1; n <= 4; ++n) {
        probe(find_case("lemma2.1-lower"), n);
        probe(find_case("lemma2.1-upper"), n);
    }
    for (const char* family : {"thm3.3", "thm3.4-wilker2", "thm3.4-huygens", "thm3.4-huygens2"})
        for (const InequalityCase* c : family_cases(family)) probe(*c, 0);
    if (o.pass) o.detail = std::to_string(refuted) + " tightened constants REFUTED with confirmed witnesses";
    return o;
}

Outcome property_suites() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 9973);

    // Interval containment: arithmetic and trigonometric enclosures at random points.
    unsigned contained = 0;
    for (int i = 0; i < 1000; ++i) {
        const Rational a = make_rational(num(rng), den(rng)), b = make_rational(num(rng) | 1, den(rng));
        const Interval A(a, 53), B(b, 53);
        bool ok = (A + B).contains(a + b) && (A - B).contains(a - b) && (A * B).contains(a * b) &&
                  (A / B).contains(a / b) && int_pow(A, 5).contains(pow(a, 5));
        const Rational x = a / 100000;  // |x| <= 1
        const Interval coarse(x, 64), fine(x, 512);
        ok = ok && sin_enclose(coarse).contains(sin_enclose(fine)) && cos_enclose(coarse).contains(cos_enclose(fine)) &&
             tan_enclose(coarse).contains(tan_enclose(fine));
        if (ok) ++contained;
    }
    if (contained != 1000) o.fail("containment failed at " + std::to_string(1000 - contained) + " points");

    // Series round trips.
    const int order = 30;
    for (int i = 0; i < 50; ++i) {
        std::vector<Rational> ca(order + 1), cb(order + 1);
        for (auto& c : ca) c = make_rational(num(rng), den(rng));
        for (auto& c : cb) c = make_rational(num(rng), den(rng));
        cb[0] = make_rational(num(rng) | 1, den(rng));
        const RationalSeries sa(ca), sb(cb);
        if (!((sa * sb) / sb == sa)) o.fail("(a*b)/b != a");
    }
    const RationalSeries s = ps_elementary(Elementary::sin, order), c = ps_elementary(Elementary::cos, order);
    if (!(s * s + c * c == RationalSeries::constant(1, order))) o.fail("sin^2 + cos^2 != 1");
    if (!(ps_elementary(Elementary::tan, order) == s / c)) o.fail("tan != sin/cos");

    // Bernoulli recurrence closure: sum_{j<m} C(m, j) B_j = 0 for 2 <= m <= 121.
    auto& table = BernoulliTable::shared();
    for (unsigned m = 2; m <= 121; ++m) {
        Rational sum = 0;
        for (unsigned j = 0; j < m; ++j) sum += Rational(binomial(m, j)) * table.signed_value(j);
        if (!is_zero(sum)) o.fail("closure fails at m = " + std::to_string(m));
    }

    // Two-sided bound on |B_2k|/(2k)! for k <= 60.
    const Interval pi = pi_enclosure(1024);
    for (unsigned k = 1; k <= 60; ++k)
        if (!bernoulli_bound_check(k, pi)) o.fail("bound not certified at k = " + std::to_string(k));

    // Coefficient oracles against series division.
    const int so = 44;
    const RationalSeries x = RationalSeries::monomial(1, 1, so);
    const RationalSeries sn = ps_elementary(Elementary::sin, so), cs = ps_elementary(Elementary::cos, so);
    const RationalSeries sx = sn / x, tx = sn / (x * cs), tan = sn / cs;
    const RationalSeries w = sx * sx + tx, h = sx * Rational(2) + tx;
    for (unsigned k = 1; k <= 20; ++k) {
        const int p = 2 * static_cast<int>(k);
        if (tan_coeff(k) != tan[p - 1]) o.fail("t_" + std::to_string(k));
        if (k >= 3 && wilker_coeff(k) != w[p - 2]) o.fail("c_" + std::to_string(k));
        if (k >= 3 && huygens_coeff(k) != h[p - 2]) o.fail("d_" + std::to_string(k));
    }
    if (o.pass) o.detail = "zero failures";
    return o;
}

}  // namespace

int main() {
    bool all = true;
    all &= run_criterion(1, "series reproduction", 1, series_reproduction);
    all &= run_criterion(2, "sharp constants", 5, sharp_constants);
    all &= run_criterion(3, "proof-sequence numerics", 5, proof_sequence_numerics);
    all &= run_criterion(4, "certification suite", 600, certification_suite);
    all &= run_criterion(5, "appendix verification", 30, appendix_verification);
    all &= run_criterion(6, "sharpness witnesses", 300, sharpness_witnesses);
    all &= run_criterion(7, "property suites", 0, property_suites);
    return all ? 0 : 1;
}
