#include "trigcert/appendix.hpp"

#include "trigcert/catalog.hpp"
#include "trigcert/pi.hpp"
#include "trigcert/sequences.hpp"

#include <sstream>

namespace trigcert {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::erratum: return "ERRATUM";
    }
    return "?";
}

namespace {

using P = ExpPoly;

P shifted(long n0, std::map<unsigned long, std::vector<Rational>> c) { return P::from_shifted(c, n0); }

std::vector<Rational> rats(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

CheckResult identity(const std::string& name, const P& lhs, const P& rhs) {
    if (auto d = first_difference(lhs, rhs)) return {name, CheckStatus::fail, *d};
    return {name, CheckStatus::pass, "exact"};
}

bool all_positive(const std::map<unsigned long, std::vector<Rational>>& c) {
    for (const auto& [base, v] : c)
        for (const auto& x : v)
            if (sgn(x) <= 0) return false;
    return true;
}

CheckResult positivity(const std::string& name, const P& e, long n0) {
    auto c = e.expand_at(n0);
    if (all_positive(c)) return {name, CheckStatus::pass, "all coefficients in powers of (n-" + std::to_string(n0) + ") positive"};
    return {name, CheckStatus::fail, "nonpositive coefficient in powers of (n-" + std::to_string(n0) + ")"};
}

CheckResult check(const std::string& name, bool ok, const std::string& detail) {
    return {name, ok ? CheckStatus::pass : CheckStatus::fail, detail};
}

Integer ipow(long b, unsigned long e) { return pow(Integer(b), e); }

std::vector<CheckResult> wilker_kernel_checks() {
    std::vector<CheckResult> out;
    const P v = printed::wilker_u_factor();
    const P two_n3 = P::poly({3, 5, 2});  // (n+1)(2n+3)
    out.push_back(identity("q_n = 4 (n+1)(2n+3) * u-bracket", printed::wilker_q(), two_n3 * P(4L) * v));

    const P p = printed::wilker_p();
    if (auto d = first_difference(p, v.shift())) {
        out.push_back({"p_n = u-bracket at n+1", CheckStatus::erratum,
                       "printed vs exact " + *d + "; corrected p_n = " + wilker_p_corrected().to_string()});
    } else {
        out.push_back({"p_n = u-bracket at n+1", CheckStatus::pass, "exact"});
    }
    // u_{n+1}/u_n = 4 x^2 v_{n+1} / ((2n+2)(2n+3) v_n) = 8 x^2 p_n / q_n
    const P lhs = P(4L) * v.shift() * printed::wilker_q();
    const P ratio_corrected = P(8L) * wilker_p_corrected() * P::poly({6, 10, 4}) * v;
    out.push_back(identity("u_{n+1}/u_n = 8x^2 p_n/q_n (corrected p_n)", lhs, ratio_corrected));

    // Series of g
    const TrigPoly g = kernel_wilker_ratio();
    const int top = 61;
    PowerSeries<PiLaurent> s = g.taylor(top);
    bool ok = true;
    std::string detail = "coefficients through x^61";
    for (int i = 0; i <= top && ok; ++i) {
        Rational expect = 0;
        if (i == 13) expect = make_rational(16, 495);
        else if (i == 15) expect = make_rational(496, 61425);
        else if (i == 17) expect = make_rational(-64, 26325);
        else if (i >= 19 && i % 2 == 1) {
            const long n = (i - 1) / 2;
            expect = v.eval(n) * Rational(ipow(4, static_cast<unsigned long>(n))) /
                     Rational(factorial(static_cast<unsigned long>(2 * n + 1)));
            if (n % 2 == 0) expect = -expect;
        }
        if (!(s[i] == PiLaurent(expect))) {
            ok = false;
            detail = "x^" + std::to_string(i) + ": " + s[i].to_string() + " vs " + to_string(expect);
        }
    }
    out.push_back(check("g series = leading terms + sum (-1)^(n-1) u_n", ok, detail));
    out.push_back(check("16x^15(93-28x^2)/184275 matches the x^15, x^17 terms",
                        make_rational(16 * 93, 184275) == make_rational(496, 61425) &&
                            make_rational(16 * 28, 184275) == make_rational(64, 26325),
                        "exact"));
    return out;
}

std::vector<CheckResult> huygens_kernel_checks() {
    std::vector<CheckResult> out;
    const P V = printed::huygens_u_factor();
    out.push_back(identity("Q_n = (2n+1)(n+1) * U-bracket", printed::huygens_q(), P::poly({1, 3, 2}) * V));
    out.push_back(identity("9 P_n = U-bracket at n+1", P(9L) * printed::huygens_p(), V.shift()));
    // U_{n+1}/U_n = x^2 V_{n+1}/((2n+1)(2n+2) V_n) = 9 x^2 P_n/(2 Q_n)
    out.push_back(identity("U_{n+1}/U_n = 9x^2 P_n/(2Q_n)", P(2L) * V.shift() * printed::huygens_q(),
                           P(9L) * printed::huygens_p() * P::poly({2, 6, 4}) * V));
    const TrigPoly G = kernel_huygens_ratio();
    const int top = 60;
    PowerSeries<PiLaurent> s = G.taylor(top);
    bool ok = true;
    std::string detail = "coefficients through x^60";
    for (int i = 0; i <= top && ok; ++i) {
        Rational expect = 0;
        if (i >= 12 && i % 2 == 0) {
            const long n = i / 2;
            expect = V.eval(n) / (Rational(81) * Rational(factorial(static_cast<unsigned long>(2 * n))));
            if (n % 2 == 1) expect = -expect;
        }
        if (!(s[i] == PiLaurent(expect))) {
            ok = false;
            detail = "x^" + std::to_string(i) + ": " + s[i].to_string() + " vs " + to_string(expect);
        }
    }
    out.push_back(check("G series = sum (-1)^n U_n", ok, detail));
    return out;
}

std::vector<CheckResult> b_identity_checks() {
    std::vector<CheckResult> out;
    const P diff = printed::wilker_q() - P(20L) * printed::wilker_p();
    out.push_back(identity("q_n - 20p_n = displayed direct form", diff, printed::appendix_b_direct()));
    out.push_back(identity("direct form = displayed expansion at n = 9", printed::appendix_b_direct(),
                           printed::appendix_b_shifted()));
    out.push_back(positivity("displayed expansion coefficients positive", printed::appendix_b_shifted(), 9));
    out.push_back(positivity("q_n - 20p_n with corrected p_n: expansion at n = 9 positive",
                             printed::wilker_q() - P(20L) * wilker_p_corrected(), 9));
    return out;
}

std::vector<CheckResult> c_identity_checks() {
    std::vector<CheckResult> out;
    out.push_back(identity("Q_n - 12P_n = displayed combined form (70n^4 9^n read in)",
                           printed::huygens_q() - P(12L) * printed::huygens_p(), printed::appendix_c_combined()));
    out.push_back(identity("R_n direct = expansion at n = 6", printed::appendix_r(), printed::appendix_r_shifted()));
    out.push_back(identity("S_n direct = expansion at n = 6", printed::appendix_s(), printed::appendix_s_shifted()));
    out.push_back(identity("T_n direct = expansion at n = 6", printed::appendix_t(), printed::appendix_t_shifted()));
    out.push_back(positivity("R_n expansion coefficients positive", printed::appendix_r(), 6));
    out.push_back(positivity("S_n expansion coefficients positive", printed::appendix_s(), 6));
    out.push_back(positivity("T_n expansion coefficients positive", printed::appendix_t(), 6));
    out.push_back(identity("T_n = S_{n+1}", printed::appendix_t(), printed::appendix_s().shift()));
    out.push_back(identity("S_n = denominator of A_n read from Q_n - 12P_n",
                           printed::appendix_s() * P::exp(9),
                           P::poly({-1556415, 909099, 252112, -70412, 0, 268, -56, 16}, 9)));
    // (9/4) A_n - A_{n+1} = 2835 R_n / (2 S_n T_n), with A_n = num_n / S_n and S_{n+1} = T_n
    const P num = printed::appendix_c_numerator();
    out.push_back(identity("9 num_n T_n - 4 num_{n+1} S_n = 5670 R_n",
                           P(9L) * num * printed::appendix_t() - P(4L) * num.shift() * printed::appendix_s(),
                           P(5670L) * printed::appendix_r()));
    bool ok = true;
    std::string detail = "n = 6..25";
    for (long n = 6; n <= 25; ++n) {
        Rational a = proof_sequence_exact(ProofSequence::A_n, static_cast<unsigned>(n)).coefficient(0);
        Rational a1 = proof_sequence_exact(ProofSequence::A_n, static_cast<unsigned>(n + 1)).coefficient(0);
        Rational rhs = Rational(2835) * printed::appendix_r().eval(n) /
                       (Rational(2) * printed::appendix_s().eval(n) * printed::appendix_t().eval(n));
        if (make_rational(9, 4) * a - a1 != rhs) {
            ok = false;
            detail = "mismatch at n = " + std::to_string(n);
            break;
        }
    }
    out.push_back(check("(9/4)A_n - A_{n+1} = 2835 R_n/(2 S_n T_n) at 20 points", ok, detail));
    return out;
}

}  // namespace

namespace printed {

ExpPoly wilker_u_factor() {
    return (P(make_rational(945, 2)) * P::n() + P(make_rational(-16065, 4))) * P::exp(4) +
           P::poly({0, -2172, 13727, 889, -1960, 952, -112, 16});
}
ExpPoly wilker_p() { return P::poly({-16065, 1890}, 4) + P::poly({11340, 24309, 12810, 889, 1680, 616, 0, 16}); }
ExpPoly wilker_q() {
    return P::poly({3, 5, 2}) *
           (P::poly({-16065, 1890}, 4) + P::poly({0, -8688, 54908, 3556, -7840, 3808, -448, 64}));
}
ExpPoly appendix_b_direct() {
    return P::poly({273105, -112455, -22680, 3780}, 4) +
           P::poly({-226800, -512244, -134916, 250052, 70476, -32984, 2016, 5248, -576, 128});
}
ExpPoly appendix_b_shifted() {
    return shifted(9, {{4, rats({179550, 397845, 79380, 3780})},
                       {1, rats({49648561200, 46968464520, 19975332000, 5019956996, 822741108, 91303912,
                                 6864480, 337024, 9792, 128})}});
}
ExpPoly huygens_u_factor() {
    return P::poly({178605, -33924, -302, 238, -40, 8}, 9) - P::poly({0, 187110, 34020}, 4) +
           P::poly({-178605, 222588, -215298, -64638, 29160, -5832});
}
ExpPoly huygens_p() {
    return P::poly({144585, -33934, 252, 158, 0, 8}, 9) - P::poly({98280, 113400, 15120}, 4) +
           P::poly({-23625, -34938, -32508, -702, 0, -648});
}
ExpPoly huygens_q() {
    const P bracket = P::poly({178605, -33924, -302, 238, -40, 8}, 9) - P::poly({0, 187110, 34020}, 4) +
                      P::poly({-178605, 222588, -215298, -64638, 29160, -5832});
    return P::poly({1, 3, 2}) * bracket;
}
ExpPoly appendix_c_combined() {
    return P::poly({-1556415, 909099, 252112, -70412, 0, 268, -56, 16}, 9) + P::poly({0, 0, 0, 0, 70}, 9) -
           P::poly({-1179360, -1173690, 413910, 476280, 68040}, 4) - appendix_c_bound();
}
ExpPoly appendix_c_numerator() { return P::poly({-1179360, -1173690, 413910, 476280, 68040}); }
ExpPoly appendix_c_bound() {
    return P::poly({-104895, -106029, -485352, 256932, 595350, 39852, -40824, 11664});
}
ExpPoly appendix_r() {
    return P::poly({-660306024, 997107984, -777353865, -445858781, 274552068, 50474996, -22121984, -3508908,
                    256200, 73088, 12384, 960});
}
ExpPoly appendix_r_shifted() {
    return shifted(6, {{1, rats({878926761468, 1894841991720, 1695853296525, 849645117283, 268187103036,
                                 56595283460, 8234103112, 835076820, 58479432, 2716928, 75744, 960})}});
}
ExpPoly appendix_s() { return P::poly({-1556415, 909099, 252112, -70412, 0, 268, -56, 16}); }
ExpPoly appendix_s_shifted() {
    return shifted(6, {{1, rats({1715427, 679323, 1087672, 509908, 98760, 10348, 616, 16})}});
}
ExpPoly appendix_t() { return P::poly({-465388, 1203203, 43052, -68292, 1060, 268, 56, 16}); }
ExpPoly appendix_t_shifted() {
    return shifted(6, {{1, rats({4102070, 4834979, 3323012, 1021308, 160300, 14380, 728, 16})}});
}

}  // namespace printed

ExpPoly wilker_p_corrected() { return printed::wilker_u_factor().shift(); }

std::vector<CheckResult> exp_poly_checks() {
    std::vector<CheckResult> out = wilker_kernel_checks();
    for (auto& r : huygens_kernel_checks()) out.push_back(std::move(r));
    for (auto& r : b_identity_checks()) out.push_back(std::move(r));
    for (auto& r : c_identity_checks()) out.push_back(std::move(r));
    return out;
}

bool appendix_range_check(RangeCheck which, unsigned n_max) {
    switch (which) {
        case RangeCheck::B: {
            if (n_max < 9) throw std::invalid_argument("appendix B range starts at n = 9");
            const P printed_diff = printed::wilker_q() - P(20L) * printed::wilker_p();
            const P corrected_diff = printed::wilker_q() - P(20L) * wilker_p_corrected();
            for (long n = 9; n <= static_cast<long>(n_max); ++n)
                if (sgn(printed_diff.eval(n)) <= 0 || sgn(corrected_diff.eval(n)) <= 0) return false;
            return true;
        }
        case RangeCheck::C1:
            if (n_max < 6) throw std::invalid_argument("appendix C range starts at n = 6");
            for (unsigned n = 6; n <= n_max; ++n) {
                Rational a = proof_sequence_exact(ProofSequence::A_n, n).coefficient(0);
                if (!(pow(make_rational(9, 4), static_cast<long>(n)) > a)) return false;
            }
            return true;
        case RangeCheck::C2:
            if (n_max < 6) throw std::invalid_argument("appendix C range starts at n = 6");
            for (long n = 6; n <= static_cast<long>(n_max); ++n) {
                Rational lhs = Rational(70) * pow(Rational(n), 4L) * Rational(ipow(9, static_cast<unsigned long>(n)));
                if (!(lhs > printed::appendix_c_bound().eval(n))) return false;
            }
            return true;
    }
    return false;
}

std::vector<CheckResult> appendix_a_checks(unsigned n_max, unsigned k_span) {
    std::vector<CheckResult> out;
    bool identity_ok = true, positive_ok = true, tail_ok = true, printed_positive = true, exact_positive = true;
    std::string first_erratum;
    for (unsigned N = 1; N <= n_max; ++N) {
        const Integer p16 = ipow(16, N), p64 = ipow(64, N), p256 = ipow(256, N), p1024 = ipow(1024, N);
        for (unsigned k = 2 * N + 1; k <= 2 * N + k_span; ++k) {
            const Integer a = ipow(4, k);
            Integer direct = ipow(16, k + N + 1) - (8 * p256 + p64) * 4 * a + 8 * p1024 - 10 * (a - p16) * (4 * a - p16);
            if (direct != ratio2_reduction(k, N)) identity_ok = false;
            if (sgn(direct) <= 0) positive_ok = false;
        }
        if (sgn(Integer(8 * p1024 - 10 * p256)) <= 0) tail_ok = false;
        const Integer exact = (ipow(4, 2 * N + 2) - 40) * ipow(4, 2 * N + 1) + 50 * p16 - 32 * p256 - 4 * p64;
        const Integer shown = 224 * p256 - 590 * p16 - 4 * p64;
        if (sgn(exact) <= 0) exact_positive = false;
        if (sgn(shown) <= 0) printed_positive = false;
        if (exact != shown && first_erratum.empty()) {
            std::ostringstream os;
            os << "N = " << N << ": printed 224*256^N - 590*16^N - 4*64^N = " << shown.get_str()
               << ", exact 32*256^N - 110*16^N - 4*64^N = " << exact.get_str() << "; both positive for N = 1.."
               << n_max;
            first_erratum = os.str();
        }
    }
    const std::string range = "N = 1.." + std::to_string(n_max) + ", k = 2N+1..2N+" + std::to_string(k_span);
    out.push_back(check("reduced form equals numerator - 10 (4^k-16^N)(4^(k+1)-16^N)", identity_ok, range));
    out.push_back(check("reduced form positive", positive_ok, range));
    out.push_back(check("8*1024^N - 10*256^N > 0", tail_ok, "N = 1.." + std::to_string(n_max)));
    if (!exact_positive || !printed_positive)
        out.push_back({"value of the bracket at k = 2N+1", CheckStatus::fail, "nonpositive value"});
    else if (!first_erratum.empty())
        out.push_back({"value of the bracket at k = 2N+1", CheckStatus::erratum, first_erratum});
    else
        out.push_back({"value of the bracket at k = 2N+1", CheckStatus::pass, "exact"});
    return out;
}

std::vector<CheckResult> appendix_b_checks(unsigned n_max) {
    std::vector<CheckResult> out = b_identity_checks();
    out.push_back(check("q_n - 20p_n > 0 (printed and corrected p_n)", appendix_range_check(RangeCheck::B, n_max),
                        "n = 9.." + std::to_string(n_max)));
    return out;
}

std::vector<CheckResult> appendix_c_checks(unsigned n_max) {
    std::vector<CheckResult> out = c_identity_checks();
    const Rational a6 = proof_sequence_exact(ProofSequence::A_n, 6).coefficient(0);
    const Rational q6 = pow(make_rational(9, 4), 6L);
    out.push_back(check("base case A_6 = 3138660/27229 < (9/4)^6 = 531441/4096",
                        a6 == make_rational(3138660, 27229) && q6 == make_rational(531441, 4096) && a6 < q6,
                        "A_6 = " + to_string(a6) + ", (9/4)^6 = " + to_string(q6)));
    out.push_back(check("(9/4)^n > A_n", appendix_range_check(RangeCheck::C1, n_max),
                        "n = 6.." + std::to_string(n_max) +
                            " exactly; all n >= 6 by the base case and positive R, S, T expansions"));
    out.push_back(check("70 n^4 9^n > displayed bound", appendix_range_check(RangeCheck::C2, n_max),
                        "n = 6.." + std::to_string(n_max)));
    const P combined = printed::huygens_q() - P(12L) * printed::huygens_p();
    bool ok = true;
    for (long n = 6; n <= static_cast<long>(n_max) && ok; ++n) ok = sgn(combined.eval(n)) > 0;
    out.push_back(check("Q_n - 12P_n > 0", ok, "n = 6.." + std::to_string(n_max)));
    return out;
}

std::vector<CheckResult> sequence_checks(unsigned max_index) {
    std::vector<CheckResult> out;
    const mpfr_prec_t prec = 256;
    for (ProofSequence s : {ProofSequence::a_n, ProofSequence::b_N, ProofSequence::x_n, ProofSequence::y_N,
                            ProofSequence::A_n}) {
        const std::string id = to_string(s);
        const PrintedValue pv = proof_sequence_printed(s);
        const Interval value = pilaurent_eval(pv.value, prec);
        const Interval threshold = pilaurent_eval(proof_sequence_threshold(s, pv.index), prec);
        const std::string value_dec = certified_decimal(value, 30);
        const std::string threshold_dec = certified_decimal(threshold, 30);
        const bool digits = value_dec.rfind(pv.value_decimals, 0) == 0 && threshold_dec.rfind(pv.threshold_decimals, 0) == 0;
        const bool below = compare(value, threshold) == Ordering::less;
        out.push_back(check(id + ": printed value " + pv.value_decimals + " < " + pv.threshold_decimals,
                            digits && below, value_dec.substr(0, 14) + " < " + threshold_dec.substr(0, 14)));

        const PiLaurent exact = proof_sequence_exact(s, pv.index);
        const Interval exact_value = pilaurent_eval(exact, prec);
        const bool exact_below = compare(exact_value, threshold) == Ordering::less;
        if (exact == pv.value) {
            out.push_back(check(id + ": printed closed form equals the definition", true, "exact"));
        } else {
            out.push_back({id + ": printed closed form equals the definition",
                           exact_below ? CheckStatus::erratum : CheckStatus::fail,
                           "definition gives " + exact.to_string() + " = " + certified_decimal(exact_value, 12) +
                               (exact_below ? ", still below the threshold" : ", not below the threshold")});
        }

        bool decreasing = true;
        bool all_below = true;
        Interval previous = exact_value;
        for (unsigned i = pv.index + 1; i <= max_index; ++i) {
            Interval v = proof_sequence_value(s, i, prec);
            if (compare(v, previous) != Ordering::less) decreasing = false;
            if (compare(v, pilaurent_eval(proof_sequence_threshold(s, i), prec)) != Ordering::less) all_below = false;
            previous = v;
        }
        const std::string range = "indices " + std::to_string(pv.index) + ".." + std::to_string(max_index);
        if (s == ProofSequence::A_n) {
            out.push_back(check(id + " < (9/4)^n", all_below && exact_below, range));
        } else {
            out.push_back(check(id + " strictly decreasing", decreasing, range + " (finite range)"));
            out.push_back(check(id + " below its threshold", all_below && exact_below, range));
        }
    }
    // The printed y_1 matches neither reading of the definition; check the other reading too.
    {
        const unsigned N = 1;
        PiLaurent alt = PiLaurent::half_pi_power(-static_cast<int>(4 * N + 2)) *
                            make_rational(Integer(1), factorial(4 * N + 1)) +
                        PiLaurent(make_rational(Integer(1), pow(Integer(2), 4 * N + 2) - 2));
        const Interval v = pilaurent_eval(alt, prec);
        const Interval t = pilaurent_eval(proof_sequence_threshold(ProofSequence::y_N, N), prec);
        out.push_back(check("y_N with (2/pi)^(4N+2) as displayed: below the threshold",
                            compare(v, t) == Ordering::less, "y_1 = " + certified_decimal(v, 12)));
    }
    return out;
}

std::vector<CheckResult> claim_checks(unsigned n_max, unsigned k_span) {
    std::vector<CheckResult> out;
    const Interval pi = pi_enclosure(512);
    for (ClaimFamily f : {ClaimFamily::wilker_left, ClaimFamily::wilker_right, ClaimFamily::huygens_left,
                          ClaimFamily::huygens_right}) {
        const bool left = f == ClaimFamily::wilker_left || f == ClaimFamily::huygens_left;
        bool ok = true;
        std::string detail;
        const unsigned n0 = f == ClaimFamily::wilker_left ? 3 : f == ClaimFamily::wilker_right ? 2 : left ? 2 : 1;
        for (unsigned n = n0; n <= n_max && ok; ++n) {
            const unsigned k0 = left ? n + 2 : 2 * n + 1;
            for (unsigned k = k0; k <= k0 + k_span - (left ? 2 : 1) && ok; ++k)
                if (!claim_check(f, n, k, pi)) {
                    ok = false;
                    detail = "fails at n = " + std::to_string(n) + ", k = " + std::to_string(k);
                }
            if (left && ok && !is_zero(claim_left_difference(f, n, n + 1))) {
                ok = false;
                detail = "k = n+1 term does not vanish at n = " + std::to_string(n);
            }
        }
        if (ok) detail = std::to_string(n0) + " <= " + (left ? "n" : "N") + " <= " + std::to_string(n_max) + ", finite k range" +
                         (left ? "; k = n+1 difference exactly 0" : "");
        out.push_back(check(to_string(f) + " claim", ok, detail));
    }
    bool ok = true;
    for (unsigned k = 1; k <= 60 && ok; ++k) ok = ratio_mono_check(RatioCheck::ratio1, k, 0, pi);
    out.push_back(check("ratio1 < 1", ok, "k = 1..60"));
    ok = true;
    for (unsigned N = 1; N <= 20 && ok; ++N)
        for (unsigned k = 2 * N + 1; k <= 2 * N + 20 && ok; ++k) ok = ratio_mono_check(RatioCheck::ratio2, k, N, pi);
    out.push_back(check("ratio2 > 1 (via pi^2 < 10)", ok, "N = 1..20, k = 2N+1..2N+20"));
    return out;
}

}  // namespace trigcert
