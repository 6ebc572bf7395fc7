#include "trigcert/sequences.hpp"

#include "trigcert/bernoulli.hpp"
#include "trigcert/series.hpp"

#include <stdexcept>

namespace trigcert {

namespace {

Rational sign_alt(unsigned k) { return (k % 2 == 1) ? Rational(1) : Rational(-1); }  // (-1)^(k-1)

Rational inv_factorial(unsigned long n) { return make_rational(Integer(1), factorial(n)); }

Integer pow_int(unsigned long base, unsigned long e) { return pow(Integer(base), e); }

Rational claim_coeff(ClaimFamily f, unsigned k) {
    return (f == ClaimFamily::wilker_left || f == ClaimFamily::wilker_right) ? wilker_coeff(k)
                                                                             : huygens_coeff(k);
}

bool is_left(ClaimFamily f) { return f == ClaimFamily::wilker_left || f == ClaimFamily::huygens_left; }

}  // namespace

Rational wilker_coeff(unsigned k) {
    if (k == 0) throw std::invalid_argument("wilker_coeff needs k >= 1");
    return sign_alt(k) * pow2(2L * k - 1) * inv_factorial(2 * k) + tan_coeff(k);
}

Rational huygens_coeff(unsigned k) {
    if (k == 0) throw std::invalid_argument("huygens_coeff needs k >= 1");
    return sign_alt(k) * 2 * inv_factorial(2 * k - 1) + tan_coeff(k);
}

Rational second_wilker_coeff(unsigned k) {
    if (k == 0) throw std::invalid_argument("second_wilker_coeff needs k >= 1");
    return Rational(k - 1) * pow2(2L * k + 1) * bernoulli_abs_even(k) * inv_factorial(2 * k);
}

PiLaurent two_over_pi_power(unsigned two_n) {
    return PiLaurent::monomial(pow2(two_n), -static_cast<int>(two_n));
}

std::optional<ClaimFamily> parse_claim_family(const std::string& name) {
    if (name == "wilker-left") return ClaimFamily::wilker_left;
    if (name == "wilker-right") return ClaimFamily::wilker_right;
    if (name == "huygens-left") return ClaimFamily::huygens_left;
    if (name == "huygens-right") return ClaimFamily::huygens_right;
    return std::nullopt;
}

std::string to_string(ClaimFamily f) {
    switch (f) {
        case ClaimFamily::wilker_left: return "wilker-left";
        case ClaimFamily::wilker_right: return "wilker-right";
        case ClaimFamily::huygens_left: return "huygens-left";
        case ClaimFamily::huygens_right: return "huygens-right";
    }
    return "?";
}

Rational claim_left_difference(ClaimFamily family, unsigned n, unsigned k) {
    if (!is_left(family)) throw std::invalid_argument("claim_left_difference: left families only");
    if (n == 0 || k < n + 1) throw std::invalid_argument("claim_left_difference needs k >= n+1");
    return claim_coeff(family, k) - claim_coeff(family, n + 1) * tan_coeff(k - n);
}

bool claim_check(ClaimFamily family, unsigned n, unsigned k, const Interval& pi) {
    if (is_left(family)) {
        if (n == 0 || k < n + 2) throw std::invalid_argument("left claims need k >= n+2");
        return sgn(claim_left_difference(family, n, k)) > 0;
    }
    if (n == 0 || k < 2 * n + 1) throw std::invalid_argument("right claims need k >= 2N+1");
    const mpfr_prec_t prec = pi.precision();
    Interval rhs = two_over_pi_power(4 * n).eval(pi) * tan_coeff(k - 2 * n);
    return compare(Interval(claim_coeff(family, k), prec), rhs) == Ordering::less;
}

Integer ratio2_reduction(unsigned k, unsigned N) {
    const Integer p4k = pow_int(4, k);
    const Integer p16 = pow_int(16, N), p64 = pow_int(64, N), p256 = pow_int(256, N),
                  p1024 = pow_int(1024, N);
    Integer inner = (pow_int(4, 2 * N + 2) - 40) * p4k + 50 * p16 - 32 * p256 - 4 * p64;
    return inner * p4k + (8 * p1024 - 10 * p256);
}

bool ratio_mono_check(RatioCheck which, unsigned k, unsigned N, const Interval& pi) {
    const mpfr_prec_t prec = pi.precision();
    if (which == RatioCheck::ratio1) {
        const Integer a = pow_int(4, k);
        Integer lhs = 2 * (a - 2) * (4 * a - 1);
        Integer rhs = (a - 1) * (2 * a - 1);
        return compare(Interval(Rational(lhs), prec), sqr(pi) * Rational(rhs)) == Ordering::less;
    }
    if (N == 0 || k < 2 * N + 1) throw std::invalid_argument("ratio2 needs N >= 1 and k >= 2N+1");
    if (compare(sqr(pi), Interval(10L, prec)) != Ordering::less) return false;
    return sgn(ratio2_reduction(k, N)) > 0;
}

std::optional<ProofSequence> parse_proof_sequence(const std::string& name) {
    if (name == "a_n") return ProofSequence::a_n;
    if (name == "b_N") return ProofSequence::b_N;
    if (name == "x_n") return ProofSequence::x_n;
    if (name == "y_N") return ProofSequence::y_N;
    if (name == "A_n") return ProofSequence::A_n;
    return std::nullopt;
}

std::string to_string(ProofSequence s) {
    switch (s) {
        case ProofSequence::a_n: return "a_n";
        case ProofSequence::b_N: return "b_N";
        case ProofSequence::x_n: return "x_n";
        case ProofSequence::y_N: return "y_N";
        case ProofSequence::A_n: return "A_n";
    }
    return "?";
}

unsigned first_index(ProofSequence s) {
    switch (s) {
        case ProofSequence::a_n: return 3;
        case ProofSequence::b_N: return 2;
        case ProofSequence::x_n: return 2;
        case ProofSequence::y_N: return 1;
        case ProofSequence::A_n: return 6;
    }
    return 0;
}

PiLaurent proof_sequence_exact(ProofSequence s, unsigned i) {
    if (i < first_index(s))
        throw std::invalid_argument(to_string(s) + ": index must be >= " + std::to_string(first_index(s)));
    const int m = static_cast<int>(i);
    switch (s) {
        case ProofSequence::a_n:
            return PiLaurent::half_pi_power(2 * m + 2) * (pow2(2 * m + 1) * inv_factorial(2 * i + 2)) +
                   PiLaurent(make_rational(Integer(1), pow_int(2, 2 * i + 1) - 1)) +
                   PiLaurent::half_pi_power(2 * m + 6) *
                       (pow2(2 * m + 2) * inv_factorial(2 * i + 4) * make_rational(14, 15));
        case ProofSequence::b_N:
            return PiLaurent::half_pi_power(4 * m + 2) * (pow2(4 * m + 1) * inv_factorial(4 * i + 2)) +
                   PiLaurent(make_rational(Integer(1), pow_int(2, 4 * i + 1) - 1));
        case ProofSequence::x_n:
            return PiLaurent::half_pi_power(2 * m + 2) * inv_factorial(2 * i + 1) +
                   PiLaurent(make_rational(Integer(1), pow_int(2, 2 * i + 2) - 2)) +
                   PiLaurent::half_pi_power(2 * m + 6) * (inv_factorial(2 * i + 3) * make_rational(7, 15));
        case ProofSequence::y_N:
            return PiLaurent::half_pi_power(4 * m + 2) * inv_factorial(4 * i + 1) +
                   PiLaurent(make_rational(Integer(1), pow_int(2, 4 * i + 2) - 2));
        case ProofSequence::A_n: {
            const Integer n(i);
            Integer num = 68040 * pow(n, 4) + 476280 * pow(n, 3) + 413910 * n * n - 1173690 * n - 1179360;
            Integer den = 16 * pow(n, 7) - 56 * pow(n, 6) + 268 * pow(n, 5) - 70412 * pow(n, 3) +
                          252112 * n * n + 909099 * n - 1556415;
            return PiLaurent(make_rational(num, den));
        }
    }
    return {};
}

PiLaurent proof_sequence_threshold(ProofSequence s, unsigned index) {
    switch (s) {
        case ProofSequence::a_n:
            return PiLaurent::half_pi_power(2) * make_rational(14, 15) - PiLaurent(2L);
        case ProofSequence::b_N: return PiLaurent::half_pi_power(2) - PiLaurent(2L);
        case ProofSequence::x_n:
            return PiLaurent::half_pi_power(2) * make_rational(7, 15) - PiLaurent(1L);
        case ProofSequence::y_N: return PiLaurent::monomial(make_rational(1, 8), 2) - PiLaurent(1L);
        case ProofSequence::A_n: return PiLaurent(pow(make_rational(9, 4), static_cast<long>(index)));
    }
    return {};
}

PrintedValue proof_sequence_printed(ProofSequence s) {
    const auto r = [](long a, long b) { return make_rational(a, b); };
    switch (s) {
        case ProofSequence::a_n:
            return {3,
                    PiLaurent(r(1, 127)) + PiLaurent::monomial(r(1, 80640), 8) +
                        PiLaurent::monomial(r(1, 62208000), 12),
                    "0.14039705", "0.30290769"};
        case ProofSequence::b_N:
            return {2, PiLaurent(r(1, 511)) + PiLaurent::monomial(r(1, 7257600), 10), "0.0148603",
                    "0.4674011"};
        case ProofSequence::x_n:
            return {2,
                    PiLaurent(r(1, 62)) + PiLaurent::monomial(r(1, 7680), 6) +
                        PiLaurent::monomial(r(1, 11059200), 10),
                    "0.1497778", "0.1514538"};
        case ProofSequence::y_N:
            return {1, PiLaurent::monomial(r(1, 48384), 4), "0.00201325", "0.23370055"};
        case ProofSequence::A_n: return {6, PiLaurent(r(3138660, 27229)), "115.269", "129.746"};
    }
    return {};
}

Interval proof_sequence_value(ProofSequence s, unsigned index, mpfr_prec_t precision) {
    return pilaurent_eval(proof_sequence_exact(s, index), precision);
}

}  // namespace trigcert
