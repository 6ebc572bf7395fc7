#include "trigcert/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace trigcert {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Integer parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("malformed integer literal");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return make_rational(parse_integer(text.substr(0, slash)),
                             parse_integer(text.substr(slash + 1)));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        std::string digits(whole);
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        Integer int_part = parse_integer(digits);
        if (frac.empty()) return Rational(int_part);
        Integer frac_part = parse_integer(frac);
        if (frac[0] == '-' || frac[0] == '+') throw std::invalid_argument("malformed decimal");
        Integer scale = pow(Integer(10), frac.size());
        Rational value = make_rational(abs(int_part) * scale + frac_part, scale);
        return negative ? Rational(-value) : value;
    }
    return Rational(parse_integer(text));
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow2(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? make_rational(Integer(1), p) : Rational(p);
}

Integer pow(const Integer& z, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
    return r;
}

Rational pow(const Rational& q, long e) {
    unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r = make_rational(pow(q.get_num(), m), pow(q.get_den(), m));
    if (e < 0) {
        if (sgn(r) == 0) throw std::domain_error("negative power of zero");
        r = 1 / r;
    }
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace trigcert
