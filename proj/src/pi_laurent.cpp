#include "trigcert/pi_laurent.hpp"

#include "trigcert/pi.hpp"

#include <sstream>
#include <stdexcept>

namespace trigcert {

PiLaurent::PiLaurent(const Rational& constant) { add_term(0, constant); }
PiLaurent::PiLaurent(long constant) { add_term(0, Rational(constant)); }

PiLaurent PiLaurent::monomial(const Rational& coefficient, int power) {
    PiLaurent p;
    p.add_term(power, coefficient);
    return p;
}

PiLaurent PiLaurent::half_pi_power(int power) { return monomial(pow2(-power), power); }

void PiLaurent::add_term(int power, const Rational& c) {
    if (trigcert::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(power, c);
    if (!inserted) {
        it->second += c;
        if (trigcert::is_zero(it->second)) terms_.erase(it);
    }
}

Rational PiLaurent::coefficient(int power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool PiLaurent::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

PiLaurent& PiLaurent::operator+=(const PiLaurent& b) {
    for (const auto& [p, c] : b.terms_) add_term(p, c);
    return *this;
}

PiLaurent& PiLaurent::operator-=(const PiLaurent& b) {
    for (const auto& [p, c] : b.terms_) add_term(p, -c);
    return *this;
}

PiLaurent& PiLaurent::operator*=(const PiLaurent& b) {
    PiLaurent r;
    for (const auto& [p, c] : terms_)
        for (const auto& [q, d] : b.terms_) r.add_term(p + q, c * d);
    *this = std::move(r);
    return *this;
}

PiLaurent& PiLaurent::operator*=(const Rational& b) {
    if (trigcert::is_zero(b)) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= b;
    return *this;
}

PiLaurent operator-(const PiLaurent& a) {
    PiLaurent r = a;
    for (auto& [p, c] : r.terms_) c = -c;
    return r;
}

PiLaurent operator+(PiLaurent a, const PiLaurent& b) { return a += b; }
PiLaurent operator-(PiLaurent a, const PiLaurent& b) { return a -= b; }
PiLaurent operator*(PiLaurent a, const PiLaurent& b) { return a *= b; }
PiLaurent operator*(PiLaurent a, const Rational& b) { return a *= b; }
PiLaurent operator*(const Rational& b, PiLaurent a) { return a *= b; }

PiLaurent PiLaurent::pow(int e) const {
    if (e < 0) {
        if (!is_monomial()) throw std::domain_error("negative power of a non-monomial PiLaurent");
        const auto& [p, c] = *terms_.begin();
        return monomial(trigcert::pow(c, e), p * e);
    }
    PiLaurent r(1L);
    PiLaurent base = *this;
    for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
        if (k & 1U) r *= base;
        if (k > 1) base *= base;
    }
    return r;
}

PiLaurent PiLaurent::divided_by(const PiLaurent& monomial_divisor) const {
    if (!monomial_divisor.is_monomial()) throw std::domain_error("PiLaurent division by a non-monomial");
    return *this * monomial_divisor.pow(-1);
}

Interval PiLaurent::eval(const Interval& pi) const {
    const mpfr_prec_t prec = pi.precision();
    Interval sum(prec);
    if (terms_.empty()) return sum;
    const Interval inv_pi = Interval(1L, prec) / pi;
    for (const auto& [p, c] : terms_) {
        Interval base = p >= 0 ? int_pow(pi, static_cast<unsigned>(p))
                               : int_pow(inv_pi, static_cast<unsigned>(-p));
        sum += base * c;
    }
    return sum;
}

std::string PiLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [p, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (p == 0) {
            os << trigcert::to_string(mag);
            continue;
        }
        if (mag != 1) os << trigcert::to_string(mag) << "*";
        os << "pi";
        if (p != 1) os << "^" << p;
    }
    return os.str();
}

Interval pilaurent_eval(const PiLaurent& c, mpfr_prec_t precision_bits) {
    return c.eval(pi_enclosure(precision_bits));
}

int exact_sign(const PiLaurent& c) {
    if (c.is_zero()) return 0;
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        int s = pilaurent_eval(c, prec).certain_sign();
        if (s != 0) return s;
        if (prec > (1 << 16)) throw std::runtime_error("exact_sign: precision exhausted");
    }
}

}  // namespace trigcert
