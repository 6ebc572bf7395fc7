#include "trigcert/exp_poly.hpp"

#include <sstream>

namespace trigcert {

ExpPoly::ExpPoly(const Rational& c) { add({1, 0}, c); }
ExpPoly::ExpPoly(long c) { add({1, 0}, Rational(c)); }

void ExpPoly::add(const Key& k, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

ExpPoly ExpPoly::n(unsigned power) {
    ExpPoly e;
    e.add({1, power}, Rational(1));
    return e;
}

ExpPoly ExpPoly::exp(unsigned long base) {
    ExpPoly e;
    e.add({base, 0}, Rational(1));
    return e;
}

ExpPoly ExpPoly::poly(const std::vector<long>& coeffs, unsigned long base) {
    ExpPoly e;
    for (std::size_t i = 0; i < coeffs.size(); ++i) e.add({base, static_cast<unsigned>(i)}, Rational(coeffs[i]));
    return e;
}

ExpPoly ExpPoly::from_shifted(const std::map<unsigned long, std::vector<Rational>>& coeffs, long n0) {
    ExpPoly out;
    const ExpPoly m = n() - ExpPoly(n0);
    for (const auto& [base, cs] : coeffs) {
        ExpPoly part;
        ExpPoly mp(1L);
        for (const auto& c : cs) {
            part += mp * ExpPoly(c);
            mp = mp * m;
        }
        out += part * exp(base);
    }
    return out;
}

Rational ExpPoly::coefficient(unsigned long base, unsigned power) const {
    auto it = terms_.find({base, power});
    return it == terms_.end() ? Rational(0) : it->second;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& b) {
    for (const auto& [k, c] : b.terms_) add(k, c);
    return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& b) {
    for (const auto& [k, c] : b.terms_) add(k, -c);
    return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add({ka.first * kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

ExpPoly ExpPoly::shift(unsigned by) const {
    ExpPoly r;
    for (const auto& [k, c] : terms_) {
        const auto [base, power] = k;
        Rational scale = Rational(pow(Integer(base), by));
        for (unsigned j = 0; j <= power; ++j)
            r.add({base, j}, c * scale * Rational(binomial(power, j)) * Rational(pow(Integer(by), power - j)));
    }
    return r;
}

Rational ExpPoly::eval(long n) const {
    Rational s = 0;
    for (const auto& [k, c] : terms_) {
        const auto [base, power] = k;
        if (n < 0 && base != 1) throw std::invalid_argument("ExpPoly::eval needs n >= 0");
        Rational term = c * pow(Rational(n), static_cast<long>(power));
        if (base != 1) term *= Rational(pow(Integer(base), static_cast<unsigned long>(n)));
        s += term;
    }
    return s;
}

std::map<unsigned long, std::vector<Rational>> ExpPoly::expand_at(long n0) const {
    std::map<unsigned long, std::vector<Rational>> out;
    for (const auto& [k, c] : terms_) {
        const auto [base, power] = k;
        auto& v = out[base];
        if (v.size() < power + 1) v.resize(power + 1, Rational(0));
        // n^p = sum_j C(p, j) n0^(p-j) (n - n0)^j
        for (unsigned j = 0; j <= power; ++j)
            v[j] += c * Rational(binomial(power, j)) * pow(Rational(n0), static_cast<long>(power - j));
    }
    return out;
}

std::string ExpPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_group = true;
    for (auto it = terms_.rbegin(); it != terms_.rend();) {
        const unsigned long base = it->first.first;
        std::ostringstream group;
        bool first = true;
        for (; it != terms_.rend() && it->first.first == base; ++it) {
            const auto& [k, c] = *it;
            group << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
            first = false;
            Rational mag = abs(c);
            if (k.second == 0 || mag != 1) group << trigcert::to_string(mag);
            if (k.second >= 1) group << "n";
            if (k.second >= 2) group << "^" << k.second;
        }
        if (!first_group) os << " + ";
        first_group = false;
        if (base == 1) os << group.str();
        else os << "(" << group.str() << ")*" << base << "^n";
    }
    return os.str();
}

std::optional<std::string> first_difference(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly d = a - b;
    if (d.terms().empty()) return std::nullopt;
    // Report by descending base then descending power.
    const auto& [k, c] = *d.terms().rbegin();
    std::ostringstream os;
    os << "coefficient of n^" << k.second;
    if (k.first != 1) os << "*" << k.first << "^n";
    os << ": " << to_string(a.coefficient(k.first, k.second)) << " vs " << to_string(b.coefficient(k.first, k.second));
    return os.str();
}

}  // namespace trigcert
