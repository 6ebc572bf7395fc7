#include "trigcert/trig_poly.hpp"

#include "trigcert/pi.hpp"
#include "trigcert/trig_enclose.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trigcert {

TrigPoly::TrigPoly(const PiLaurent& c) { add({0, 0, false}, c); }
TrigPoly::TrigPoly(long c) { add({0, 0, false}, PiLaurent(c)); }

TrigPoly TrigPoly::x(int power) { return term(PiLaurent(1L), power, 0, false); }
TrigPoly TrigPoly::cos(int freq) { return term(PiLaurent(1L), 0, freq, false); }
TrigPoly TrigPoly::sin(int freq) { return term(PiLaurent(1L), 0, freq, true); }

TrigPoly TrigPoly::term(const PiLaurent& c, int power, int freq, bool is_sin) {
    if (power < 0) throw std::invalid_argument("TrigPoly: negative power of x");
    TrigPoly t;
    t.add({power, freq, is_sin}, c);
    return t;
}

void TrigPoly::add(const TrigKey& key, const PiLaurent& c) {
    TrigKey k = key;
    PiLaurent v = c;
    if (k.freq < 0) {
        k.freq = -k.freq;
        if (k.is_sin) v = -v;
    }
    if (k.is_sin && k.freq == 0) return;
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int TrigPoly::max_power() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.power);
    return m;
}

int TrigPoly::max_freq() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.freq);
    return m;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& b) {
    for (const auto& [k, c] : b.terms_) add(k, c);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& b) {
    for (const auto& [k, c] : b.terms_) add(k, -c);
    return *this;
}

TrigPoly& TrigPoly::operator*=(const PiLaurent& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r;
    const PiLaurent half(make_rational(1, 2));
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            const int p = ka.power + kb.power;
            const PiLaurent c = ca * cb * half;
            const int s = ka.freq + kb.freq;
            const int d = ka.freq - kb.freq;
            if (!ka.is_sin && !kb.is_sin) {
                r.add({p, d, false}, c);
                r.add({p, s, false}, c);
            } else if (ka.is_sin && kb.is_sin) {
                r.add({p, d, false}, c);
                r.add({p, s, false}, -c);
            } else if (ka.is_sin) {
                r.add({p, s, true}, c);
                r.add({p, d, true}, c);
            } else {
                r.add({p, s, true}, c);
                r.add({p, d, true}, -c);
            }
        }
    }
    return r;
}

TrigPoly TrigPoly::pow(unsigned e) const {
    TrigPoly r(1L);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

TrigPoly TrigPoly::derivative() const {
    TrigPoly r;
    for (const auto& [k, c] : terms_) {
        if (k.power > 0) r.add({k.power - 1, k.freq, k.is_sin}, c * Rational(k.power));
        if (k.freq > 0) {
            // (cos jx)' = -j sin jx, (sin jx)' = j cos jx
            PiLaurent d = c * Rational(k.freq);
            r.add({k.power, k.freq, !k.is_sin}, k.is_sin ? d : -d);
        }
    }
    return r;
}

TrigPoly TrigPoly::reflect_at_half_pi() const {
    TrigPoly r;
    for (const auto& [k, c] : terms_) {
        // cos(j pi/2), sin(j pi/2)
        static const int cos_q[4] = {1, 0, -1, 0};
        static const int sin_q[4] = {0, 1, 0, -1};
        const int cq = cos_q[k.freq % 4];
        const int sq = sin_q[k.freq % 4];
        // cos(j(pi/2 - t)) = cq cos(jt) + sq sin(jt)
        // sin(j(pi/2 - t)) = sq cos(jt) - cq sin(jt)
        const int cos_part = k.is_sin ? sq : cq;
        const int sin_part = k.is_sin ? -cq : sq;
        for (int i = 0; i <= k.power; ++i) {
            // (pi/2 - t)^p = sum_i C(p,i) (pi/2)^(p-i) (-t)^i
            PiLaurent coeff = c * PiLaurent::half_pi_power(k.power - i) *
                              Rational(binomial(static_cast<unsigned long>(k.power), static_cast<unsigned long>(i)));
            if (i % 2 == 1) coeff = -coeff;
            if (cos_part != 0) r.add({i, k.freq, false}, coeff * Rational(cos_part));
            if (sin_part != 0) r.add({i, k.freq, true}, coeff * Rational(sin_part));
        }
    }
    return r;
}

PowerSeries<PiLaurent> TrigPoly::taylor(int degree) const {
    PowerSeries<PiLaurent> s(degree);
    for (const auto& [k, c] : terms_) {
        // x^p * sum_n (+-) j^n x^n / n!, n even for cos, odd for sin
        Rational jpow = k.is_sin ? Rational(k.freq) : Rational(1);
        int n = k.is_sin ? 1 : 0;
        int sign = 1;
        while (k.power + n <= degree) {
            Rational coef = jpow / Rational(factorial(static_cast<unsigned long>(n)));
            if (sign < 0) coef = -coef;
            s[k.power + n] += c * coef;
            if (k.freq == 0) break;
            jpow *= Rational(k.freq * k.freq);
            n += 2;
            sign = -sign;
        }
    }
    return s;
}

Interval TrigPoly::taylor_remainder(int degree, mpfr_prec_t prec) const {
    if (degree < max_power()) throw std::invalid_argument("taylor_remainder needs degree >= max power");
    Interval total(prec);
    for (const auto& [k, c] : terms_) {
        if (k.freq == 0) continue;
        const unsigned long n1 = static_cast<unsigned long>(degree - k.power + 1);
        Rational b = make_rational(trigcert::pow(Integer(k.freq), n1), factorial(n1));
        total += magnitude(c.eval(pi_enclosure_for(prec))) * b;
    }
    return total;
}

Interval TrigPoly::eval(const Interval& x) const {
    const mpfr_prec_t prec = x.precision();
    const Interval pi = pi_enclosure_for(prec);
    Interval sum(prec);
    for (const auto& [k, c] : terms_) {
        Interval v = c.eval(pi) * int_pow(x, static_cast<unsigned>(k.power));
        if (k.freq != 0) {
            Interval arg = x * static_cast<long>(k.freq);
            v *= k.is_sin ? sin_enclose(arg) : cos_enclose(arg);
        }
        sum += v;
    }
    return sum;
}

std::string TrigPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (k.power > 0) os << "*x^" << k.power;
        if (k.freq > 0) os << "*" << (k.is_sin ? "sin(" : "cos(") << k.freq << "x)";
    }
    return os.str();
}

TaylorModel::TaylorModel(const TrigPoly& f, mpfr_prec_t prec, int trig_degree)
    : prec_(prec), trig_degree_(trig_degree) {
    const Interval pi = pi_enclosure_for(prec);
    for (const auto& [k, c] : f.terms()) {
        if (groups_.empty() || groups_.back().freq != k.freq) groups_.push_back({k.freq, {}, {}});
        auto& vec = k.is_sin ? groups_.back().sin_coeffs : groups_.back().cos_coeffs;
        if (static_cast<int>(vec.size()) <= k.power) vec.resize(static_cast<std::size_t>(k.power) + 1, Interval(prec));
        vec[static_cast<std::size_t>(k.power)] = c.eval(pi);
    }
}

namespace {

using Poly = std::vector<Interval>;

// sum_p a_p (m+h)^p as a polynomial in h
Poly shift_poly(const Poly& a, const std::vector<Interval>& mpow, mpfr_prec_t prec) {
    Poly r(a.size(), Interval(prec));
    for (std::size_t p = 0; p < a.size(); ++p) {
        if (a[p].is_point() && a[p].lower_rational() == 0) continue;
        for (std::size_t i = 0; i <= p; ++i) {
            Rational b(binomial(p, i));
            r[i] += a[p] * mpow[p - i] * b;
        }
    }
    return r;
}

void axpy(Poly& acc, const Poly& a, const Interval& s) {
    if (acc.size() < a.size()) acc.resize(a.size(), Interval(s.precision()));
    for (std::size_t i = 0; i < a.size(); ++i) acc[i] += a[i] * s;
}

// |p|(r) = sum |p_i| r^i, an upper bound of |p(h)| for |h| <= r
Interval abs_bound(const Poly& p, const Interval& r) {
    Interval s(r.precision());
    Interval rp(1L, r.precision());
    for (const auto& c : p) {
        s += magnitude(c) * rp;
        rp *= r;
    }
    return s;
}

}  // namespace

Interval TaylorModel::range(const Rational& m, const Rational& r) const {
    const mpfr_prec_t prec = prec_;
    const int K = trig_degree_;
    Interval mi(m, prec), ri(r, prec);

    std::size_t maxp = 0;
    for (const auto& g : groups_) maxp = std::max({maxp, g.cos_coeffs.size(), g.sin_coeffs.size()});
    std::vector<Interval> mpow(maxp + 1, Interval(1L, prec));
    for (std::size_t i = 1; i <= maxp; ++i) mpow[i] = mpow[i - 1] * mi;

    Poly total(maxp + static_cast<std::size_t>(K) + 1, Interval(prec));
    Interval rem(prec);

    for (const auto& g : groups_) {
        Poly A = shift_poly(g.cos_coeffs, mpow, prec);
        Poly B = shift_poly(g.sin_coeffs, mpow, prec);
        if (g.freq == 0) {
            axpy(total, A, Interval(1L, prec));
            continue;
        }
        Interval jm = mi * static_cast<long>(g.freq);
        Interval c = cos_enclose(jm), s = sin_enclose(jm);
        std::size_t n = std::max(A.size(), B.size());
        A.resize(n, Interval(prec));
        B.resize(n, Interval(prec));
        Poly P(n, Interval(prec)), Q(n, Interval(prec));
        for (std::size_t i = 0; i < n; ++i) {
            P[i] = A[i] * c + B[i] * s;
            Q[i] = B[i] * c - A[i] * s;
        }
        // cos(jh), sin(jh) truncated at degree K
        Interval jp(1L, prec);
        const Interval jj(static_cast<long>(g.freq), prec);
        for (int d = 0; d <= K; ++d) {
            Interval coef = jp / Rational(factorial(static_cast<unsigned long>(d)));
            const bool neg = (d / 2) % 2 == 1;
            if (neg) coef = -coef;
            const Poly& src = d % 2 == 0 ? P : Q;
            for (std::size_t i = 0; i < n; ++i) total[i + static_cast<std::size_t>(d)] += src[i] * coef;
            jp *= jj;
        }
        // |cos(y) - T_K(y)|, |sin(y) - T_K(y)| <= |y|^(K+1)/(K+1)!
        Interval tail = int_pow(jj * ri, static_cast<unsigned>(K + 1)) /
                        Rational(factorial(static_cast<unsigned long>(K + 1)));
        rem += (abs_bound(P, ri) + abs_bound(Q, ri)) * tail;
    }

    Interval result = total[0];
    Interval rp(1L, prec);
    const Interval zero(prec);
    for (std::size_t i = 1; i < total.size(); ++i) {
        rp *= ri;
        Interval hp = (i % 2 == 0) ? hull(zero, rp) : hull(-rp, rp);
        result += total[i] * hp;
    }
    Interval rm = magnitude(rem);
    return result + hull(-rm, rm);
}

}  // namespace trigcert
