#pragma once

// Truncated power series c_0 + c_1 x + ... + c_order x^order, exact through
// x^order. Templated so the same algebra runs over Rational and PiLaurent.

#include "trigcert/interval.hpp"
#include "trigcert/pi_laurent.hpp"
#include "trigcert/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace trigcert {

inline Rational scalar_inverse(const Rational& q) {
    if (is_zero(q)) throw DomainError("inverse of zero");
    return 1 / q;
}

inline PiLaurent scalar_inverse(const PiLaurent& q) {
    if (q.is_zero()) throw DomainError("inverse of zero");
    return q.pow(-1);
}

template <class Scalar>
class PowerSeries {
public:
    explicit PowerSeries(int order = 0) : coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("negative series order");
    }
    PowerSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {  // NOLINT
        if (coeffs_.empty()) coeffs_.resize(1);
    }

    static PowerSeries constant(const Scalar& c, int order) {
        PowerSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }
    /// c x^k
    static PowerSeries monomial(const Scalar& c, int k, int order) {
        PowerSeries s(order);
        if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    Scalar& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

    /// First index with a nonzero coefficient, order+1 for the zero series.
    int valuation() const {
        for (int i = 0; i <= order(); ++i)
            if (!is_zero(coeffs_[static_cast<std::size_t>(i)])) return i;
        return order() + 1;
    }
    bool is_zero_series() const { return valuation() > order(); }

    PowerSeries truncated(int order) const {
        PowerSeries r(order);
        for (int i = 0; i <= std::min(order, this->order()); ++i) r[i] = (*this)[i];
        return r;
    }

    PowerSeries& operator+=(const PowerSeries& b) {
        shrink_to(b.order());
        for (int i = 0; i <= order(); ++i) (*this)[i] += b[i];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& b) {
        shrink_to(b.order());
        for (int i = 0; i <= order(); ++i) (*this)[i] -= b[i];
        return *this;
    }
    PowerSeries& operator*=(const Scalar& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator-(PowerSeries a) {
        for (auto& x : a.coeffs_) x = -x;
        return a;
    }
    friend PowerSeries operator*(PowerSeries a, const Scalar& c) { return a *= c; }

    /// Cauchy product, exact through the smaller order.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const int n = std::min(a.order(), b.order());
        PowerSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (is_zero(a[i])) continue;
            for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }

    /// a / b. Leading zeros common to both are cancelled first; the result
    /// loses that many orders of accuracy.
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
        const int vb = b.valuation();
        if (vb > b.order()) throw DomainError("power series division by the zero series");
        const int va = a.valuation();
        if (va < vb) throw DomainError("power series division: divisor valuation exceeds dividend's");
        PowerSeries num = a.shifted(-vb);
        PowerSeries den = b.shifted(-vb);
        const int n = std::min(num.order(), den.order());
        const Scalar inv = scalar_inverse(den[0]);
        PowerSeries q(n);
        for (int i = 0; i <= n; ++i) {
            Scalar s = num[i];
            for (int j = 1; j <= i; ++j) s -= den[j] * q[i - j];
            q[i] = s * inv;
        }
        return q;
    }

    /// Multiplies by x^k (k may be negative; the dropped coefficients must be zero).
    PowerSeries shifted(int k) const {
        if (k >= 0) {
            PowerSeries r(order() + k);
            for (int i = 0; i <= order(); ++i) r[i + k] = (*this)[i];
            return r;
        }
        const int drop = -k;
        for (int i = 0; i < std::min(drop, order() + 1); ++i)
            if (!is_zero((*this)[i])) throw DomainError("shift would drop a nonzero coefficient");
        if (drop > order()) return PowerSeries(0);
        PowerSeries r(order() - drop);
        for (int i = 0; i <= r.order(); ++i) r[i] = (*this)[i + drop];
        return r;
    }

    /// f(c x)
    PowerSeries scaled_argument(const Scalar& c) const {
        PowerSeries r = *this;
        Scalar p = Scalar(1L);
        for (int i = 0; i <= order(); ++i) {
            r[i] *= p;
            p *= c;
        }
        return r;
    }

    /// d/dx, one order lower.
    PowerSeries derivative() const {
        if (order() == 0) return PowerSeries(0);
        PowerSeries r(order() - 1);
        for (int i = 1; i <= order(); ++i) r[i - 1] = (*this)[i] * Rational(i);
        return r;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Scalar> coeffs_;

    void shrink_to(int other_order) {
        if (other_order < order()) coeffs_.resize(static_cast<std::size_t>(other_order) + 1);
    }
};

using RationalSeries = PowerSeries<Rational>;

}  // namespace trigcert
