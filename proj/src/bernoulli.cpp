#include "trigcert/bernoulli.hpp"

#include <stdexcept>

namespace trigcert {

BernoulliTable& BernoulliTable::shared() {
    static BernoulliTable table;
    return table;
}

unsigned BernoulliTable::size() const {
    std::lock_guard lock(mutex_);
    return static_cast<unsigned>(signed_.size());
}

void BernoulliTable::extend_locked(unsigned m) {
    if (signed_.empty()) signed_.push_back(Rational(1));
    while (signed_.size() <= m) {
        const unsigned n = static_cast<unsigned>(signed_.size());
        if (n > 1 && n % 2 == 1) {
            signed_.push_back(Rational(0));
            continue;
        }
        // B_n = -1/(n+1) sum_{j<n} C(n+1, j) B_j
        Rational s = 0;
        for (unsigned j = 0; j < n; ++j) {
            if (j > 1 && j % 2 == 1) continue;
            s += Rational(binomial(n + 1, j)) * signed_[j];
        }
        Rational b = -s / Rational(n + 1);
        b.canonicalize();
        signed_.push_back(b);
    }
}

Rational BernoulliTable::signed_value(unsigned m) {
    std::lock_guard lock(mutex_);
    extend_locked(m);
    return signed_[m];
}

Rational BernoulliTable::abs_even(unsigned k) {
    if (k == 0) throw std::invalid_argument("bernoulli_abs_even needs k >= 1");
    std::lock_guard lock(mutex_);
    extend_locked(2 * k);
    return abs(signed_[2 * k]);
}

Rational bernoulli_abs_even(unsigned k) { return BernoulliTable::shared().abs_even(k); }

bool bernoulli_bound_check(unsigned k, const Interval& pi) {
    const mpfr_prec_t prec = pi.precision();
    Rational value = bernoulli_abs_even(k) / Rational(factorial(2 * k));
    Interval v(value, prec);
    Interval two_pi_pow = int_pow(pi * 2L, 2 * k);
    Interval lower = Interval(2L, prec) / (two_pi_pow * (Rational(1) - pow2(-2L * k)));
    Interval upper = Interval(2L, prec) / (two_pi_pow * (Rational(1) - pow2(1 - 2L * k)));
    return compare(lower, v) == Ordering::less && compare(v, upper) == Ordering::less;
}

}  // namespace trigcert
