#include "trigcert/pi.hpp"

#include <map>
#include <mutex>

namespace trigcert {

namespace {

// atan(1/m) = sum_{i>=0} (-1)^i / ((2i+1) m^(2i+1)). The terms decrease
// monotonically, so the value lies between consecutive partial sums.
Interval arctan_inverse(unsigned long m, mpfr_prec_t prec) {
    const Interval one(1L, prec);
    Interval power = one / Interval(static_cast<long>(m), prec);  // 1/m^(2i+1)
    const Interval m2(static_cast<long>(m * m), prec);
    Interval sum(prec);
    // Stop once a term is below 2^-(prec+2).
    Interval threshold = mul_2si(one, -static_cast<long>(prec) - 2);
    for (unsigned long i = 0;; ++i) {
        Interval term = power / (2 * i + 1);
        if (compare(term, threshold) == Ordering::less) {
            // Remaining tail lies between 0 and the current (first omitted) term,
            // with sign (-1)^i.
            Interval tail = hull(Interval(prec), term);
            if (i % 2 == 1) tail = -tail;
            return sum + tail;
        }
        if (i % 2 == 0) sum += term;
        else sum -= term;
        power = power / m2;
    }
}

Interval compute_pi(mpfr_prec_t prec) {
    const mpfr_prec_t work = prec + 32;
    Interval a = arctan_inverse(5, work);
    Interval b = arctan_inverse(239, work);
    Interval pi = a * 16L - b * 4L;
    return pi.with_precision(prec);
}

std::mutex cache_mutex;
std::map<mpfr_prec_t, Interval>& cache() {
    static std::map<mpfr_prec_t, Interval> c;
    return c;
}

}  // namespace

Interval pi_enclosure(mpfr_prec_t precision_bits) {
    if (precision_bits < 8) throw std::invalid_argument("pi_enclosure needs at least 8 bits");
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache().find(precision_bits);
        if (it != cache().end()) return it->second;
    }
    Interval pi = compute_pi(precision_bits);
    std::lock_guard lock(cache_mutex);
    return cache().emplace(precision_bits, std::move(pi)).first->second;
}

Interval half_pi_enclosure(mpfr_prec_t precision_bits) {
    return mul_2si(pi_enclosure(precision_bits), -1);
}

}  // namespace trigcert
