#pragma once

// |B_2k| from the generating-function recurrence sum_{j<m} C(m,j) B_j = 0.

#include "trigcert/interval.hpp"
#include "trigcert/rational.hpp"

#include <mutex>
#include <vector>

namespace trigcert {

class BernoulliTable {
public:
    /// |B_2k| for k >= 1. Grows the table in one pass up to k.
    Rational abs_even(unsigned k);

    /// Signed B_m for m >= 0 (B_1 = -1/2, odd m > 1 give 0). Self-test only.
    Rational signed_value(unsigned m);

    unsigned size() const;

    static BernoulliTable& shared();

private:
    mutable std::mutex mutex_;
    std::vector<Rational> signed_;  // B_0 .. B_{2K}

    void extend_locked(unsigned m);
};

Rational bernoulli_abs_even(unsigned k);

/// Certifies 2/((2pi)^2k (1-2^-2k)) < |B_2k|/(2k)! < 2/((2pi)^2k (1-2^(1-2k))).
/// False means "not certified with this pi", never "refuted".
bool bernoulli_bound_check(unsigned k, const Interval& pi);

}  // namespace trigcert
