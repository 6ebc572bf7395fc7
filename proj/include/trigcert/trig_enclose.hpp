#pragma once

// Rigorous sin / cos / tan enclosures from truncated Taylor sums.

#include "trigcert/interval.hpp"

#include <utility>

namespace trigcert {

/// Number of series terms that pushes the truncation error below
/// 2^-(precision+8) for |x| <= bound.
int trig_terms_for(const Interval& x, mpfr_prec_t precision);

/// {sin t : t in x}. With x inside [0, 2] the first omitted term brackets the
/// remainder (alternating series); elsewhere (|x| <= 32) the Lagrange bound
/// |x|^(N+1)/(N+1)! is used. The result is intersected with [-1, 1].
/// terms <= 0 picks the count from the precision.
Interval sin_enclose(const Interval& x, int terms = 0);
Interval cos_enclose(const Interval& x, int terms = 0);

/// sin / cos; throws DomainError when the cosine enclosure contains 0.
Interval tan_enclose(const Interval& x, int terms = 0);

/// Enclosures of t_{n+1} x^2n tan x and (2/pi)^2n x^2n tan x, the two sides
/// of the tangent-remainder bracket.
std::pair<Interval, Interval> tan_tail_bracket(unsigned n, const Interval& x);

/// tan x - sum_{k<=n} t_k x^(2k-1), the quantity the bracket encloses.
Interval tan_remainder(unsigned n, const Interval& x);

}  // namespace trigcert
