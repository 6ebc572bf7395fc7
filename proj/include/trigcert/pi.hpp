#pragma once

#include "trigcert/interval.hpp"

namespace trigcert {

/// Certified enclosure of pi with width <= 2^(4 - precision_bits).
///
/// Computed from Machin's formula pi = 16 atan(1/5) - 4 atan(1/239); each
/// arctangent series is summed in outward-rounded arithmetic and its
/// alternating tail is bounded by the first omitted term. Results are cached
/// per precision; the cache is safe for concurrent readers.
/// Throws std::invalid_argument when precision_bits < 8.
Interval pi_enclosure(mpfr_prec_t precision_bits);

/// pi/2 at the given precision.
Interval half_pi_enclosure(mpfr_prec_t precision_bits);

}  // namespace trigcert

namespace trigcert {

/// pi_enclosure with the precision clamped to the minimum of 8 bits.
inline Interval pi_enclosure_for(mpfr_prec_t precision_bits) {
    return pi_enclosure(precision_bits < 8 ? 8 : precision_bits);
}

}  // namespace trigcert
