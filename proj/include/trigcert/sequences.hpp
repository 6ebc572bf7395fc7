#pragma once

// Coefficient laws, the coefficient claims they satisfy, and the sequences
// whose monotonicity closes the series arguments.

#include "trigcert/interval.hpp"
#include "trigcert/pi_laurent.hpp"
#include "trigcert/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trigcert {

/// c_k = (-1)^(k-1) 2^(2k-1)/(2k)! + t_k, the x^(2k-2) coefficient of
/// (sin x/x)^2 + tan x/x.
Rational wilker_coeff(unsigned k);

/// d_k = 2(-1)^(k-1)/(2k-1)! + t_k, the x^(2k-2) coefficient of
/// 2 sin x/x + tan x/x.
Rational huygens_coeff(unsigned k);

/// Coefficient of x^2k in the expansion bound of the second Wilker sum:
/// (k-1) 2^(2k+1) |B_2k| / (2k)!.
Rational second_wilker_coeff(unsigned k);

/// (2/pi)^(2n) as an exact element.
PiLaurent two_over_pi_power(unsigned two_n);

enum class ClaimFamily { wilker_left, wilker_right, huygens_left, huygens_right };

std::optional<ClaimFamily> parse_claim_family(const std::string& name);
std::string to_string(ClaimFamily f);

/// Left families take (n, k) with k >= n+2; right families take (N, k) with
/// k >= 2N+1. Returns false when the strict inequality is not certified.
bool claim_check(ClaimFamily family, unsigned n, unsigned k, const Interval& pi);

/// The exact difference for the left families at k = n+1 (the term that
/// vanishes): c_{n+1} t_1 - c_{n+1} for wilker-left.
Rational claim_left_difference(ClaimFamily family, unsigned n, unsigned k);

enum class RatioCheck { ratio1, ratio2 };

/// ratio1: 2(4^k-2)(4*4^k-1) < pi^2 (4^k-1)(2*4^k-1).
/// ratio2: the monotone-ratio step of the Huygens right claim, certified
/// through its exact integer reduction with pi^2 < 10.
bool ratio_mono_check(RatioCheck which, unsigned k, unsigned N, const Interval& pi);

/// Integer value of the ratio2 reduction polynomial at (k, N); positive
/// means the step holds.
Integer ratio2_reduction(unsigned k, unsigned N);

enum class ProofSequence { a_n, b_N, x_n, y_N, A_n };

std::optional<ProofSequence> parse_proof_sequence(const std::string& name);
std::string to_string(ProofSequence s);
unsigned first_index(ProofSequence s);

/// Exact closed form of the sequence value (PiLaurent; A_n is pi-free).
PiLaurent proof_sequence_exact(ProofSequence s, unsigned index);

/// The threshold each sequence is compared against; only A_n's depends on
/// the index ((9/4)^n).
PiLaurent proof_sequence_threshold(ProofSequence s, unsigned index);

/// The closed form printed for the first index together with its printed
/// decimals and those of the threshold.
struct PrintedValue {
    unsigned index;
    PiLaurent value;
    std::string value_decimals;
    std::string threshold_decimals;
};
PrintedValue proof_sequence_printed(ProofSequence s);

Interval proof_sequence_value(ProofSequence s, unsigned index, mpfr_prec_t precision);

}  // namespace trigcert
