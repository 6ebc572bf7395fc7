#pragma once

// Exact verification of the integer and exponential-polynomial steps behind
// the kernel positivity proofs and the monotone-ratio step.

#include "trigcert/exp_poly.hpp"

#include <string>
#include <vector>

namespace trigcert {

enum class CheckStatus { pass, fail, erratum };
std::string to_string(CheckStatus s);

/// erratum: a printed intermediate differs from the exact value while the
/// conclusion it supports still holds.
struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

/// The displayed polynomials, exactly as printed.
namespace printed {
ExpPoly wilker_u_factor();  // bracket of u_n: the coefficient of 2^2n x^(2n+1)/(2n+1)!
ExpPoly wilker_p();
ExpPoly wilker_q();
ExpPoly appendix_b_direct();
ExpPoly appendix_b_shifted();
ExpPoly huygens_u_factor();  // bracket of U_n: the coefficient of x^2n/(81 (2n)!)
ExpPoly huygens_p();
ExpPoly huygens_q();
ExpPoly appendix_c_combined();  // Q_n - 12 P_n with the 70 n^4 9^n term
ExpPoly appendix_c_numerator();
ExpPoly appendix_c_bound();    // right side of the second inequality, times 70 n^4
ExpPoly appendix_r(), appendix_r_shifted();
ExpPoly appendix_s(), appendix_s_shifted();
ExpPoly appendix_t(), appendix_t_shifted();
}  // namespace printed

/// p_n consistent with the ratio identity: the u_n bracket at n+1.
ExpPoly wilker_p_corrected();

/// Ratio identities, series agreement with g and G, and the displayed
/// expansions of both appendices.
std::vector<CheckResult> exp_poly_checks();

enum class RangeCheck { B, C1, C2 };

/// Exact check for every n from the base index (9 for B, 6 otherwise) to n_max.
bool appendix_range_check(RangeCheck which, unsigned n_max);

/// Monotone-ratio reduction for N = 1..n_max and k = 2N+1..2N+k_span.
std::vector<CheckResult> appendix_a_checks(unsigned n_max = 20, unsigned k_span = 20);
std::vector<CheckResult> appendix_b_checks(unsigned n_max = 100);
std::vector<CheckResult> appendix_c_checks(unsigned n_max = 100);

/// Printed values of the proof sequences, their strict comparisons, and
/// monotonicity over indices up to max_index.
std::vector<CheckResult> sequence_checks(unsigned max_index = 40);

/// Coefficient claims for n <= n_max and k up to n + k_span (2N + k_span on
/// the right), plus the first monotone-ratio step.
std::vector<CheckResult> claim_checks(unsigned n_max = 12, unsigned k_span = 30);

}  // namespace trigcert
