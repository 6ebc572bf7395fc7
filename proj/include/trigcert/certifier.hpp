#pragma once

// Certification of strict positivity of cleared forms on (0, pi/2) (or on
// (0, b) for a rational b): exact series zones at both ends and Taylor-model
// bisection in between.

#include "trigcert/catalog.hpp"
#include "trigcert/interval.hpp"
#include "trigcert/pi_laurent.hpp"
#include "trigcert/trig_poly.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace trigcert {

enum class Status { proved, refuted, inconclusive };
std::string to_string(Status s);

struct CertifyConfig {
    unsigned max_depth = 40;
    mpfr_prec_t precision = 64;  // first entry of the schedule p, 2p, 4p, 8p
    Rational delta0 = make_rational(1, 4);
    Rational tighten = 0;  // kappa -> kappa (1 + tighten) in the adverse direction
};

struct Leaf {
    Rational lo, hi;
    mpfr_prec_t precision;
    int sign;
};

struct EndpointZone {
    Rational width;  // delta at 0, tau at pi/2
    int valuation = 0;
    PiLaurent leading;
    std::string tail_bound;
    bool certified = false;
};

struct Certificate {
    std::string case_id;
    std::optional<unsigned> n;
    std::string constant;
    Rational tighten = 0;
    Status status = Status::inconclusive;
    std::optional<Rational> witness;
    std::string witness_value;  // certified decimal of the cleared gap there
    std::string reason;
    std::vector<Leaf> leaves;
    EndpointZone zero;
    std::optional<EndpointZone> pi_half;
    Rational domain_end_used;  // right end of the bisected interior
    unsigned long nodes = 0;
    double seconds = 0;

    nlohmann::json to_json() const;
    /// Deterministic summary; omits timings.
    std::string to_markdown() const;
};

/// Certifies f > 0 on (0, pi/2), or on (0, domain_end] when given.
Certificate certify_positive(const TrigPoly& f, const std::optional<Rational>& domain_end,
                             const CertifyConfig& config);

/// Certifies the catalog gap. Throws std::invalid_argument for n out of range
/// or for sweep-only cases.
Certificate certify_sign(const InequalityCase& c, unsigned n, const CertifyConfig& config = {});

/// The constant after tightening: kappa (1 + t) towards the invalid side.
PiLaurent tightened_constant(const GapForms& g, const Rational& t);

struct BestConstantPair {
    std::string family;
    unsigned n = 0;
    PiLaurent at_zero;
    PiLaurent at_pi_half;
    Interval at_zero_enclosure;
    Interval at_pi_half_enclosure;
    bool zero_is_inf = true;        // ratio increases from 0 to pi/2
    bool matches_printed = false;   // both printed constants equal the limits exactly
    bool matches_series = false;    // at_zero equals the ratio_taylor coefficient
    bool cross_validated = false;   // pi/2 - 2^-j evaluations approach the closed form
    PiLaurent lower_printed, upper_printed;
};

/// Endpoint limits of the ratio sign*N/K of a two-sided family.
BestConstantPair best_constants(const std::string& family, unsigned n = 0, mpfr_prec_t precision = 256);

/// The four families whose constants are all closed forms.
std::vector<std::string> sharp_families();

struct SweepRow {
    Interval x;
    std::optional<Interval> gap_lower, gap_upper;
    std::string dominance;  // 1, 0, ?, NA
};

/// Evaluations of the raw gaps at x_i = i (pi/2)/(grid+1), i = 1..grid.
/// Dominance is judged against versus, or the family's first listed
/// comparison when versus is empty.
std::vector<SweepRow> sweep(const std::string& family, unsigned n, unsigned grid, mpfr_prec_t precision = 256,
                            const std::string& versus = "");
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace trigcert
