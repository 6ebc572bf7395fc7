#pragma once

// The fixed list of inequalities the certifier knows about.
//
// Two-sided families share a base form N and a sharp form K: the bound is
// E(x) = P(x) + sign * kappa * x^q tan x, and after multiplying through by a
// positive factor the lower gap becomes N - sign*kappa*K and the upper gap
// sign*kappa*K - N. The ratio sign*N/K is the function whose endpoint limits
// are the best constants.

#include "trigcert/interval.hpp"
#include "trigcert/pi_laurent.hpp"
#include "trigcert/trig_poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace trigcert {

enum class Side { lower, upper, single };
enum class Expectation { proved, refuted };

std::string to_string(Side s);

struct GapForms {
    TrigPoly base;      // N, or the whole cleared gap for single-sided cases
    TrigPoly sharp;     // K
    PiLaurent constant;
    int sign = 1;
    Side side = Side::single;

    TrigPoly cleared() const;
    /// Same gap with the constant replaced.
    GapForms with_constant(const PiLaurent& c) const;
};

/// sin, cos (and tan on demand) of one argument enclosure.
struct TrigValues {
    explicit TrigValues(const Interval& x);
    Interval x, s, c;
    Interval tan() const;  // throws DomainError near pi/2
};

struct InequalityCase {
    std::string id;
    std::string family;
    std::string name;
    std::string multiplier;  // positive factor used for clearing
    Side side = Side::single;
    unsigned n_min = 0, n_max = 0;  // both zero for unparameterized cases
    unsigned n_default = 0;
    std::optional<Rational> domain_end;  // right end when not pi/2
    Expectation expected = Expectation::proved;
    bool sweep_only = false;
    std::function<GapForms(unsigned n)> forms;
    std::function<Interval(const TrigValues& v, unsigned n)> raw_gap;

    bool parameterized() const { return n_max != 0; }
    void check_param(unsigned n) const;  // throws std::invalid_argument
};

const std::vector<InequalityCase>& catalog();
const InequalityCase& find_case(const std::string& id);  // throws std::invalid_argument
std::vector<const InequalityCase*> family_cases(const std::string& family);
std::vector<std::string> families();

/// Catalog pairs where the first family's bounds are claimed to be at least
/// as tight as the second's on the compared sides.
struct DominancePair {
    std::string family;
    std::string weaker;
    bool lower = true;
    bool upper = true;
};
const std::vector<DominancePair>& dominance_pairs();

/// The derivative kernels whose positivity makes the two ratio functions
/// increasing, in the printed double-angle form.
TrigPoly kernel_wilker_ratio();   // g
TrigPoly kernel_huygens_ratio();  // G

/// Numerators of the two ratio functions after clearing, used for the
/// kernel identities  g = 945 (x sin N' - (9 sin + x cos) N)  and
/// G = 420 (x sin N' - (7 sin + 2 x cos) N).
TrigPoly wilker_ratio_numerator();
TrigPoly huygens_ratio_numerator();

}  // namespace trigcert
