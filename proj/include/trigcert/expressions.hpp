#pragma once

// Interval evaluators for the named expressions and for cleared forms.

#include "trigcert/catalog.hpp"
#include "trigcert/interval.hpp"
#include "trigcert/trig_poly.hpp"

#include <optional>
#include <string>
#include <utility>

namespace trigcert {

enum class ExpressionId {
    wilker,          // (sin x/x)^2 + tan x/x
    second_wilker,   // (x/sin x)^2 + x/tan x
    huygens,         // 2 sin x/x + tan x/x
    second_huygens,  // 2 x/sin x + x/tan x
    ratio_f,         // the ratio whose limits are a and b
    ratio_F,         // the ratio whose limits are rho and varrho
    kernel_g,
    kernel_G,
};

std::optional<ExpressionId> parse_expression_id(const std::string& name);
std::string to_string(ExpressionId id);

/// Range enclosure of the expression over x, which must lie in (0, pi/2).
/// Throws DomainError when x touches 0 or comes too close to pi/2.
Interval eval_expression(ExpressionId id, const Interval& x);

/// Exact valuation and leading Taylor coefficient of f at 0; nullopt when
/// every coefficient through max_degree vanishes.
std::optional<std::pair<int, PiLaurent>> leading_term(const TrigPoly& f, int max_degree);

/// Enclosure of f(x) for 0 <= x. Below delta0 the exact series with its
/// remainder bound is used, so that x^m (leading + tail) keeps its sign.
Interval eval_cleared(const TrigPoly& f, const Interval& x, const Rational& delta0 = make_rational(1, 4));

struct ClearedForm {
    TrigPoly form;
    std::string multiplier;
    int valuation = 0;
    PiLaurent leading;
};

ClearedForm cleared_form(const InequalityCase& c, unsigned n);

/// Raw (uncleared) gap of a catalog case at x.
Interval eval_gap(const InequalityCase& c, unsigned n, const Interval& x);

}  // namespace trigcert
