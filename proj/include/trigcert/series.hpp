#pragma once

#include "trigcert/power_series.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace trigcert {

enum class Elementary { sin, cos, tan, sin_squared, cos_2x, x_cot };

/// Parses "sin", "cos", "tan", "sin2", "cos2x", "xcot".
Elementary parse_elementary(std::string_view name);
std::string to_string(Elementary e);

/// Exact Taylor coefficients at 0 through x^order. tan is sin/cos.
RationalSeries ps_elementary(Elementary e, int order);

/// t_k = 2^2k (2^2k - 1) |B_2k| / (2k)!, the x^(2k-1) coefficient of tan.
Rational tan_coeff(unsigned k);

enum class RatioId { wilker, second_wilker, huygens, second_huygens };

/// "wilker-ratio", "second-wilker-ratio", "huygens-ratio", "second-huygens-ratio"
RatioId parse_ratio_id(std::string_view name);
std::string to_string(RatioId r);
std::vector<std::string> ratio_names();

/// The ratio (E(x) - E(0)) / (x^3 tan x) as a full series through x^order.
RationalSeries ratio_series(RatioId id, int order);

/// Even-power coefficients of the ratio, exact modulo x^order: the values at
/// x^0, x^2, ..., x^(order-1 or order-2). order 14 gives seven numbers.
std::vector<Rational> ratio_taylor(RatioId id, int order);

/// T >= 0 with |f(x) - sum_{i<=order} f_i x^i| <= T x^(order+1) for 0 < x <= radius.
/// Throws DomainError when radius is outside the certified convergence zone.
Rational series_tail_bound(Elementary e, int order, const Rational& radius);

}  // namespace trigcert
