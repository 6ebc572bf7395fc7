#include "trigcert/catalog.hpp"

#include "trigcert/bernoulli.hpp"
#include "trigcert/series.hpp"
#include "trigcert/sequences.hpp"
#include "trigcert/trig_enclose.hpp"

#include <stdexcept>

namespace trigcert {

std::string to_string(Side s) {
    switch (s) {
        case Side::lower: return "lower";
        case Side::upper: return "upper";
        case Side::single: return "single";
    }
    return "?";
}

TrigPoly GapForms::cleared() const {
    switch (side) {
        case Side::lower: return base - sharp * (constant * Rational(sign));
        case Side::upper: return sharp * (constant * Rational(sign)) - base;
        case Side::single: return base;
    }
    return base;
}

GapForms GapForms::with_constant(const PiLaurent& c) const {
    GapForms g = *this;
    g.constant = c;
    return g;
}

TrigValues::TrigValues(const Interval& arg) : x(arg), s(sin_enclose(arg)), c(cos_enclose(arg)) {}

Interval TrigValues::tan() const {
    if (c.contains_zero()) throw DomainError("tan near a singularity");
    return s / c;
}

void InequalityCase::check_param(unsigned n) const {
    if (!parameterized()) return;
    if (n < n_min || n > n_max)
        throw std::invalid_argument(id + ": n must lie in [" + std::to_string(n_min) + ", " +
                                    std::to_string(n_max) + "]");
}

namespace {

using Raw = std::function<Interval(const TrigValues&, unsigned)>;

Rational q(long a, long b) { return make_rational(a, b); }

const TrigPoly X = TrigPoly::x();
const TrigPoly S = TrigPoly::sin();
const TrigPoly C = TrigPoly::cos();

TrigPoly xp(int p) { return TrigPoly::x(p); }

// Uncleared expressions
Interval wilker(const TrigValues& v) { return sqr(v.s / v.x) + v.tan() / v.x; }
Interval second_wilker(const TrigValues& v) { return sqr(v.x / v.s) + v.x * v.c / v.s; }
Interval huygens(const TrigValues& v) { return v.s / v.x * 2L + v.tan() / v.x; }
Interval second_huygens(const TrigValues& v) { return v.x / v.s * 2L + v.x * v.c / v.s; }

Interval poly_eval(const std::vector<std::pair<int, Rational>>& terms, const Interval& x) {
    Interval s(x.precision());
    for (const auto& [p, c] : terms) s += int_pow(x, static_cast<unsigned>(p)) * c;
    return s;
}

struct TwoSided {
    std::string family, name, multiplier;
    unsigned n_min = 0, n_max = 0, n_default = 0;
    int sign = 1;
    std::function<Interval(const TrigValues&)> expression;
    std::function<Interval(const TrigValues&, unsigned)> prefix;  // P(x)
    std::function<int(unsigned)> tan_power;                       // q
    std::function<TrigPoly(unsigned)> base, sharp;
    std::function<PiLaurent(unsigned)> lower_constant, upper_constant;  // empty: side absent
    std::optional<Rational> domain_end;
    Expectation lower_expect = Expectation::proved, upper_expect = Expectation::proved;
    bool sweep_only = false;
};

void add_two_sided(std::vector<InequalityCase>& out, const TwoSided& f) {
    for (Side side : {Side::lower, Side::upper}) {
        const auto& constant = side == Side::lower ? f.lower_constant : f.upper_constant;
        if (!constant) continue;
        InequalityCase c;
        c.id = f.family + "-" + to_string(side);
        c.family = f.family;
        c.name = f.name + " (" + to_string(side) + " bound)";
        c.multiplier = f.multiplier;
        c.side = side;
        c.n_min = f.n_min;
        c.n_max = f.n_max;
        c.n_default = f.n_default;
        c.domain_end = f.domain_end;
        c.expected = side == Side::lower ? f.lower_expect : f.upper_expect;
        c.sweep_only = f.sweep_only;
        const int sign = f.sign;
        auto base = f.base;
        auto sharp = f.sharp;
        c.forms = [=](unsigned n) {
            GapForms g;
            g.base = base(n);
            g.sharp = sharp(n);
            g.constant = constant(n);
            g.sign = sign;
            g.side = side;
            return g;
        };
        auto expression = f.expression;
        auto prefix = f.prefix;
        auto tan_power = f.tan_power;
        c.raw_gap = [=](const TrigValues& v, unsigned n) {
            const mpfr_prec_t prec = v.x.precision();
            Interval kappa = pilaurent_eval(constant(n), prec) * static_cast<long>(sign);
            Interval bound = prefix(v, n) +
                             kappa * int_pow(v.x, static_cast<unsigned>(tan_power(n))) * v.tan();
            Interval e = expression(v);
            return side == Side::lower ? e - bound : bound - e;
        };
        out.push_back(std::move(c));
    }
}

void add_single(std::vector<InequalityCase>& out, std::string id, std::string family, std::string name,
                std::string multiplier, TrigPoly form, Raw raw,
                std::optional<Rational> domain_end = std::nullopt) {
    InequalityCase c;
    c.id = std::move(id);
    c.family = std::move(family);
    c.name = std::move(name);
    c.multiplier = std::move(multiplier);
    c.side = Side::single;
    c.domain_end = domain_end;
    c.forms = [form](unsigned) {
        GapForms g;
        g.base = form;
        g.side = Side::single;
        return g;
    };
    c.raw_gap = std::move(raw);
    out.push_back(std::move(c));
}

TrigPoly wilker_cleared() { return S * S * C + X * S - 2L * xp(2) * C; }
TrigPoly huygens_cleared() { return 2L * S * C + S - 3L * X * C; }
TrigPoly second_wilker_cleared() { return xp(2) * C + X * S * C * C - 2L * S * S * C; }
TrigPoly second_huygens_cleared() { return 2L * X * C + X * C * C - 3L * S * C; }

std::vector<InequalityCase> build_catalog() {
    std::vector<InequalityCase> out;

    // tan x - sum_{k<=n} t_k x^(2k-1) between t_{n+1} and (2/pi)^2n times x^2n tan x
    {
        TwoSided f;
        f.family = "lemma2.1";
        f.name = "tangent remainder bracket";
        f.multiplier = "cos x";
        f.n_min = 1;
        f.n_max = 8;
        f.n_default = 1;
        f.expression = [](const TrigValues& v) { return v.tan(); };
        f.prefix = [](const TrigValues& v, unsigned n) {
            Interval s(v.x.precision());
            for (unsigned k = 1; k <= n; ++k) s += int_pow(v.x, 2 * k - 1) * tan_coeff(k);
            return s;
        };
        f.tan_power = [](unsigned n) { return static_cast<int>(2 * n); };
        f.base = [](unsigned n) {
            TrigPoly b = S;
            for (unsigned k = 1; k <= n; ++k) b -= xp(static_cast<int>(2 * k - 1)) * C * tan_coeff(k);
            return b;
        };
        f.sharp = [](unsigned n) { return xp(static_cast<int>(2 * n)) * S; };
        f.lower_constant = [](unsigned n) { return PiLaurent(tan_coeff(n + 1)); };
        f.upper_constant = [](unsigned n) { return two_over_pi_power(2 * n); };
        add_two_sided(out, f);
    }

    // Wilker expansion truncated after the x^(2n-2) term
    {
        TwoSided f;
        f.family = "thm3.1";
        f.name = "Wilker expansion with tangent remainder";
        f.multiplier = "x^2 cos x";
        f.n_min = 3;
        f.n_max = 8;
        f.n_default = 3;
        f.expression = wilker;
        f.prefix = [](const TrigValues& v, unsigned n) {
            Interval s(2L, v.x.precision());
            for (unsigned k = 3; k <= n; ++k) s += int_pow(v.x, 2 * k - 2) * wilker_coeff(k);
            return s;
        };
        f.tan_power = [](unsigned n) { return static_cast<int>(2 * n - 1); };
        f.base = [](unsigned n) {
            TrigPoly b = wilker_cleared();
            for (unsigned k = 3; k <= n; ++k) b -= xp(static_cast<int>(2 * k)) * C * wilker_coeff(k);
            return b;
        };
        f.sharp = [](unsigned n) { return xp(static_cast<int>(2 * n + 1)) * S; };
        f.lower_constant = [](unsigned n) { return PiLaurent(wilker_coeff(n + 1)); };
        f.upper_constant = [](unsigned n) { return two_over_pi_power(2 * n); };
        add_two_sided(out, f);
    }

    // Huygens expansion truncated after the x^(2n-2) term
    {
        TwoSided f;
        f.family = "thm3.2";
        f.name = "Huygens expansion with tangent remainder";
        f.multiplier = "x cos x";
        f.n_min = 2;
        f.n_max = 8;
        f.n_default = 2;
        f.expression = huygens;
        f.prefix = [](const TrigValues& v, unsigned n) {
            Interval s(3L, v.x.precision());
            for (unsigned k = 3; k <= n; ++k) s += int_pow(v.x, 2 * k - 2) * huygens_coeff(k);
            return s;
        };
        f.tan_power = [](unsigned n) { return static_cast<int>(2 * n - 1); };
        f.base = [](unsigned n) {
            TrigPoly b = huygens_cleared();
            for (unsigned k = 3; k <= n; ++k) b -= xp(static_cast<int>(2 * k - 1)) * C * huygens_coeff(k);
            return b;
        };
        f.sharp = [](unsigned n) { return xp(static_cast<int>(2 * n)) * S; };
        f.lower_constant = [](unsigned n) { return PiLaurent(huygens_coeff(n + 1)); };
        f.upper_constant = [](unsigned n) { return two_over_pi_power(2 * n); };
        add_two_sided(out, f);
    }

    // Sharp x^7 tan x corrections
    const auto wilker_prefix = [](const TrigValues& v, unsigned) {
        return Interval(2L, v.x.precision()) +
               poly_eval({{3, q(8, 45)}, {5, q(-8, 945)}}, v.x) * v.tan();
    };
    const auto wilker_base = [](unsigned) {
        return wilker_cleared() - (xp(5) * q(8, 45) - xp(7) * q(8, 945)) * S;
    };
    {
        TwoSided f;
        f.family = "thm3.3";
        f.name = "Wilker with sharp x^7 tan x term";
        f.multiplier = "x^2 cos x";
        f.expression = wilker;
        f.prefix = wilker_prefix;
        f.tan_power = [](unsigned) { return 7; };
        f.base = wilker_base;
        f.sharp = [](unsigned) { return xp(9) * S; };
        f.lower_constant = [](unsigned) { return PiLaurent(q(16, 14175)); };
        f.upper_constant = [](unsigned) {
            return PiLaurent::monomial(256, -8) + PiLaurent::monomial(q(-128, 45), -4) +
                   PiLaurent::monomial(q(32, 945), -2);
        };
        add_two_sided(out, f);
    }
    {
        TwoSided f;
        f.family = "thm3.4-wilker2";
        f.name = "second Wilker with sharp x^7 tan x term";
        f.multiplier = "sin^2 x cos x";
        f.sign = -1;
        f.expression = second_wilker;
        f.prefix = [](const TrigValues& v, unsigned) {
            return Interval(2L, v.x.precision()) +
                   poly_eval({{3, q(2, 45)}, {5, q(-2, 315)}}, v.x) * v.tan();
        };
        f.tan_power = [](unsigned) { return 7; };
        f.base = [](unsigned) {
            return second_wilker_cleared() - (xp(3) * q(2, 45) - xp(5) * q(2, 315)) * S * S * S;
        };
        f.sharp = [](unsigned) { return xp(7) * S * S * S; };
        f.lower_constant = [](unsigned) {
            return PiLaurent::monomial(q(224, 315), -4) + PiLaurent::monomial(q(-8, 315), -2);
        };
        f.upper_constant = [](unsigned) { return PiLaurent(q(4, 1575)); };
        add_two_sided(out, f);
    }
    {
        TwoSided f;
        f.family = "thm3.4-huygens";
        f.name = "Huygens with sharp x^7 tan x term";
        f.multiplier = "x cos x";
        f.expression = huygens;
        f.prefix = [](const TrigValues& v, unsigned) {
            return Interval(3L, v.x.precision()) +
                   poly_eval({{3, q(3, 20)}, {5, q(1, 280)}}, v.x) * v.tan();
        };
        f.tan_power = [](unsigned) { return 7; };
        f.base = [](unsigned) { return huygens_cleared() - (xp(4) * q(3, 20) + xp(6) * q(1, 280)) * S; };
        f.sharp = [](unsigned) { return xp(8) * S; };
        f.lower_constant = [](unsigned) { return PiLaurent(q(23, 33600)); };
        f.upper_constant = [](unsigned) {
            return PiLaurent::monomial(256, -8) + PiLaurent::monomial(q(-12, 5), -4) +
                   PiLaurent::monomial(q(-1, 70), -2);
        };
        add_two_sided(out, f);
    }
    {
        TwoSided f;
        f.family = "thm3.4-huygens2";
        f.name = "second Huygens with sharp x^7 tan x term";
        f.multiplier = "sin x cos x";
        f.sign = -1;
        f.expression = second_huygens;
        f.prefix = [](const TrigValues& v, unsigned) {
            return Interval(3L, v.x.precision()) +
                   poly_eval({{3, q(1, 60)}, {5, q(-1, 280)}}, v.x) * v.tan();
        };
        f.tan_power = [](unsigned) { return 7; };
        f.base = [](unsigned) {
            return second_huygens_cleared() - (xp(3) * q(1, 60) - xp(5) * q(1, 280)) * S * S;
        };
        f.sharp = [](unsigned) { return xp(7) * S * S; };
        f.lower_constant = [](unsigned) {
            return PiLaurent::monomial(q(4, 15), -4) + PiLaurent::monomial(q(-1, 70), -2);
        };
        f.upper_constant = [](unsigned) { return PiLaurent(q(83, 100800)); };
        add_two_sided(out, f);
    }

    add_single(out, "thm3.3-kernel-g", "thm3.3-kernel-g", "derivative kernel of the Wilker ratio", "1",
               kernel_wilker_ratio(), [](const TrigValues& v, unsigned) {
                   const Interval &x = v.x, &s = v.s, &c = v.c;
                   Interval s2 = sqr(s);
                   return x * x * s * c * 13230L - int_pow(s, 3) * c * 8505L - x * 8505L +
                          int_pow(x, 3) * 1890L + x * sqr(c) * 10395L - x * int_pow(c, 4) * 1890L +
                          int_pow(x, 5) * s2 * 672L - int_pow(x, 7) * s2 * 16L;
               });
    add_single(out, "thm3.4-kernel-G", "thm3.4-kernel-G", "derivative kernel of the second Huygens ratio",
               "1", kernel_huygens_ratio(), [](const TrigValues& v, unsigned) {
                   const Interval &x = v.x, &s = v.s, &c = v.c;
                   Interval x2 = sqr(x), x3 = int_pow(x, 3), x5 = int_pow(x, 5);
                   return x * s * c * 5040L + (x * 2520L - x5 * 3L + x3 * 28L) * s * sqr(c) +
                          (x5 * 3L - x * 1260L - x3 * 28L) * s + (x2 * 840L - Rational(8820)) * c +
                          x2 * sqr(c) * 840L + int_pow(c, 3) * 8820L + x2 * 840L;
               });

    add_single(out, "wilker-1.1", "wilker-1.1", "Wilker inequality", "x^2 cos x", wilker_cleared(),
               [](const TrigValues& v, unsigned) { return wilker(v) - Rational(2); });
    {
        TwoSided f;
        f.family = "sumner-1.2";
        f.name = "Wilker with x^3 tan x bounds";
        f.multiplier = "x^2 cos x";
        f.expression = wilker;
        f.prefix = [](const TrigValues& v, unsigned) { return Interval(2L, v.x.precision()); };
        f.tan_power = [](unsigned) { return 3; };
        f.base = [](unsigned) { return wilker_cleared(); };
        f.sharp = [](unsigned) { return xp(5) * S; };
        f.lower_constant = [](unsigned) { return two_over_pi_power(4); };
        f.upper_constant = [](unsigned) { return PiLaurent(q(8, 45)); };
        add_two_sided(out, f);
    }
    add_single(out, "huygens-1.3", "huygens-1.3", "Huygens inequality", "x cos x", huygens_cleared(),
               [](const TrigValues& v, unsigned) { return huygens(v) - Rational(3); });
    add_single(out, "wu-srivastava-1.4", "wu-srivastava-1.4", "second Wilker inequality", "sin^2 x",
               xp(2) + X * S * C - 2L * S * S,
               [](const TrigValues& v, unsigned) { return second_wilker(v) - Rational(2); });
    add_single(out, "neuman-sandor-1.5-left", "neuman-sandor-1.5", "sin x/x < (2 + cos x)/3", "3x",
               2L * X + X * C - 3L * S, [](const TrigValues& v, unsigned) {
                   return (v.c + Rational(2)) / Rational(3) - v.s / v.x;
               });
    add_single(out, "neuman-sandor-1.5-right", "neuman-sandor-1.5",
               "(2 + cos x)/3 < (x/sin x + cos x)/2", "6 sin x", 3L * X + S * C - 4L * S,
               [](const TrigValues& v, unsigned) {
                   return (v.x / v.s + v.c) / Rational(2) - (v.c + Rational(2)) / Rational(3);
               });
    add_single(out, "cusa-1.6-left", "cusa-1.6", "half second Wilker sum exceeds third second Huygens sum",
               "6 sin^2 x", 3L * xp(2) + X * S * C - 4L * X * S, [](const TrigValues& v, unsigned) {
                   return second_wilker(v) / Rational(2) - second_huygens(v) / Rational(3);
               });
    add_single(out, "cusa-1.6-right", "cusa-1.6", "second Huygens inequality", "3 sin x",
               2L * X + X * C - 3L * S,
               [](const TrigValues& v, unsigned) { return second_huygens(v) / Rational(3) - Rational(1); });

    // six links of the mean chain
    const auto sq_tan = [](const TrigValues& v) { return sqr(v.s / v.x) * (v.tan() / v.x); };
    add_single(out, "chain-1.7-g1", "chain-1.7", "Wilker mean exceeds (sin x/x)^2 (tan x/x)", "2 x^3 cos x",
               X * S * S * C + xp(2) * S - 2L * S.pow(3),
               [=](const TrigValues& v, unsigned) { return wilker(v) / Rational(2) - sq_tan(v); });
    add_single(out, "chain-1.7-g2", "chain-1.7", "(sin x/x)^2 (tan x/x) exceeds the Huygens mean",
               "3 x^3 cos x", 3L * S.pow(3) - 2L * xp(2) * S * C - xp(2) * S,
               [=](const TrigValues& v, unsigned) { return sq_tan(v) - huygens(v) / Rational(3); });
    add_single(out, "chain-1.7-g3", "chain-1.7", "Huygens mean exceeds the geometric mean (cubed)",
               "27 x^3 cos^3 x", (2L * S * C + S).pow(3) - 27L * S.pow(3) * C * C,
               [=](const TrigValues& v, unsigned) {
                   return int_pow(huygens(v) / Rational(3), 3) - sq_tan(v);
               });
    add_single(out, "chain-1.7-g4", "chain-1.7", "geometric mean exceeds the second Wilker mean (cubed)",
               "8 x^3 cos x sin^6 x", 8L * S.pow(9) - xp(3) * C * (xp(2) + X * S * C).pow(3),
               [=](const TrigValues& v, unsigned) {
                   return sq_tan(v) - int_pow(second_wilker(v) / Rational(2), 3);
               });
    add_single(out, "chain-1.7-g5", "chain-1.7", "second Wilker mean exceeds the second Huygens mean",
               "6 sin^2 x", 3L * xp(2) + X * S * C - 4L * X * S, [](const TrigValues& v, unsigned) {
                   return second_wilker(v) / Rational(2) - second_huygens(v) / Rational(3);
               });
    add_single(out, "chain-1.7-g6", "chain-1.7", "second Huygens mean exceeds 1", "3 sin x",
               2L * X + X * C - 3L * S,
               [](const TrigValues& v, unsigned) { return second_huygens(v) / Rational(3) - Rational(1); });

    {
        TwoSided f;
        f.family = "chen-cheung-1.8";
        f.name = "Wilker with x^4 term and x^5 tan x bounds";
        f.multiplier = "x^2 cos x";
        f.expression = wilker;
        f.prefix = [](const TrigValues& v, unsigned) {
            return Interval(2L, v.x.precision()) + int_pow(v.x, 4) * q(8, 45);
        };
        f.tan_power = [](unsigned) { return 5; };
        f.base = [](unsigned) { return wilker_cleared() - xp(6) * C * q(8, 45); };
        f.sharp = [](unsigned) { return xp(7) * S; };
        f.lower_constant = [](unsigned) { return PiLaurent(q(16, 315)); };
        f.upper_constant = [](unsigned) { return two_over_pi_power(6); };
        add_two_sided(out, f);
    }
    {
        TwoSided f;
        f.family = "chen-cheung-1.9";
        f.name = "second Wilker with x^3 tan x upper bound";
        f.multiplier = "sin^2 x cos x";
        f.expression = second_wilker;
        f.prefix = [](const TrigValues& v, unsigned) { return Interval(2L, v.x.precision()); };
        f.tan_power = [](unsigned) { return 3; };
        f.base = [](unsigned) { return second_wilker_cleared(); };
        f.sharp = [](unsigned) { return xp(3) * S.pow(3); };
        f.upper_constant = [](unsigned) { return PiLaurent(q(2, 45)); };
        add_two_sided(out, f);
    }
    {
        TwoSided f;
        f.family = "chen-cheung-1.10";
        f.name = "Huygens with x^3 tan x bounds";
        f.multiplier = "x cos x";
        f.expression = huygens;
        f.prefix = [](const TrigValues& v, unsigned) { return Interval(3L, v.x.precision()); };
        f.tan_power = [](unsigned) { return 3; };
        f.base = [](unsigned) { return huygens_cleared(); };
        f.sharp = [](unsigned) { return xp(4) * S; };
        f.lower_constant = [](unsigned) { return PiLaurent(q(3, 20)); };
        f.upper_constant = [](unsigned) { return two_over_pi_power(4); };
        add_two_sided(out, f);
    }
    {
        // Only valid on (0, 1); the upper side is false near 0.
        TwoSided f;
        f.family = "mortici-1.12";
        f.name = "Wilker with x^5 tan x correction on (0, 1)";
        f.multiplier = "x^2 cos x";
        f.expression = wilker;
        f.prefix = wilker_prefix;
        f.tan_power = [](unsigned) { return 7; };
        f.base = wilker_base;
        f.sharp = [](unsigned) { return xp(9) * S; };
        f.lower_constant = [](unsigned) { return PiLaurent(); };
        f.upper_constant = [](unsigned) { return PiLaurent(q(16, 14175)); };
        f.domain_end = Rational(1);
        f.upper_expect = Expectation::refuted;
        add_two_sided(out, f);
    }
    {
        TwoSided f;
        f.family = "chen-paris-3.25";
        f.name = "second Huygens with x^3 tan x bounds";
        f.multiplier = "sin x cos x";
        f.expression = second_huygens;
        f.prefix = [](const TrigValues& v, unsigned) { return Interval(3L, v.x.precision()); };
        f.tan_power = [](unsigned) { return 3; };
        f.base = [](unsigned) { return second_huygens_cleared(); };
        f.sharp = [](unsigned) { return xp(3) * S * S; };
        f.lower_constant = [](unsigned) { return PiLaurent(); };
        f.upper_constant = [](unsigned) { return PiLaurent(q(1, 60)); };
        add_two_sided(out, f);
    }
    {
        TwoSided f;
        f.family = "conjecture-2";
        f.name = "second Wilker expansion with tangent remainder (sweep only)";
        f.multiplier = "sin^2 x cos x";
        f.n_min = 1;
        f.n_max = 8;
        f.n_default = 1;
        f.sweep_only = true;
        f.expression = second_wilker;
        f.prefix = [](const TrigValues& v, unsigned n) {
            Interval s(2L, v.x.precision());
            for (unsigned k = 2; k <= n; ++k) s += int_pow(v.x, 2 * k) * second_wilker_coeff(k);
            return s;
        };
        f.tan_power = [](unsigned n) { return static_cast<int>(2 * n + 1); };
        f.base = [](unsigned n) {
            TrigPoly b = second_wilker_cleared();
            for (unsigned k = 2; k <= n; ++k)
                b -= xp(static_cast<int>(2 * k)) * S * S * C * second_wilker_coeff(k);
            return b;
        };
        f.sharp = [](unsigned n) { return xp(static_cast<int>(2 * n + 1)) * S.pow(3); };
        f.upper_constant = [](unsigned n) {
            return PiLaurent(Rational(n) * pow2(2L * n + 3) * bernoulli_abs_even(n + 1) /
                             Rational(factorial(2 * n + 2)));
        };
        add_two_sided(out, f);
    }
    return out;
}

}  // namespace

TrigPoly kernel_wilker_ratio() {
    return 6615L * xp(2) * TrigPoly::sin(2) - 8505L * S.pow(3) * C - 8505L * X + 1890L * xp(3) +
           10395L * X * C * C - 1890L * X * C.pow(4) + 672L * xp(5) * S * S - 16L * xp(7) * S * S;
}

TrigPoly kernel_huygens_ratio() {
    return 2520L * X * TrigPoly::sin(2) + (2520L * X - 3L * xp(5) + 28L * xp(3)) * S * C * C +
           (3L * xp(5) - 1260L * X - 28L * xp(3)) * S + (840L * xp(2) - TrigPoly(8820L)) * C +
           840L * xp(2) * C * C + 8820L * C.pow(3) + 840L * xp(2);
}

TrigPoly wilker_ratio_numerator() {
    return wilker_cleared() - (xp(5) * make_rational(8, 45) - xp(7) * make_rational(8, 945)) * S;
}

TrigPoly huygens_ratio_numerator() {
    return (xp(3) * make_rational(1, 60) - xp(5) * make_rational(1, 280)) * S * S - second_huygens_cleared();
}

const std::vector<InequalityCase>& catalog() {
    static const std::vector<InequalityCase> c = build_catalog();
    return c;
}

const InequalityCase& find_case(const std::string& id) {
    for (const auto& c : catalog())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown case: " + id);
}

std::vector<const InequalityCase*> family_cases(const std::string& family) {
    std::vector<const InequalityCase*> out;
    for (const auto& c : catalog())
        if (c.family == family) out.push_back(&c);
    return out;
}

std::vector<std::string> families() {
    std::vector<std::string> out;
    for (const auto& c : catalog())
        if (out.empty() || out.back() != c.family) out.push_back(c.family);
    return out;
}

const std::vector<DominancePair>& dominance_pairs() {
    static const std::vector<DominancePair> pairs{
        {"thm3.3", "sumner-1.2", true, true},
        {"thm3.3", "chen-cheung-1.8", true, true},
        {"thm3.4-wilker2", "chen-cheung-1.9", false, true},
        {"thm3.4-huygens", "chen-cheung-1.10", true, true},
        {"thm3.4-huygens2", "chen-paris-3.25", true, true},
    };
    return pairs;
}

}  // namespace trigcert
