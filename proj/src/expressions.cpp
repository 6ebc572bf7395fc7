#include "trigcert/expressions.hpp"

#include "trigcert/pi.hpp"
#include "trigcert/trig_enclose.hpp"

#include <stdexcept>

namespace trigcert {

std::optional<ExpressionId> parse_expression_id(const std::string& name) {
    for (ExpressionId id : {ExpressionId::wilker, ExpressionId::second_wilker, ExpressionId::huygens,
                            ExpressionId::second_huygens, ExpressionId::ratio_f, ExpressionId::ratio_F,
                            ExpressionId::kernel_g, ExpressionId::kernel_G})
        if (to_string(id) == name) return id;
    return std::nullopt;
}

std::string to_string(ExpressionId id) {
    switch (id) {
        case ExpressionId::wilker: return "wilker";
        case ExpressionId::second_wilker: return "second-wilker";
        case ExpressionId::huygens: return "huygens";
        case ExpressionId::second_huygens: return "second-huygens";
        case ExpressionId::ratio_f: return "ratio-f";
        case ExpressionId::ratio_F: return "ratio-F";
        case ExpressionId::kernel_g: return "kernel-g";
        case ExpressionId::kernel_G: return "kernel-G";
    }
    return "?";
}

Interval eval_expression(ExpressionId id, const Interval& x) {
    if (!x.certainly_positive()) throw DomainError("expression evaluated at a point <= 0");
    TrigValues v(x);
    const Interval t = v.tan();
    switch (id) {
        case ExpressionId::wilker: return sqr(v.s / x) + t / x;
        case ExpressionId::second_wilker: return sqr(x / v.s) + x / t;
        case ExpressionId::huygens: return v.s / x * 2L + t / x;
        case ExpressionId::second_huygens: return x / v.s * 2L + x / t;
        case ExpressionId::ratio_f: {
            Interval w = sqr(v.s / x) + t / x - Rational(2);
            Interval p = Interval(make_rational(8, 45), x.precision()) - sqr(x) * make_rational(8, 945);
            return (w / (int_pow(x, 3) * t) - p) / int_pow(x, 4);
        }
        case ExpressionId::ratio_F: {
            Interval h = x / v.s * 2L + x / t - Rational(3);
            Interval p = Interval(make_rational(1, 60), x.precision()) - sqr(x) * make_rational(1, 280);
            return (p - h / (int_pow(x, 3) * t)) / int_pow(x, 4);
        }
        case ExpressionId::kernel_g:
            return find_case("thm3.3-kernel-g").raw_gap(v, 0);
        case ExpressionId::kernel_G:
            return find_case("thm3.4-kernel-G").raw_gap(v, 0);
    }
    throw std::logic_error("unhandled expression");
}

std::optional<std::pair<int, PiLaurent>> leading_term(const TrigPoly& f, int max_degree) {
    if (f.is_zero()) return std::nullopt;
    PowerSeries<PiLaurent> s = f.taylor(max_degree);
    for (int i = 0; i <= max_degree; ++i)
        if (!s[i].is_zero()) return std::make_pair(i, s[i]);
    return std::nullopt;
}

Interval eval_cleared(const TrigPoly& f, const Interval& x, const Rational& delta0) {
    const mpfr_prec_t prec = x.precision();
    if (!x.certainly_nonnegative()) throw DomainError("cleared forms are evaluated on x >= 0");
    if (compare(x, Interval(delta0, prec)) == Ordering::greater) return f.eval(x);
    const int degree = std::max(f.max_power(), 24) + 24;
    auto lead = leading_term(f, degree);
    if (!lead) {
        Interval b = f.taylor_remainder(degree, prec) * int_pow(abs(x), static_cast<unsigned>(degree + 1));
        return hull(-b, b);
    }
    const int m = lead->first;
    const int top = m + 24 > degree ? m + 24 : degree;
    PowerSeries<PiLaurent> s = f.taylor(top);
    const Interval pi = pi_enclosure_for(prec);
    Interval inner(prec), xp(1L, prec);
    for (int i = m; i <= top; ++i) {
        if (!s[i].is_zero()) inner += s[i].eval(pi) * xp;
        xp *= x;
    }
    // xp is now x^(top+1-m)
    Interval b = f.taylor_remainder(top, prec) * xp;
    inner += hull(-b, b);
    return inner * int_pow(x, static_cast<unsigned>(m));
}

ClearedForm cleared_form(const InequalityCase& c, unsigned n) {
    ClearedForm out;
    out.form = c.forms(n).cleared();
    out.multiplier = c.multiplier;
    auto lead = leading_term(out.form, out.form.max_power() + 64);
    if (!lead) throw std::runtime_error(c.id + ": cleared form vanishes to high order");
    out.valuation = lead->first;
    out.leading = lead->second;
    return out;
}

Interval eval_gap(const InequalityCase& c, unsigned n, const Interval& x) {
    if (!x.certainly_positive()) throw DomainError("gap evaluated at a point <= 0");
    return c.raw_gap(TrigValues(x), n);
}

}  // namespace trigcert
