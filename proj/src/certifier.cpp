#include "trigcert/certifier.hpp"

#include "trigcert/expressions.hpp"
#include "trigcert/pi.hpp"
#include "trigcert/series.hpp"
#include "trigcert/sequences.hpp"

#include <chrono>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace trigcert {

std::string to_string(Status s) {
    switch (s) {
        case Status::proved: return "PROVED";
        case Status::refuted: return "REFUTED";
        case Status::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

namespace {

// f(x) = x^m (sum_{i=m}^{D} s_i x^(i-m) + theta B x^(D+1-m)), |theta| <= 1, x >= 0.
class SeriesZone {
public:
    explicit SeriesZone(const TrigPoly& f) {
        auto lead = leading_term(f, f.max_power() + 64);
        if (!lead) return;
        valuation_ = lead->first;
        leading_ = lead->second;
        degree_ = std::max(valuation_ + 24, f.max_power());
        series_ = f.taylor(degree_);
        f_ = f;
        ok_ = true;
    }

    bool ok() const { return ok_; }
    int valuation() const { return valuation_; }
    const PiLaurent& leading() const { return leading_; }

    Interval inner(const Interval& x) const {
        const mpfr_prec_t prec = x.precision();
        const Interval pi = pi_enclosure_for(prec);
        Interval sum(prec), xp(1L, prec);
        for (int i = valuation_; i <= degree_; ++i) {
            if (!series_[i].is_zero()) sum += series_[i].eval(pi) * xp;
            xp *= x;
        }
        Interval b = f_.taylor_remainder(degree_, prec) * xp;
        return sum + hull(-b, b);
    }

    std::string tail_bound(mpfr_prec_t prec) const {
        std::ostringstream os;
        os << "|f - T_" << degree_ << "| <= " << to_string(f_.taylor_remainder(degree_, prec), 6) << " x^"
           << degree_ + 1;
        return os.str();
    }

private:
    bool ok_ = false;
    int valuation_ = 0;
    int degree_ = 0;
    PiLaurent leading_;
    PowerSeries<PiLaurent> series_;
    TrigPoly f_;
};

// Largest width w = delta0 / 2^i (i < 40) with f > 0 on (0, w].
std::optional<Rational> positive_zone(const SeriesZone& z, const Rational& delta0, mpfr_prec_t prec) {
    Rational w = delta0;
    for (int i = 0; i < 40; ++i) {
        Interval range(Rational(0), w, prec);
        if (z.inner(range).certainly_positive()) return w;
        w /= 2;
    }
    return std::nullopt;
}

std::vector<mpfr_prec_t> schedule(mpfr_prec_t p) { return {p, 2 * p, 4 * p, 8 * p}; }

Rational dyadic_ceil(const Rational& q, unsigned k) {
    Rational s = q * pow2(k);
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return Rational(c) / pow2(k);
}

Rational dyadic_floor(const Rational& q, unsigned k) {
    Rational s = q * pow2(k);
    Integer c;
    mpz_fdiv_q(c.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return Rational(c) / pow2(k);
}

std::string rational_string(const Rational& q) { return to_string(q); }

}  // namespace

Certificate certify_positive(const TrigPoly& f, const std::optional<Rational>& domain_end,
                             const CertifyConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    Certificate cert;
    const auto sched = schedule(config.precision);
    const mpfr_prec_t high = sched.back();
    const auto finish = [&](Status s) {
        cert.status = s;
        cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return cert;
    };

    SeriesZone left(f);
    if (!left.ok()) {
        cert.reason = "cleared form vanishes to high order at 0";
        return finish(Status::inconclusive);
    }
    cert.zero.valuation = left.valuation();
    cert.zero.leading = left.leading();
    cert.zero.tail_bound = left.tail_bound(config.precision);
    if (exact_sign(left.leading()) < 0) {
        for (int i = 0; i < 200; ++i) {
            Rational x = config.delta0 / pow2(i);
            if (left.inner(Interval(x, high)).certainly_negative()) {
                cert.witness = x;
                Interval v = left.inner(Interval(x, high)) * int_pow(Interval(x, high), left.valuation());
                cert.witness_value = certified_decimal(v, 30);
                break;
            }
        }
        cert.reason = "negative leading coefficient at 0";
        return finish(Status::refuted);
    }
    auto delta = positive_zone(left, config.delta0, sched[1]);
    if (!delta) delta = positive_zone(left, config.delta0, high);
    if (!delta) {
        cert.reason = "series zone at 0 not certified";
        return finish(Status::inconclusive);
    }
    cert.zero.width = *delta;
    cert.zero.certified = true;

    Rational right_end;
    if (domain_end) {
        right_end = *domain_end;
    } else {
        TrigPoly reflected = f.reflect_at_half_pi();
        SeriesZone right(reflected);
        if (!right.ok()) {
            cert.reason = "cleared form vanishes to high order at pi/2";
            return finish(Status::inconclusive);
        }
        EndpointZone z;
        z.valuation = right.valuation();
        z.leading = right.leading();
        z.tail_bound = right.tail_bound(config.precision);
        cert.pi_half = z;
        if (exact_sign(right.leading()) < 0) {
            const Interval half_pi = half_pi_enclosure(high);
            for (unsigned k = 2; k < 200; ++k) {
                Rational x = dyadic_floor(half_pi.lower_rational(), k);
                Interval t = half_pi - Interval(x, high);
                if (!t.certainly_positive()) continue;
                if (right.inner(t).certainly_negative()) {
                    cert.witness = x;
                    Interval v = right.inner(t) * int_pow(t, right.valuation());
                    cert.witness_value = certified_decimal(v, 30);
                    break;
                }
            }
            cert.reason = "negative leading coefficient at pi/2";
            return finish(Status::refuted);
        }
        auto tau = positive_zone(right, config.delta0, sched[1]);
        if (!tau) tau = positive_zone(right, config.delta0, high);
        if (!tau) {
            cert.reason = "series zone at pi/2 not certified";
            return finish(Status::inconclusive);
        }
        cert.pi_half->width = *tau;
        cert.pi_half->certified = true;
        // Smallest dyadic at or above pi/2 - tau on a grid finer than tau/4.
        unsigned k = 2;
        while (pow2(-static_cast<long>(k)) > *tau / 4) ++k;
        Interval start_right = half_pi_enclosure(high) - Interval(*tau, high);
        right_end = dyadic_ceil(start_right.upper_rational(), k);
    }
    cert.domain_end_used = right_end;

    std::vector<TaylorModel> models;
    for (auto p : sched) models.emplace_back(f, p);

    struct Node {
        Rational lo, hi;
        unsigned depth;
    };
    std::vector<Node> stack{{*delta, right_end, 0}};
    while (!stack.empty()) {
        Node node = stack.back();
        stack.pop_back();
        ++cert.nodes;
        const Rational mid = (node.lo + node.hi) / 2;
        const Rational rad = (node.hi - node.lo) / 2;
        bool done = false;
        double previous = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < models.size(); ++i) {
            Interval enc = models[i].range(mid, rad);
            if (enc.certainly_positive()) {
                cert.leaves.push_back({node.lo, node.hi, sched[i], 1});
                done = true;
                break;
            }
            // Escalate only while precision is what limits the enclosure.
            const double w = enc.width();
            if (i > 0 && !(w < previous / 2)) break;
            previous = w;
        }
        if (done) continue;
        if (models[1].range(mid, 0).certainly_negative()) {
            cert.leaves.push_back({node.lo, node.hi, sched[1], -1});
            // Smallest-denominator dyadic in the leaf with a certified negative value.
            for (unsigned k = 0; k <= 16 && !cert.witness; ++k) {
                const Rational scale = pow2(k);
                Rational first = dyadic_ceil(node.lo, k);
                for (Rational x = first; x <= node.hi; x += 1 / scale) {
                    Interval v = models.back().range(x, 0);
                    if (v.certainly_negative()) {
                        cert.witness = x;
                        cert.witness_value = certified_decimal(v, 30);
                        break;
                    }
                    if (x - first > 64 / scale) break;
                }
            }
            if (!cert.witness) {
                cert.witness = mid;
                cert.witness_value = certified_decimal(models[1].range(mid, 0), 30);
            }
            cert.reason = "negative value in the interior";
            return finish(Status::refuted);
        }
        if (node.depth >= config.max_depth) {
            cert.leaves.push_back({node.lo, node.hi, high, 0});
            cert.reason = "maximum depth reached at [" + rational_string(node.lo) + ", " +
                          rational_string(node.hi) + "]";
            return finish(Status::inconclusive);
        }
        stack.push_back({mid, node.hi, node.depth + 1});
        stack.push_back({node.lo, mid, node.depth + 1});
    }
    return finish(Status::proved);
}

PiLaurent tightened_constant(const GapForms& g, const Rational& t) {
    int dir = 0;
    if (g.side == Side::lower) dir = g.sign;
    else if (g.side == Side::upper) dir = -g.sign;
    return g.constant * (Rational(1) + t * dir);
}

Certificate certify_sign(const InequalityCase& c, unsigned n, const CertifyConfig& config) {
    if (c.sweep_only) throw std::invalid_argument(c.id + " is a sweep-only target");
    if (c.parameterized()) c.check_param(n);
    GapForms g = c.forms(n);
    if (sgn(config.tighten) != 0) g = g.with_constant(tightened_constant(g, config.tighten));
    Certificate cert = certify_positive(g.cleared(), c.domain_end, config);
    cert.case_id = c.id;
    if (c.parameterized()) cert.n = n;
    if (c.side != Side::single) cert.constant = g.constant.to_string();
    cert.tighten = config.tighten;
    return cert;
}

nlohmann::json Certificate::to_json() const {
    using nlohmann::json;
    json j;
    j["case"] = case_id;
    json params = json::object();
    if (n) params["n"] = *n;
    if (!constant.empty()) params["constant"] = constant;
    if (sgn(tighten) != 0) params["tighten"] = rational_string(tighten);
    j["params"] = params;
    j["status"] = to_string(status);
    if (witness) j["witness"] = {{"x", rational_string(*witness)}, {"cleared_gap", witness_value}};
    else j["witness"] = nullptr;
    if (!reason.empty()) j["reason"] = reason;
    json leaves_json = json::array();
    for (const auto& l : leaves)
        leaves_json.push_back(
            {{"lo", rational_string(l.lo)}, {"hi", rational_string(l.hi)}, {"precision", l.precision}, {"sign", l.sign}});
    j["leaves"] = leaves_json;
    json endpoints;
    endpoints["zero"] = {{"delta", zero.certified ? json(rational_string(zero.width)) : json(nullptr)},
                         {"valuation", zero.valuation},
                         {"leading", zero.leading.to_string()},
                         {"tail", zero.tail_bound}};
    if (pi_half)
        endpoints["pi_half"] = {{"form", "f(pi/2 - t)"},
                                {"tau", pi_half->certified ? json(rational_string(pi_half->width)) : json(nullptr)},
                                {"valuation", pi_half->valuation},
                                {"leading", pi_half->leading.to_string()},
                                {"tail", pi_half->tail_bound}};
    else
        endpoints["pi_half"] = nullptr;
    j["endpoints"] = endpoints;
    j["interior_end"] = rational_string(domain_end_used);
    j["stats"] = {{"nodes", nodes}, {"seconds", seconds}};
    return j;
}

std::string Certificate::to_markdown() const {
    std::ostringstream os;
    os << "## " << case_id;
    if (n) os << " (n = " << *n << ")";
    os << "\n\n";
    os << "- status: **" << to_string(status) << "**\n";
    if (!constant.empty()) os << "- constant: `" << constant << "`\n";
    if (sgn(tighten) != 0) os << "- tightened by: " << rational_string(tighten) << "\n";
    if (witness) os << "- witness: x = " << rational_string(*witness) << ", cleared gap " << witness_value << "\n";
    if (!reason.empty()) os << "- note: " << reason << "\n";
    os << "- zone at 0: valuation " << zero.valuation << ", leading `" << zero.leading.to_string() << "`";
    if (zero.certified) os << ", delta = " << rational_string(zero.width);
    os << "\n";
    if (pi_half) {
        os << "- zone at pi/2: valuation " << pi_half->valuation << ", leading `" << pi_half->leading.to_string()
           << "`";
        if (pi_half->certified) os << ", tau = " << rational_string(pi_half->width);
        os << "\n";
    }
    os << "- interior leaves: " << leaves.size() << " (nodes " << nodes << ")\n";
    return os.str();
}

namespace {

PiLaurent value_at_zero_ratio(const TrigPoly& num, const TrigPoly& den) {
    auto ln = leading_term(num, num.max_power() + 64);
    auto ld = leading_term(den, den.max_power() + 64);
    if (!ld) throw std::runtime_error("sharp form vanishes identically");
    if (!ln || ln->first > ld->first) return PiLaurent();
    if (ln->first < ld->first) throw std::runtime_error("ratio is unbounded at 0");
    return ln->second.divided_by(ld->second);
}

PiLaurent value_at_half_pi(const TrigPoly& f) { return f.reflect_at_half_pi().taylor(0)[0]; }

std::optional<Rational> series_value_at_zero(const std::string& family, unsigned n) {
    if (family == "lemma2.1") return tan_coeff(n + 1);
    if (family == "thm3.1") return wilker_coeff(n + 1);
    if (family == "thm3.2") return huygens_coeff(n + 1);
    if (family == "thm3.3") return ratio_taylor(RatioId::wilker, 6)[2];
    if (family == "thm3.4-wilker2") return -ratio_taylor(RatioId::second_wilker, 6)[2];
    if (family == "thm3.4-huygens") return ratio_taylor(RatioId::huygens, 6)[2];
    if (family == "thm3.4-huygens2") return -ratio_taylor(RatioId::second_huygens, 6)[2];
    return std::nullopt;
}

}  // namespace

std::vector<std::string> sharp_families() {
    return {"thm3.3", "thm3.4-wilker2", "thm3.4-huygens", "thm3.4-huygens2"};
}

BestConstantPair best_constants(const std::string& family, unsigned n, mpfr_prec_t precision) {
    auto cases = family_cases(family);
    if (cases.empty() || cases.front()->side == Side::single)
        throw std::invalid_argument(family + " has no two-sided constant");
    const InequalityCase& first = *cases.front();
    if (first.parameterized()) {
        if (n == 0) n = first.n_default;
        first.check_param(n);
    }
    const GapForms g = first.forms(n);
    const Rational sigma(g.sign);

    BestConstantPair out;
    out.family = family;
    out.n = first.parameterized() ? n : 0;
    out.at_zero = value_at_zero_ratio(g.base, g.sharp) * sigma;
    out.at_pi_half = value_at_half_pi(g.base).divided_by(value_at_half_pi(g.sharp)) * sigma;
    out.at_zero_enclosure = pilaurent_eval(out.at_zero, precision);
    out.at_pi_half_enclosure = pilaurent_eval(out.at_pi_half, precision);
    out.zero_is_inf = compare(out.at_zero_enclosure, out.at_pi_half_enclosure) == Ordering::less;

    const PiLaurent& inf = out.zero_is_inf ? out.at_zero : out.at_pi_half;
    const PiLaurent& sup = out.zero_is_inf ? out.at_pi_half : out.at_zero;
    out.matches_printed = true;
    for (const auto* c : cases) {
        const PiLaurent printed = c->forms(n).constant;
        // sign +1: the lower gap N - kappa K > 0 needs kappa <= inf N/K
        const bool wants_inf = (c->side == Side::lower) == (g.sign > 0);
        if (c->side == Side::lower) out.lower_printed = printed;
        else out.upper_printed = printed;
        if (!(printed == (wants_inf ? inf : sup))) out.matches_printed = false;
    }

    if (auto s = series_value_at_zero(family, n)) out.matches_series = out.at_zero == PiLaurent(*s);

    // Ratio at pi/2 - 2^-j must approach the closed form.
    out.cross_validated = true;
    const Interval half_pi = half_pi_enclosure(precision);
    Interval previous_distance(precision);
    for (int j = 4; j <= 12; ++j) {
        const Interval h = Interval(pow2(-j), precision);
        Interval x = half_pi - h;
        Interval phi = g.base.eval(x) / g.sharp.eval(x) * sigma;
        Interval lo = phi - h, hi = phi + h;
        if (!(compare(lo, out.at_pi_half_enclosure) == Ordering::less &&
              compare(out.at_pi_half_enclosure, hi) == Ordering::less))
            out.cross_validated = false;
        Interval distance = abs(phi - out.at_pi_half_enclosure);
        if (j > 4 && compare(distance, previous_distance) != Ordering::less) out.cross_validated = false;
        previous_distance = distance;
    }
    return out;
}

std::vector<SweepRow> sweep(const std::string& family, unsigned n, unsigned grid, mpfr_prec_t precision,
                            const std::string& versus) {
    if (grid < 2) throw std::invalid_argument("sweep needs at least 2 grid points");
    auto cases = family_cases(family);
    if (cases.empty()) throw std::invalid_argument("unknown family: " + family);
    if (cases.front()->parameterized()) {
        if (n == 0) n = cases.front()->n_default;
        cases.front()->check_param(n);
    }
    const DominancePair* pair = nullptr;
    for (const auto& p : dominance_pairs())
        if (p.family == family && (versus.empty() ? !pair : p.weaker == versus)) pair = &p;
    if (!versus.empty() && !pair) throw std::invalid_argument("no comparison between " + family + " and " + versus);
    std::vector<const InequalityCase*> weaker;
    if (pair) weaker = family_cases(pair->weaker);

    const auto side_gap = [&](const std::vector<const InequalityCase*>& cs, Side side,
                              const TrigValues& v) -> std::optional<Interval> {
        std::optional<Interval> out;
        for (const auto* c : cs) {
            if (c->side != side && !(side == Side::lower && c->side == Side::single)) continue;
            Interval gap = c->raw_gap(v, n);
            if (!out || compare(gap, *out) == Ordering::less) out = gap;
            else if (compare(gap, *out) != Ordering::greater) out = hull(gap, *out);  // encloses the minimum
        }
        return out;
    };

    const Interval half_pi = half_pi_enclosure(precision);
    std::vector<SweepRow> rows;
    for (unsigned i = 1; i <= grid; ++i) {
        SweepRow row;
        row.x = half_pi * static_cast<long>(i) / static_cast<unsigned long>(grid + 1);
        TrigValues v(row.x);
        row.gap_lower = side_gap(cases, Side::lower, v);
        row.gap_upper = side_gap(cases, Side::upper, v);
        if (!pair) {
            row.dominance = "NA";
        } else {
            std::string verdict = "1";
            const auto judge = [&](Side side) {
                auto mine = side_gap(cases, side, v);
                auto theirs = side_gap(weaker, side, v);
                if (!mine || !theirs) return;
                Interval d = *theirs - *mine;
                if (d.certainly_negative()) verdict = "0";
                else if (!d.certainly_nonnegative() && verdict == "1") verdict = "?";
            };
            if (pair->lower) judge(Side::lower);
            if (pair->upper) judge(Side::upper);
            row.dominance = verdict;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "x,gap_lower,gap_upper,dominance\n";
    const auto cell = [](const std::optional<Interval>& v) {
        return v ? certified_decimal(*v, 20) : std::string();
    };
    for (const auto& r : rows)
        os << certified_decimal(r.x, 20) << "," << cell(r.gap_lower) << "," << cell(r.gap_upper) << ","
           << r.dominance << "\n";
    return os.str();
}

}  // namespace trigcert
