#include "cli.hpp"

#include "trigcert/appendix.hpp"
#include "trigcert/bernoulli.hpp"
#include "trigcert/catalog.hpp"
#include "trigcert/certifier.hpp"
#include "trigcert/pi.hpp"
#include "trigcert/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace trigcert::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    unsigned precision = 0;  // 0: the command's default
    unsigned max_depth = 40;
    std::string delta0 = "1/4";
    std::string tighten = "0";
    std::string format;
    std::string out;
    std::string case_id;
    unsigned n = 0;
    unsigned grid = 0;
    std::string versus;
    std::string expr;
    int order = 14;
    unsigned upto = 60;
    std::string check = "all";
    unsigned n_max = 0;
};

int combine(int a, int b) {
    if (a == refuted || b == refuted) return refuted;
    if (a == inconclusive || b == inconclusive) return inconclusive;
    return ok;
}

int status_code(Status s) {
    switch (s) {
        case Status::proved: return ok;
        case Status::refuted: return refuted;
        case Status::inconclusive: return inconclusive;
    }
    return inconclusive;
}

mpfr_prec_t precision_or(const Options& o, mpfr_prec_t fallback) {
    if (o.precision == 0) return fallback;
    if (o.precision < 32) throw UsageError("--precision must be at least 32");
    return static_cast<mpfr_prec_t>(o.precision);
}

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw UsageError(flag + " expects a rational such as 1/4, got '" + text + "'");
    }
}

CertifyConfig certify_config(const Options& o) {
    CertifyConfig c;
    c.precision = precision_or(o, 64);
    if (o.max_depth < 1) throw UsageError("--max-depth must be at least 1");
    c.max_depth = o.max_depth;
    c.delta0 = parse_flag_rational("--delta0", o.delta0);
    if (sgn(c.delta0) <= 0 || c.delta0 > make_rational(1, 2)) throw UsageError("--delta0 must lie in (0, 1/2]");
    c.tighten = parse_flag_rational("--tighten", o.tighten);
    if (sgn(c.tighten) < 0 || c.tighten >= 1) throw UsageError("--tighten must lie in [0, 1)");
    return c;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw UsageError("--format must be one of: " + list);
}

const InequalityCase& case_or_usage(const std::string& id) {
    try {
        return find_case(id);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

unsigned param_or_default(const InequalityCase& c, unsigned n) {
    if (!c.parameterized()) {
        if (n != 0) throw UsageError(c.id + " takes no --n");
        return 0;
    }
    if (n == 0) return c.n_default;
    try {
        c.check_param(n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return n;
}

std::string range_label(const InequalityCase& c) {
    if (!c.parameterized()) return "";
    return "n=" + std::to_string(c.n_min) + ".." + std::to_string(c.n_max);
}

// ---------------------------------------------------------------- list

int cmd_list(const Options& o, std::ostream& out) {
    const std::string format = o.format.empty() ? "text" : o.format;
    require_format(format, {"text", "json"});
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : catalog()) {
            nlohmann::json e{{"id", c.id}, {"family", c.family}, {"name", c.name}, {"side", to_string(c.side)},
                             {"multiplier", c.multiplier},
                             {"expected", c.expected == Expectation::proved ? "PROVED" : "REFUTED"},
                             {"sweep_only", c.sweep_only}};
            if (c.parameterized()) e["n"] = {c.n_min, c.n_max};
            if (c.domain_end) e["domain_end"] = to_string(*c.domain_end);
            j.push_back(e);
        }
        out << j.dump(2) << "\n";
        return ok;
    }
    std::size_t width = 0;
    for (const auto& c : catalog()) width = std::max(width, c.id.size());
    for (const auto& c : catalog()) {
        out << std::left << std::setw(static_cast<int>(width + 2)) << c.id << std::setw(10) << range_label(c)
            << c.name << "  [multiplier " << c.multiplier << "]";
        if (c.domain_end) out << " [on (0, " << to_string(*c.domain_end) << ")]";
        if (c.expected == Expectation::refuted) out << " [expected REFUTED]";
        if (c.sweep_only) out << " [sweep only]";
        out << "\n";
    }
    return ok;
}

// ---------------------------------------------------------------- certify

int cmd_certify(const Options& o, std::ostream& out) {
    if (o.case_id.empty()) throw UsageError("certify needs --case");
    const std::string format = o.format.empty() ? "json" : o.format;
    require_format(format, {"json", "markdown"});
    const InequalityCase& c = case_or_usage(o.case_id);
    if (c.sweep_only) throw UsageError(c.id + " is a sweep target only; use the sweep command");
    const CertifyConfig config = certify_config(o);
    const unsigned n = param_or_default(c, o.n);
    Certificate cert = certify_sign(c, n, config);
    if (format == "json") out << cert.to_json().dump(2) << "\n";
    else out << cert.to_markdown();
    return status_code(cert.status);
}

// ---------------------------------------------------------------- constants

struct ConstantNames {
    const char* family;
    const char* at_zero;
    const char* at_pi_half;
};

constexpr ConstantNames constant_names[] = {
    {"thm3.3", "a", "b"},
    {"thm3.4-wilker2", "beta", "alpha"},
    {"thm3.4-huygens", "lambda", "mu"},
    {"thm3.4-huygens2", "varrho", "rho"},
};

const ConstantNames* names_for(const std::string& family) {
    for (const auto& n : constant_names)
        if (family == n.family) return &n;
    return nullptr;
}

bool constants_ok(const BestConstantPair& p) { return p.matches_printed && p.matches_series && p.cross_validated; }

const char* pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

int cmd_constants(const Options& o, std::ostream& out) {
    const std::string format = o.format.empty() ? "text" : o.format;
    require_format(format, {"text", "json", "markdown"});
    const mpfr_prec_t prec = precision_or(o, 256);
    std::vector<std::string> fams = o.case_id.empty() ? sharp_families() : std::vector<std::string>{o.case_id};
    std::vector<BestConstantPair> pairs;
    for (const auto& f : fams) {
        try {
            pairs.push_back(best_constants(f, o.n, prec));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    int code = ok;
    for (const auto& p : pairs)
        if (!constants_ok(p)) code = refuted;

    const auto label = [](const BestConstantPair& p, bool zero) {
        const ConstantNames* names = names_for(p.family);
        if (names) return std::string(zero ? names->at_zero : names->at_pi_half);
        return std::string(zero ? "at 0" : "at pi/2");
    };
    const auto role = [](const BestConstantPair& p, bool zero) {
        return std::string(zero == p.zero_is_inf ? "inf" : "sup");
    };
    const auto bound = [](const BestConstantPair& p, bool zero) {
        const PiLaurent& v = zero ? p.at_zero : p.at_pi_half;
        return std::string(v == p.lower_printed ? "lower" : v == p.upper_printed ? "upper" : "-");
    };

    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& p : pairs) {
            nlohmann::json e{{"family", p.family},
                             {"matches_printed", p.matches_printed},
                             {"matches_series", p.matches_series},
                             {"cross_validated", p.cross_validated}};
            if (p.n) e["n"] = p.n;
            for (bool zero : {true, false}) {
                e[zero ? "at_zero" : "at_pi_half"] = {
                    {"name", label(p, zero)},
                    {"exact", (zero ? p.at_zero : p.at_pi_half).to_string()},
                    {"decimal", certified_decimal(zero ? p.at_zero_enclosure : p.at_pi_half_enclosure, 20)},
                    {"extremum", role(p, zero)},
                    {"bound", bound(p, zero)}};
            }
            j.push_back(e);
        }
        out << j.dump(2) << "\n";
        return code;
    }
    if (format == "markdown") {
        out << "| family | name | limit | exact | certified decimal | extremum | bound | checks |\n"
            << "|---|---|---|---|---|---|---|---|\n";
        for (const auto& p : pairs)
            for (bool zero : {true, false})
                out << "| " << p.family << " | " << label(p, zero) << " | " << (zero ? "x -> 0" : "x -> pi/2")
                    << " | `" << (zero ? p.at_zero : p.at_pi_half).to_string() << "` | "
                    << certified_decimal(zero ? p.at_zero_enclosure : p.at_pi_half_enclosure, 20) << " | "
                    << role(p, zero) << " | " << bound(p, zero) << " | " << pass_fail(constants_ok(p)) << " |\n";
        return code;
    }
    for (const auto& p : pairs) {
        out << p.family;
        if (p.n) out << " (n = " << p.n << ")";
        out << "\n";
        for (bool zero : {true, false})
            out << "  " << std::left << std::setw(7) << label(p, zero) << (zero ? "x -> 0     " : "x -> pi/2  ")
                << std::setw(6) << role(p, zero) << std::setw(6) << bound(p, zero) << " "
                << certified_decimal(zero ? p.at_zero_enclosure : p.at_pi_half_enclosure, 20) << "  = "
                << (zero ? p.at_zero : p.at_pi_half).to_string() << "\n";
        out << "  printed constants " << pass_fail(p.matches_printed) << ", series coefficient "
            << pass_fail(p.matches_series) << ", limit at pi/2 " << pass_fail(p.cross_validated) << "\n";
    }
    return code;
}

// ---------------------------------------------------------------- series

int cmd_series(const Options& o, std::ostream& out) {
    if (o.expr.empty()) throw UsageError("series needs --expr");
    if (o.order < 1 || o.order > 400) throw UsageError("--order must lie in 1..400");
    const auto ratios = ratio_names();
    if (std::find(ratios.begin(), ratios.end(), o.expr) != ratios.end()) {
        for (const auto& c : ratio_taylor(parse_ratio_id(o.expr), o.order)) out << to_string(c) << "\n";
        return ok;
    }
    Elementary e;
    try {
        e = parse_elementary(o.expr);
    } catch (const std::exception&) {
        std::string names;
        for (const auto& r : ratios) names += r + ", ";
        throw UsageError("unknown --expr '" + o.expr + "'; expected one of " + names +
                         "sin, cos, tan, sin2, cos2x, xcot");
    }
    const RationalSeries s = ps_elementary(e, o.order);
    for (int i = 0; i <= s.order(); ++i)
        if (!is_zero(s[i])) out << "x^" << i << " " << to_string(s[i]) << "\n";
    return ok;
}

// ---------------------------------------------------------------- bernoulli

int cmd_bernoulli(const Options& o, std::ostream& out) {
    if (o.upto < 1 || o.upto > 2000) throw UsageError("--upto must lie in 1..2000");
    const mpfr_prec_t prec = precision_or(o, std::max<mpfr_prec_t>(256, 8 * static_cast<mpfr_prec_t>(o.upto)));
    const Interval pi = pi_enclosure(prec);
    unsigned failures = 0;
    for (unsigned k = 1; k <= o.upto; ++k) {
        const bool bound = bernoulli_bound_check(k, pi);
        if (!bound) ++failures;
        out << "|B_" << 2 * k << "| = " << to_string(bernoulli_abs_even(k)) << (bound ? "" : "  [bound not certified]")
            << "\n";
    }
    out << "two-sided bound on |B_2k|/(2k)! for k = 1.." << o.upto << ": "
        << (failures == 0 ? "PASS" : "FAIL (" + std::to_string(failures) + " not certified)") << "\n";
    return failures == 0 ? ok : refuted;
}

// ---------------------------------------------------------------- appendix

std::vector<CheckResult> appendix_results(const std::string& which, unsigned n_max) {
    std::vector<CheckResult> all;
    const auto add = [&](std::vector<CheckResult> v) { all.insert(all.end(), v.begin(), v.end()); };
    if (which == "E" || which == "all") add(exp_poly_checks());
    if (which == "A" || which == "all") add(appendix_a_checks(n_max ? n_max : 20));
    if (which == "B" || which == "all") add(appendix_b_checks(n_max ? n_max : 100));
    if (which == "C" || which == "all") add(appendix_c_checks(n_max ? n_max : 100));
    if (which == "S" || which == "all") {
        add(sequence_checks(n_max ? n_max : 40));
        add(claim_checks());
    }
    std::vector<CheckResult> unique;
    for (auto& r : all) {
        const bool seen = std::any_of(unique.begin(), unique.end(),
                                      [&](const CheckResult& u) { return u.name == r.name; });
        if (!seen) unique.push_back(std::move(r));
    }
    return unique;
}

int check_code(const std::vector<CheckResult>& v) {
    for (const auto& r : v)
        if (r.status == CheckStatus::fail) return refuted;
    return ok;
}

int cmd_appendix(const Options& o, std::ostream& out) {
    static const std::vector<std::string> allowed{"A", "B", "C", "E", "S", "all"};
    if (std::find(allowed.begin(), allowed.end(), o.check) == allowed.end())
        throw UsageError("--check must be one of A, B, C, E, S, all");
    if (o.check == "A" && o.n_max > 200) throw UsageError("--n-max for A must be at most 200");
    if ((o.check == "B" && o.n_max != 0 && o.n_max < 9) || (o.check == "C" && o.n_max != 0 && o.n_max < 6))
        throw UsageError("--n-max is below the base index");
    const auto results = appendix_results(o.check, o.n_max);
    for (const auto& r : results)
        out << std::left << std::setw(8) << to_string(r.status) << r.name << (r.detail.empty() ? "" : ": ") << r.detail
            << "\n";
    return check_code(results);
}

// ---------------------------------------------------------------- sweep

struct SweepSummary {
    unsigned nodes = 0, sign_failures = 0, sign_unknown = 0;
    unsigned lower_failures = 0, upper_failures = 0;
    unsigned dominance[3] = {0, 0, 0};  // 1, 0, ?
};

SweepSummary summarize(const std::vector<SweepRow>& rows, const std::optional<Rational>& domain_end) {
    SweepSummary s;
    for (const auto& r : rows) {
        ++s.nodes;
        const bool inside = !domain_end || compare(r.x, Interval(*domain_end, r.x.precision())) == Ordering::less;
        for (const auto* g : {&r.gap_lower, &r.gap_upper}) {
            if (!*g || !inside) continue;
            if ((*g)->certainly_negative() || (!(*g)->certainly_positive() && (*g)->certainly_nonnegative())) {
                ++s.sign_failures;
                ++(g == &r.gap_lower ? s.lower_failures : s.upper_failures);
            } else if (!(*g)->certainly_positive())
                ++s.sign_unknown;
        }
        if (r.dominance == "1") ++s.dominance[0];
        else if (r.dominance == "0") ++s.dominance[1];
        else if (r.dominance == "?") ++s.dominance[2];
    }
    return s;
}

bool family_expected_proved(const std::string& family) {
    for (const auto* c : family_cases(family))
        if (c->expected != Expectation::proved) return false;
    return true;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    if (o.case_id.empty()) throw UsageError("sweep needs --case FAMILY");
    const std::string format = o.format.empty() ? "csv" : o.format;
    require_format(format, {"csv"});
    const unsigned grid = o.grid ? o.grid : 100;
    if (grid < 2) throw UsageError("--grid must be at least 2");
    const auto cases = family_cases(o.case_id);
    if (cases.empty()) throw UsageError("unknown family '" + o.case_id + "'");
    const unsigned n = param_or_default(*cases.front(), o.n);
    std::vector<SweepRow> rows;
    try {
        rows = sweep(o.case_id, n, grid, precision_or(o, 256), o.versus);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    out << sweep_csv(rows);
    const SweepSummary s = summarize(rows, cases.front()->domain_end);
    if (family_expected_proved(o.case_id) && s.sign_failures) return refuted;
    if (s.dominance[1]) return refuted;
    return ok;
}

// ---------------------------------------------------------------- report

std::string md_escape(std::string s) {
    std::string r;
    for (char c : s) {
        if (c == '|') r += "\\|";
        else r += c;
    }
    return r;
}

int cmd_report(const Options& o, std::ostream& out) {
    const std::string format = o.format.empty() ? "markdown" : o.format;
    require_format(format, {"markdown"});
    const CertifyConfig config = certify_config(o);
    const unsigned grid = o.grid ? o.grid : 1000;
    int code = ok;

    out << "# Certification report\n\n";
    out << "Configuration: precision " << config.precision << " bits, max depth " << config.max_depth
        << ", delta0 " << to_string(config.delta0);
    if (sgn(config.tighten) != 0) out << ", constants tightened by " << to_string(config.tighten);
    out << ".\n\n";

    out << "## Sign certificates\n\n";
    out << "| case | n | expected | status | interior leaves | nodes | witness |\n|---|---|---|---|---|---|---|\n";
    unsigned n_cases = 0, n_agree = 0;
    for (const auto& c : catalog()) {
        if (c.sweep_only) continue;
        const unsigned lo = c.parameterized() ? c.n_min : 0, hi = c.parameterized() ? c.n_max : 0;
        for (unsigned n = lo; n <= hi; ++n) {
            Certificate cert = certify_sign(c, n, config);
            const Status expected = c.expected == Expectation::proved ? Status::proved : Status::refuted;
            ++n_cases;
            if (cert.status == expected) ++n_agree;
            else code = combine(code, cert.status == Status::inconclusive ? inconclusive : refuted);
            out << "| " << c.id << " | " << (c.parameterized() ? std::to_string(n) : "") << " | " << to_string(expected)
                << " | " << to_string(cert.status) << " | " << cert.leaves.size() << " | " << cert.nodes << " | "
                << (cert.witness ? to_string(*cert.witness) : "") << " |\n";
        }
    }
    out << "\n" << n_agree << " of " << n_cases << " certificates have the expected status.\n\n";

    out << "## Best constants\n\n";
    {
        Options co;
        co.format = "markdown";
        code = combine(code, cmd_constants(co, out));
    }
    out << "\n";

    const auto check_table = [&](const std::string& title, const std::vector<CheckResult>& results) {
        out << "## " << title << "\n\n| check | status | detail |\n|---|---|---|\n";
        for (const auto& r : results)
            out << "| " << md_escape(r.name) << " | " << to_string(r.status) << " | " << md_escape(r.detail) << " |\n";
        out << "\n";
        code = combine(code, check_code(results));
    };
    check_table("Proof sequences and coefficient claims", appendix_results("S", 0));
    {
        std::vector<CheckResult> v = appendix_results("all", 0);
        const auto seq = appendix_results("S", 0);
        std::erase_if(v, [&](const CheckResult& r) {
            return std::any_of(seq.begin(), seq.end(), [&](const CheckResult& q) { return q.name == r.name; });
        });
        check_table("Exponential-polynomial identities and appendix reductions", v);
    }
    {
        const Interval pi = pi_enclosure(1024);
        bool ok_bound = true;
        for (unsigned k = 1; k <= 60; ++k) ok_bound = ok_bound && bernoulli_bound_check(k, pi);
        check_table("Bernoulli bounds",
                    {{"two-sided bound on |B_2k|/(2k)!", ok_bound ? CheckStatus::pass : CheckStatus::fail, "k = 1..60"}});
    }

    out << "## Sweeps (" << grid << " nodes)\n\n";
    out << "Gap signs are counted inside each case's domain. Dominance compares against the listed weaker family: "
           "1 tighter, 0 looser, ? undecided.\n\n";
    out << "| family | n | lower gaps not positive | upper gaps not positive | gaps undecided | versus | dominance 1 / 0 / ? "
           "|\n|---|---|---|---|---|---|---|\n";
    for (const auto& family : families()) {
        const auto cases = family_cases(family);
        const InequalityCase& first = *cases.front();
        const bool all_n = first.sweep_only && first.parameterized();
        const unsigned lo = all_n ? first.n_min : first.n_default, hi = all_n ? first.n_max : first.n_default;
        std::vector<std::string> versus{""};
        for (const auto& p : dominance_pairs())
            if (p.family == family) versus.push_back(p.weaker);
        if (versus.size() > 1) versus.erase(versus.begin());
        for (unsigned n = lo; n <= hi; ++n) {
            for (const auto& v : versus) {
                const auto rows = sweep(family, n, grid, 256, v);
                const SweepSummary s = summarize(rows, first.domain_end);
                if (family_expected_proved(family) && s.sign_failures) code = combine(code, refuted);
                if (s.dominance[1]) code = combine(code, refuted);
                out << "| " << family << " | " << (first.parameterized() ? std::to_string(n) : "") << " | "
                    << s.lower_failures << " | " << s.upper_failures << " | " << s.sign_unknown << " | " << (v.empty() ? "" : v) << " | ";
                if (v.empty()) out << "";
                else out << s.dominance[0] << " / " << s.dominance[1] << " / " << s.dominance[2];
                out << " |\n";
            }
        }
    }
    out << "\nExit status: " << code << "\n";
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified trigonometric inequality checker", "trigcert"};
    app.require_subcommand(1);
    Options o;

    const auto add_certify_flags = [&](CLI::App* s) {
        s->add_option("--precision", o.precision, "starting precision in bits (>= 32)");
        s->add_option("--max-depth", o.max_depth, "bisection depth limit");
        s->add_option("--delta0", o.delta0, "initial series zone width, rational in (0, 1/2]");
        s->add_option("--tighten", o.tighten, "move the constant by this relative amount towards failure");
    };
    const auto add_output_flags = [&](CLI::App* s) {
        s->add_option("--format", o.format, "output format");
        s->add_option("--out", o.out, "write output to this file");
    };

    auto* list = app.add_subcommand("list", "print the catalog");
    add_output_flags(list);

    auto* certify = app.add_subcommand("certify", "certify one catalog case");
    certify->add_option("--case", o.case_id, "case id (see list)");
    certify->add_option("--n", o.n, "parameter for parameterized cases");
    add_certify_flags(certify);
    add_output_flags(certify);

    auto* constants = app.add_subcommand("constants", "best constants of the sharp families");
    constants->add_option("--case", o.case_id, "two-sided family instead of the four sharp ones");
    constants->add_option("--n", o.n, "parameter for parameterized families");
    constants->add_option("--precision", o.precision, "precision of the enclosures in bits");
    add_output_flags(constants);

    auto* series = app.add_subcommand("series", "exact Taylor coefficients");
    series->add_option("--expr", o.expr, "wilker-ratio, huygens-ratio, second-wilker-ratio, second-huygens-ratio, "
                                         "or sin, cos, tan, sin2, cos2x, xcot");
    series->add_option("--order", o.order, "truncation order");
    add_output_flags(series);

    auto* bernoulli = app.add_subcommand("bernoulli", "|B_2k| and the two-sided bound check");
    bernoulli->add_option("--upto", o.upto, "largest k");
    bernoulli->add_option("--precision", o.precision, "precision of pi in bits");
    add_output_flags(bernoulli);

    auto* appendix = app.add_subcommand("appendix", "exact checks of the discrete proof steps");
    appendix->add_option("--check", o.check, "A, B, C, E (identities), S (sequences and claims) or all");
    appendix->add_option("--n-max", o.n_max, "largest index checked");
    add_output_flags(appendix);

    auto* sweep_cmd = app.add_subcommand("sweep", "gap values on a grid, as CSV");
    sweep_cmd->add_option("--case", o.case_id, "family");
    sweep_cmd->add_option("--n", o.n, "parameter for parameterized families");
    sweep_cmd->add_option("--grid", o.grid, "number of interior nodes (>= 2)");
    sweep_cmd->add_option("--versus", o.versus, "family to compare against");
    sweep_cmd->add_option("--precision", o.precision, "precision in bits");
    add_output_flags(sweep_cmd);

    auto* report = app.add_subcommand("report", "run everything and write a Markdown summary");
    report->add_option("--grid", o.grid, "sweep nodes per family");
    add_certify_flags(report);
    add_output_flags(report);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    std::ostringstream buffer;
    int code = ok;
    try {
        if (*list) code = cmd_list(o, buffer);
        else if (*certify) code = cmd_certify(o, buffer);
        else if (*constants) code = cmd_constants(o, buffer);
        else if (*series) code = cmd_series(o, buffer);
        else if (*bernoulli) code = cmd_bernoulli(o, buffer);
        else if (*appendix) code = cmd_appendix(o, buffer);
        else if (*sweep_cmd) code = cmd_sweep(o, buffer);
        else if (*report) code = cmd_report(o, buffer);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    if (o.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << o.out << "\n";
            return usage;
        }
        f << buffer.str();
    }
    return code;
}

}  // namespace trigcert::cli
