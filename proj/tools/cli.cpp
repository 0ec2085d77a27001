#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "formale/asd.hpp"
#include "formale/combinatorics.hpp"
#include "formale/expansion.hpp"
#include "formale/formal_group.hpp"
#include "formale/io.hpp"
#include "formale/local.hpp"
#include "formale/lseries.hpp"

namespace formale::cli {

namespace {

struct RunConfig {
    std::string curve_text;
    std::size_t order = 0;
    std::int64_t p = 0;
    std::int64_t p_max = 0;
    std::int64_t n_max = 0;
    std::int64_t s_max = 1;
    bool json = false;
    std::string cache_path;
    bool assert_minimal = false;
    std::string variant = "printed";
};

class Session {
public:
    Session(const RunConfig& config, std::ostream& out, std::ostream& err) : cfg_(config), out_(out), err_(err) {
        if (cfg_.cache_path.empty()) {
            if (const char* env = std::getenv("FORMALE_CACHE")) {
                cfg_.cache_path = env;
            }
        }
        if (!cfg_.cache_path.empty()) {
            load_cache(cfg_.cache_path, cache_);
        }
    }

    ~Session() = default;

    void persist() {
        if (!cfg_.cache_path.empty()) {
            save_cache(cfg_.cache_path, cache_);
        }
    }

    const RunConfig& cfg() const { return cfg_; }
    std::ostream& out() { return out_; }
    std::ostream& err() { return err_; }
    TraceCache& cache() { return cache_; }

    WeierstrassCurve curve() const {
        if (cfg_.curve_text.empty()) {
            throw ParseError("--curve is required");
        }
        return WeierstrassCurve::parse(cfg_.curve_text);
    }

    CheckOptions options() { return CheckOptions{cfg_.assert_minimal, &cache_}; }

private:
    RunConfig cfg_;
    std::ostream& out_;
    std::ostream& err_;
    TraceCache cache_;
};

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string text_line(const CongruenceReport& r) {
    std::string line = to_string(r.statement);
    if (r.p) {
        line += " p=" + std::to_string(*r.p);
    }
    if (r.n) {
        line += " n=" + std::to_string(*r.n);
    }
    if (r.s) {
        line += " s=" + std::to_string(*r.s);
    }
    line += " residual=" + r.residual.get_str() + " modulus=" + r.modulus.get_str();
    if (r.variant) {
        line += " variant=" + *r.variant;
    }
    line += r.pass ? " pass" : " FAIL";
    return line;
}

int emit_reports(Session& s, std::vector<CongruenceReport> reports) {
    sort_reports(reports);
    if (s.cfg().json) {
        Json arr = Json::array();
        for (const auto& r : reports) {
            arr.push_back(to_json(r));
        }
        print_json(s.out(), arr);
    } else {
        std::optional<std::string> last_note;
        for (const auto& r : reports) {
            if (r.note && r.note != last_note) {
                s.out() << "# " << *r.note << '\n';
                last_note = r.note;
            }
            s.out() << text_line(r) << '\n';
        }
        const auto failures = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });
        s.out() << reports.size() << " checks, " << failures << " failed\n";
    }
    return all_pass(reports) ? kOk : kCongruenceFailure;
}

std::int64_t require_positive(std::int64_t v, const char* flag) {
    if (v <= 0) {
        throw ParseError(std::string(flag) + " must be positive");
    }
    return v;
}

std::vector<std::int64_t> selected_primes(const RunConfig& cfg) {
    if (cfg.p != 0) {
        if (!is_prime(cfg.p)) {
            throw NotPrime(std::to_string(cfg.p) + " is not prime");
        }
        return {cfg.p};
    }
    if (cfg.p_max <= 0) {
        throw ParseError("one of --p or --p-max is required");
    }
    return primes_up_to(cfg.p_max);
}

// thm2 and cor1 share the prime sweep: one b-series, bad primes
// skipped unless the model is asserted minimal (an explicit --p at a bad prime
// is refused instead).
int run_prime_sweep(Session& s, bool thm2) {
    const auto curve = s.curve();
    const auto& cfg = s.cfg();
    const std::int64_t n_max = require_positive(cfg.n_max, "--n-max");
    const std::int64_t s_max = require_positive(cfg.s_max, "--s-max");
    const auto primes = selected_primes(cfg);
    const auto locals = sweep_local_data(curve, primes, &s.cache());
    const std::size_t needed = required_order(primes.back(), n_max);
    const std::size_t order = cfg.order != 0 ? cfg.order : needed;
    const IntSeries b = invariant_differential(curve, order);
    std::vector<CongruenceReport> all;
    for (const auto& local : locals) {
        if (local.reduction != ReductionType::Good && !cfg.assert_minimal && cfg.p == 0) {
            s.err() << "skipping p = " << local.p << " (" << to_string(local.reduction)
                    << " reduction; pass --assert-minimal to include)\n";
            continue;
        }
        auto part = thm2 ? check_thm2(curve, b, local, n_max, s_max, s.options())
                         : check_cor1(curve, b, local, n_max, s_max, s.options());
        all.insert(all.end(), part.begin(), part.end());
    }
    return emit_reports(s, std::move(all));
}

// The single parameter of y^2 = x^3 + a x (index 3) or y^2 + a y = x^3 (index 2).
Integer family_parameter(const WeierstrassCurve& curve, std::size_t index, const char* shape) {
    const auto& a = curve.coefficients();
    for (std::size_t i = 0; i < 5; ++i) {
        if (i != index && a[i] != 0) {
            throw ParseError(std::string("this check needs a curve of the form ") + shape);
        }
    }
    return a[index];
}

int cmd_check(Session& s, const std::string& statement) {
    const auto& cfg = s.cfg();
    const Variant variant = variant_from_string(cfg.variant);
    if (statement == "thm2") {
        return run_prime_sweep(s, true);
    }
    if (statement == "cor1") {
        return run_prime_sweep(s, false);
    }
    if (statement == "cor33") {
        const Integer a = family_parameter(s.curve(), 3, "[0,0,0,a,0]");
        return emit_reports(s, check_cor33(a, require_positive(cfg.p_max, "--p-max"), variant,
                                           cfg.n_max > 0 ? cfg.n_max : 25, &s.cache()));
    }
    if (statement == "cor34") {
        const Integer a = family_parameter(s.curve(), 2, "[0,0,a,0,0]");
        return emit_reports(s, check_cor34(a, require_positive(cfg.p_max, "--p-max"), variant,
                                           cfg.n_max > 0 ? cfg.n_max : 25, cfg.s_max, &s.cache()));
    }
    if (statement == "sec4") {
        const auto curve = s.curve();
        if (!curve.in_family2()) {
            throw ParseError("sec4 needs a curve of the form [0,0,a3,0,a6]");
        }
        return emit_reports(s, check_sec4_trace(curve.a3(), curve.a6(), require_positive(cfg.p_max, "--p-max"),
                                                &s.cache()));
    }
    if (statement == "remark11") {
        const std::int64_t bound = cfg.p_max > 0 ? cfg.p_max : 13;
        return emit_reports(s, check_remark11(require_positive(cfg.n_max, "--n-max"),
                                              require_positive(cfg.s_max, "--s-max"), bound));
    }
    throw ParseError("unknown check '" + statement + "'");
}

int cmd_expand(Session& s) {
    const auto curve = s.curve();
    const std::size_t order = s.cfg().order != 0 ? s.cfg().order : 16;
    if (order < 4) {
        throw ParseError("--order must be at least 4");
    }
    const auto bundle = expand(curve, order);
    const IntSeries w = bundle.w.truncated(order);
    if (s.cfg().json) {
        Json j;
        j["curve"] = to_json(curve.coefficients());
        j["order"] = order;
        j["w"] = to_json(w);
        j["b"] = to_json(bundle.b);
        print_json(s.out(), j);
        return kOk;
    }
    s.out() << "curve " << curve.to_string() << '\n';
    for (std::size_t n = 0; n < order; ++n) {
        s.out() << "s_" << n << " = " << w[n] << '\n';
    }
    for (std::size_t n = 1; n <= order; ++n) {
        s.out() << "b(" << n << ") = " << bundle.b_at(n) << '\n';
    }
    return kOk;
}

int cmd_points(Session& s) {
    const auto curve = s.curve();
    const auto locals = sweep_local_data(curve, selected_primes(s.cfg()), &s.cache());
    if (s.cfg().json) {
        Json arr = Json::array();
        for (const auto& d : locals) {
            arr.push_back(to_json(d));
        }
        print_json(s.out(), arr);
        return kOk;
    }
    for (const auto& d : locals) {
        s.out() << "p=" << d.p << " type=" << to_string(d.reduction) << " A_p="
                << (d.points ? std::to_string(*d.points) : std::string("-")) << " t_p=" << d.trace
                << " u_p=" << d.u << '\n';
    }
    return kOk;
}

int cmd_lseries(Session& s, std::size_t bound, bool eta_compare) {
    const auto curve = s.curve();
    if (bound == 0) {
        throw ParseError("--n must be positive");
    }
    const auto euler = euler_coefficients(curve, bound, &s.cache());
    std::optional<bool> same;
    if (eta_compare) {
        same = euler.c == eta_product_level11(bound).c;
    }
    if (s.cfg().json) {
        if (same) {
            Json j;
            j["c"] = to_json(euler);
            j["euler_equals_eta"] = *same;
            print_json(s.out(), j);
        } else {
            s.out() << to_json(euler).dump() << '\n';
        }
    } else {
        for (std::size_t n = 1; n <= bound; ++n) {
            s.out() << "c_" << n << " = " << euler.at(n) << '\n';
        }
        if (same) {
            s.out() << "euler == eta: " << (*same ? "true" : "false") << '\n';
        }
    }
    return same.value_or(true) ? kOk : kCongruenceFailure;
}

int cmd_group_law(Session& s, std::size_t degree, bool iso, const std::string& c_file) {
    const auto curve = s.curve();
    if (degree < 3) {
        throw ParseError("--degree must be at least 3");
    }
    const auto F = group_law(curve, degree);
    const bool assoc = is_associative(F.law);
    Json j;
    j["curve"] = to_json(curve.coefficients());
    j["degree_bound"] = degree;
    Json terms = Json::array();
    for (std::size_t d = 1; d < degree; ++d) {
        for (std::size_t i = d + 1; i-- > 0;) {
            const auto& v = F.law.coeff(i, d - i);
            if (v != 0) {
                terms.push_back(Json::array({i, d - i, v.get_str()}));
            }
        }
    }
    j["F"] = terms;
    j["integral"] = F.integrality_verified;
    j["identity"] = has_identity(F.law);
    j["commutative"] = is_commutative(F.law);
    j["associative"] = assoc;
    int code = has_identity(F.law) && is_commutative(F.law) && assoc ? kOk : kCongruenceFailure;

    if (iso) {
        DirichletCoefficients c;
        if (!c_file.empty()) {
            std::ifstream in(c_file);
            if (!in) {
                throw ParseError("cannot read " + c_file);
            }
            Json cj;
            try {
                in >> cj;
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(c_file + ": " + e.what());
            }
            c = dirichlet_from_json(cj);
            if (c.bound() < degree) {
                throw InsufficientOrder("c-sequence has " + std::to_string(c.bound()) + " terms, need " +
                                        std::to_string(degree));
            }
            c.c.resize(degree);
        } else {
            c = euler_coefficients(curve, degree, &s.cache());
        }
        const auto f = formal_log(invariant_differential(curve, degree));
        const auto g = g_series(c);
        Json isoj;
        isoj["c_provenance"] = to_string(c.provenance);
        try {
            const auto G = lseries_formal_group(c.c, degree);
            const auto report = resolve_isomorphism(f, g, F.law, G.law, degree);
            isoj["G_integral"] = true;
            isoj["chosen"] = report.chosen;
            isoj["g_inverse_after_f_intertwines"] = report.g_inverse_after_f_intertwines;
            isoj["f_inverse_after_g_intertwines"] = report.f_inverse_after_g_intertwines;
            isoj["phi_integral"] = report.phi_integral;
            const auto& phi = report.chosen == "f^-1 o g" ? report.f_inverse_after_g : report.g_inverse_after_f;
            isoj["phi"] = to_json(phi);
            if (report.chosen == "none" || !report.phi_integral) {
                code = kCongruenceFailure;
            }
        } catch (const IntegralityViolation& e) {
            isoj["G_integral"] = false;
            isoj["error"] = e.what();
            code = kCongruenceFailure;
        }
        j["isomorphism"] = isoj;
    }

    if (s.cfg().json) {
        print_json(s.out(), j);
        return code;
    }
    s.out() << "curve " << curve.to_string() << ", total degree < " << degree << '\n';
    for (const auto& t : j["F"]) {
        s.out() << "  X^" << t[0].get<std::size_t>() << " Y^" << t[1].get<std::size_t>() << " : "
                << t[2].get<std::string>() << '\n';
    }
    s.out() << "integral: " << std::boolalpha << F.integrality_verified << ", commutative: "
            << is_commutative(F.law) << ", associative: " << assoc << '\n';
    if (iso) {
        const auto& isoj = j["isomorphism"];
        s.out() << "G integral: " << isoj["G_integral"].get<bool>() << '\n';
        if (isoj.contains("chosen")) {
            s.out() << "phi = " << isoj["chosen"].get<std::string>()
                    << ", integral: " << isoj["phi_integral"].get<bool>() << '\n';
        }
    }
    return code;
}

int cmd_closed_form(Session& s) {
    const auto curve = s.curve();
    const std::size_t order = s.cfg().order != 0 ? s.cfg().order : 32;
    const IntSeries b = invariant_differential(curve, order);
    std::optional<IntSeries> closed;
    std::string family;
    if (curve.in_family1()) {
        family = "a6 = 0";
        IntSeries c(order);
        for (std::size_t n = 0; n < order; ++n) {
            c[n] = b_closed_family1(curve.a1(), curve.a2(), curve.a3(), curve.a4(), static_cast<unsigned>(n));
        }
        closed = c;
    } else if (curve.in_family2()) {
        family = "a1 = a2 = a4 = 0";
        closed = b_series_family2(curve.a3(), curve.a6(), order);
    } else {
        throw ParseError("no closed form for " + curve.to_string() + " (needs a6 = 0 or a1 = a2 = a4 = 0)");
    }
    std::size_t mismatches = 0;
    Json rows = Json::array();
    for (std::size_t n = 1; n <= order; ++n) {
        const bool agree = (*closed)[n - 1] == b[n - 1];
        mismatches += agree ? 0 : 1;
        rows.push_back(Json{{"n", n}, {"closed", (*closed)[n - 1].get_str()}, {"expansion", b[n - 1].get_str()},
                            {"agree", agree}});
    }
    if (s.cfg().json) {
        print_json(s.out(), Json{{"curve", to_json(curve.coefficients())}, {"family", family}, {"rows", rows}});
    } else {
        s.out() << "family " << family << ", b(1.." << order << "): " << (order - mismatches) << " agree, "
                << mismatches << " differ\n";
        for (const auto& r : rows) {
            if (!r["agree"].get<bool>()) {
                s.out() << "  b(" << r["n"].get<std::size_t>() << "): closed " << r["closed"].get<std::string>()
                        << ", expansion " << r["expansion"].get<std::string>() << '\n';
            }
        }
    }
    return mismatches == 0 ? kOk : kCongruenceFailure;
}

int cmd_tate_remark(Session& s, const std::string& b_text, const std::string& c_text, bool unit) {
    const auto n_max = static_cast<unsigned>(s.cfg().n_max > 0 ? s.cfg().n_max : 12);
    std::vector<RemarkComparison> rows;
    if (unit) {
        rows = compare_tate_remark_unit(n_max);
    } else {
        Integer b, c;
        if (b.set_str(b_text, 10) != 0 || c.set_str(c_text, 10) != 0) {
            throw ParseError("--b and --c must be integers");
        }
        // The family degenerates where the Weierstrass equation does.
        WeierstrassCurve(1 - c, -b, -b, 0, 0);
        rows = compare_tate_remark(b, c, n_max);
    }
    const bool all_agree = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.agree; });
    if (s.cfg().json) {
        Json arr = Json::array();
        for (const auto& r : rows) {
            arr.push_back(Json{{"n", r.n},
                               {"printed", r.printed.get_str()},
                               {"authoritative", r.authoritative.get_str()},
                               {"agree", r.agree}});
        }
        print_json(s.out(), arr);
    } else {
        for (const auto& r : rows) {
            s.out() << "b(" << r.n << "): double sum " << r.printed << ", closed form " << r.authoritative
                    << (r.agree ? "" : "  <-- differs") << '\n';
        }
        s.out() << (all_agree ? "double sum agrees" : "double sum disagrees") << '\n';
    }
    return all_agree ? kOk : kCongruenceFailure;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const SingularCurve*>(&e) || dynamic_cast<const UnassertedModel*>(&e)) {
        return kInvalidCurve;
    }
    if (dynamic_cast<const InsufficientOrder*>(&e)) {
        return kInsufficientOrder;
    }
    if (dynamic_cast<const HasseViolation*>(&e) || dynamic_cast<const IntegralityViolation*>(&e)) {
        return kCongruenceFailure;
    }
    return kParseError;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Formal groups, invariant differentials and congruences of elliptic curves", "formale"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--curve", cfg.curve_text, "Weierstrass coefficients [a1,a2,a3,a4,a6]");
        sub->add_flag("--json", cfg.json, "Emit JSON");
        sub->add_option("--cache", cfg.cache_path, "Trace cache file (default $FORMALE_CACHE)");
    };

    auto* expand_cmd = app.add_subcommand("expand", "Print w(z) and the invariant differential b(n)");
    add_common(expand_cmd);
    expand_cmd->add_option("--order", cfg.order, "Number of terms");

    std::string statement;
    auto* check_cmd = app.add_subcommand("check", "Check a congruence family");
    add_common(check_cmd);
    check_cmd->add_option("statement", statement, "thm2, cor1, cor33, cor34, sec4 or remark11")
        ->required()
        ->check(CLI::IsMember({"thm2", "cor1", "cor33", "cor34", "sec4", "remark11"}));
    check_cmd->add_option("--p", cfg.p, "Single prime");
    check_cmd->add_option("--p-max", cfg.p_max, "Sweep all primes up to this bound");
    check_cmd->add_option("--n-max", cfg.n_max, "Largest n");
    check_cmd->add_option("--s-max", cfg.s_max, "Largest exponent s");
    check_cmd->add_option("--order", cfg.order, "Expansion order (default: the order the sweep needs)");
    check_cmd->add_flag("--assert-minimal", cfg.assert_minimal, "Treat the model as minimal at bad primes");
    check_cmd->add_option("--variant", cfg.variant, "Reading of the special-case corollaries")
        ->check(CLI::IsMember({"printed", "a-power"}));

    auto* points_cmd = app.add_subcommand("points", "Point counts and local data");
    add_common(points_cmd);
    points_cmd->add_option("--p", cfg.p, "Single prime");
    points_cmd->add_option("--p-max", cfg.p_max, "All primes up to this bound");

    std::size_t lseries_n = 0;
    bool eta_compare = false;
    auto* lseries_cmd = app.add_subcommand("lseries", "Dirichlet coefficients from the Euler product");
    add_common(lseries_cmd);
    lseries_cmd->add_option("--n", lseries_n, "Number of coefficients")->required();
    lseries_cmd->add_flag("--eta-compare", eta_compare, "Compare with q prod (1-q^n)^2 (1-q^11n)^2");

    std::size_t degree = 8;
    bool iso = false;
    std::string c_file;
    auto* group_cmd = app.add_subcommand("group-law", "Formal group law and the isomorphism to the L-series law");
    add_common(group_cmd);
    group_cmd->add_option("--degree", degree, "Total degree bound (terms of degree < D)");
    group_cmd->add_flag("--iso", iso, "Also build phi = g^-1 o f and test it");
    group_cmd->add_option("--c", c_file, "JSON integer array c_1..c_N to use for g instead of the Euler product");

    auto* closed_cmd = app.add_subcommand("closed-form", "Compare closed-form b(n) with the expansion");
    add_common(closed_cmd);
    closed_cmd->add_option("--order", cfg.order, "Number of terms");

    std::string tate_b = "1";
    std::string tate_c = "1";
    bool tate_unit = false;
    auto* tate_cmd = app.add_subcommand("tate-remark", "Double sum for the Tate normal form against the closed form");
    tate_cmd->add_option("--b", tate_b, "Parameter b");
    tate_cmd->add_option("--c", tate_c, "Parameter c");
    tate_cmd->add_option("--n-max", cfg.n_max, "Largest n");
    tate_cmd->add_flag("--unit", tate_unit, "Use the b = c = 1 specialisation without the (1-c) power");
    tate_cmd->add_flag("--json", cfg.json, "Emit JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        Session session(cfg, out, err);
        int code = kOk;
        if (expand_cmd->parsed()) {
            code = cmd_expand(session);
        } else if (check_cmd->parsed()) {
            code = cmd_check(session, statement);
        } else if (points_cmd->parsed()) {
            code = cmd_points(session);
        } else if (lseries_cmd->parsed()) {
            code = cmd_lseries(session, lseries_n, eta_compare);
        } else if (group_cmd->parsed()) {
            code = cmd_group_law(session, degree, iso, c_file);
        } else if (closed_cmd->parsed()) {
            code = cmd_closed_form(session);
        } else if (tate_cmd->parsed()) {
            code = cmd_tate_remark(session, tate_b, tate_c, tate_unit);
        }
        session.persist();
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
}

} // namespace formale::cli
