// Command-line front end: expand named q-series, run named congruence
// checks, and emit JSON report files.  Exit codes: 0 success / all passed,
// 1 a congruence failed, 2 usage error, 3 precision or window budget
// insufficient (including unusable caches).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mockmod/cache.hpp"
#include "mockmod/verify.hpp"

namespace {

using namespace mockmod;

struct ExpandArgs {
    std::string form;
    int k = 4;
    long p = 3;
    long m = 3;
    long l = 3;
    long terms = 32;
    std::string ring = "rational";
    long precision = 24;
    long scale = -1; // -1 = default k - 1 - 2v for f-alpha-delta
    std::string format = "plain";
    std::string cache_dir;
    int threads = 1;
};

// Canonical parameter string for a form request: the exact key the cache
// and JSON metadata use.
std::string canonical_params(const ExpandArgs& a) {
    std::ostringstream ps;
    if (a.form == "eisenstein")
        ps << "k=" << a.k << ";terms=" << a.terms;
    else if (a.form == "delta" || a.form == "j" || a.form == "eichler")
        ps << "terms=" << a.terms;
    else if (a.form == "eisenstein-p")
        ps << "k=" << a.k << ";p=" << a.p << ";terms=" << a.terms;
    else if (a.form == "e2tilde")
        ps << "p=" << a.p << ";terms=" << a.terms;
    else if (a.form == "dj-basis")
        ps << "m=" << a.m << ";terms=" << a.terms;
    else if (a.form == "r-p")
        ps << "p=" << a.p << ";terms=" << a.terms;
    else if (a.form == "f-alpha-delta")
        ps << "p=" << a.p << ";l=" << a.l << ";scale="
           << (a.scale >= 0 ? a.scale : -1) << ";terms=" << a.terms;
    else
        throw DomainError("unknown form id '" + a.form + "'");
    return ps.str();
}

// Series expansion over an arbitrary ring, dispatched by form id.  For
// [0,*) / [1,*) forms `terms` is the exponent bound; for forms with a
// principal part it is the total coefficient count from the natural
// leading exponent.
template <class Ring>
Series<Ring> build_form(const Ring& ring, const ExpandArgs& a) {
    if (a.form == "eisenstein") return eisenstein(ring, a.k, a.terms);
    if (a.form == "delta") return delta_series(ring, a.terms);
    if (a.form == "j") return j_invariant(ring, a.terms);
    if (a.form == "eisenstein-p")
        return eisenstein_p(ring, a.k, a.p, a.terms);
    if (a.form == "e2tilde") return e2_tilde(ring, a.p, a.terms);
    if (a.form == "dj-basis") return duke_jenkins(ring, a.m, a.terms);
    if (a.form == "r-p") return r_p(ring, a.p, a.terms);
    throw DomainError("unknown form id '" + a.form + "'");
}

PSeries build_f_alpha_delta(const ExpandArgs& a) {
    PadicRing ring(a.p, a.precision);
    auto pair = hensel_quadratic_roots(delta_eigenvalue(a.p), a.p, 12,
                                       ring.precision());
    const long s = a.scale >= 0 ? a.scale : 12 - 1 - 2 * pair.v;
    auto plan = plan_truncation(a.p, 12, pair.v, a.l, s, a.terms);
    auto rp = r_p(ring, a.p, plan.rp_terms);
    auto f = f_alpha_delta_truncated(ring, pair, plan, rp);
    return crop(f, -1, a.terms);
}

template <class Ring>
int emit_series(const Series<Ring>& s, const ExpandArgs& a,
                const std::string& form, const std::string& params) {
    if (a.format == "plain") {
        for (long n = s.min_exp(); n < s.prec_bound(); ++n)
            std::cout << n << " " << s.ring().encode(s.at(n)) << "\n";
        return 0;
    }
    if (a.format == "json") {
        nlohmann::ordered_json j;
        j["form"] = form;
        j["params"] = params;
        j["ring"] = s.ring().descriptor();
        j["minExp"] = s.min_exp();
        j["precBound"] = s.prec_bound();
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (long n = s.min_exp(); n < s.prec_bound(); ++n)
            coeffs.push_back({n, s.ring().encode(s.at(n))});
        j["coefficients"] = std::move(coeffs);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    throw DomainError("unknown output format '" + a.format + "'");
}

// Expand with disk-cache memoization.  Classical forms are cached at
// >= 2000 coefficients and the weight -10 eigenform source at >= 8721 so
// later narrower requests are served from disk; output depends only on
// the requested window.
template <class Ring>
Series<Ring> expand_cached(const Ring& ring, const ExpandArgs& a) {
    if (a.cache_dir.empty()) return build_form(ring, a);
    ExpandArgs wide = a;
    if (a.form == "r-p" || a.form == "dj-basis")
        wide.terms = std::max<long>(a.terms, 8721);
    else
        wide.terms = std::max<long>(a.terms, 2000);
    // Natural window of the wide build, by form family.
    const long shift = (a.form == "dj-basis") ? a.m
                       : (a.form == "r-p")    ? a.p
                                              : 0;
    const long lo = (a.form == "dj-basis" || a.form == "r-p") ? -shift
                    : (a.form == "j")                         ? -1
                    : (a.form == "delta")                     ? 1
                                                              : 0;
    const long hi = wide.terms - shift;
    CacheKey key{a.form, canonical_params(wide)};
    auto full = cache_through(a.cache_dir, key, ring, lo, hi,
                              [&] { return build_form(ring, wide); });
    return crop(full, lo, a.terms - shift);
}

int cmd_expand(const ExpandArgs& a) {
    set_series_threads(std::max(1, a.threads));
    const std::string params = canonical_params(a);
    if (a.form == "f-alpha-delta") {
        auto s = build_f_alpha_delta(a);
        return emit_series(s, a, a.form, params);
    }
    if (a.form == "eichler") {
        if (a.ring != "rational")
            throw DomainError(
                "the Eichler integral is only provided over rationals");
        RationalRing rr;
        auto s = eichler_integral(delta_series(rr, a.terms), -10);
        return emit_series(s, a, a.form, params);
    }
    if (a.ring == "rational") {
        RationalRing rr;
        return emit_series(expand_cached(rr, a), a, a.form, params);
    }
    if (a.ring == "padic") {
        PadicRing ring(a.p, a.precision);
        return emit_series(expand_cached(ring, a), a, a.form, params);
    }
    throw DomainError("unknown ring '" + a.ring + "' (rational|padic)");
}

int run_reports(const std::vector<CongruenceReport>& reports) {
    bool all = true;
    long pass = 0, fail = 0;
    for (const auto& rep : reports) {
        std::cout << report_summary_line(rep) << "\n";
        all = all && rep.pass;
        (rep.pass ? pass : fail) += 1;
    }
    std::cout << "summary: " << pass << " passed, " << fail << " failed\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-expansion toolkit: expansions, congruence checks, "
                 "and verification reports"};
    app.require_subcommand(1);

    ExpandArgs ea;
    CLI::App* expand = app.add_subcommand("expand", "print q-expansions");
    expand->add_option("--form", ea.form,
                       "eisenstein|delta|j|eisenstein-p|e2tilde|eichler|"
                       "dj-basis|r-p|f-alpha-delta")
        ->required();
    expand->add_option("--k", ea.k, "Eisenstein weight");
    expand->add_option("--p", ea.p, "prime");
    expand->add_option("--m", ea.m, "basis index");
    expand->add_option("--l", ea.l, "target modulus exponent");
    expand->add_option("--terms", ea.terms, "coefficient window");
    expand->add_option("--ring", ea.ring, "rational|padic");
    expand->add_option("--precision", ea.precision, "p-adic mantissa digits");
    expand->add_option("--scale", ea.scale,
                       "p-power scale for f-alpha-delta (default k-1-2v)");
    expand->add_option("--format", ea.format, "plain|json");
    expand->add_option("--cache-dir", ea.cache_dir, "coefficient cache");
    expand->add_option("--threads", ea.threads, "series worker threads");

    std::string check_id;
    CheckOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "run one named check");
    verify->add_option("--check", check_id, "check id (see `checks`)")
        ->required();
    verify->add_option("--terms", vopt.terms, "override coefficient window");
    verify->add_option("--precision", vopt.precision,
                       "p-adic mantissa digits");
    verify->add_option("--m", vopt.mod_power, "override modulus exponent");
    verify->add_option("--cache-dir", vopt.cache_dir, "coefficient cache");
    verify->add_option("--threads", vopt.threads, "series worker threads");

    long report_p = 3;
    std::string report_out;
    bool report_parallel = false;
    CheckOptions ropt;
    CLI::App* report = app.add_subcommand("report", "run a full check suite");
    report->add_option("--p", report_p, "suite prime");
    report->add_option("--out", report_out, "JSON output file")->required();
    report->add_flag("--parallel", report_parallel, "run checks in threads");
    report->add_option("--precision", ropt.precision,
                       "p-adic mantissa digits");
    report->add_option("--terms", ropt.terms, "override coefficient window");
    report->add_option("--cache-dir", ropt.cache_dir, "coefficient cache");
    report->add_option("--threads", ropt.threads, "series worker threads");

    CLI::App* checks = app.add_subcommand("checks", "list known check ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (const char* env = std::getenv("MOCKMOD_CACHE_DIR")) {
            if (ea.cache_dir.empty()) ea.cache_dir = env;
            if (vopt.cache_dir.empty()) vopt.cache_dir = env;
            if (ropt.cache_dir.empty()) ropt.cache_dir = env;
        }
        if (expand->parsed()) return cmd_expand(ea);
        if (verify->parsed()) {
            if (!CheckSuite::known(check_id))
                throw DomainError("unknown check id '" + check_id + "'");
            CheckSuite suite(vopt);
            return run_reports({suite.run(check_id)});
        }
        if (report->parsed()) {
            CheckSuite suite(ropt);
            auto reports = suite.run_suite(report_p, report_parallel);
            if (reports.empty())
                throw DomainError("no checks registered for p=" +
                                  std::to_string(report_p));
            write_report_file(reports, report_out);
            int rc = run_reports(reports);
            std::cout << "report written to " << report_out << "\n";
            return rc;
        }
        if (checks->parsed()) {
            for (const auto& e : CheckSuite::registry())
                std::cout << e.id << "  (p=" << e.p << ")  " << e.brief
                          << "\n";
            return 0;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionError& e) {
        std::cerr << "error: insufficient precision: " << e.what() << "\n";
        return 3;
    } catch (const WindowError& e) {
        std::cerr << "error: insufficient series window: " << e.what() << "\n";
        return 3;
    } catch (const CacheError& e) {
        std::cerr << "error: cache failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
