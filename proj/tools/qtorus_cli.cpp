/**
 * qtorus: command-line front end of the quantum-torus library.
 *
 * Subcommands:
 *   element <family> [index]   print one family member (text or JSON)
 *   series  <name> --order N   print the coefficients of a generating series
 *   verify  [...]              run identity suites and report pass/fail
 *
 * Exit codes: 0 all requested work succeeded (and every suite passed),
 * 1 at least one identity suite failed, 2 usage error.
 */

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "qtorus/qtorus.hpp"

namespace {

using qtorus::CheckReport;
using qtorus::EvalScalar;
using qtorus::Families;
using qtorus::QHalfScalar;
using qtorus::Rational;
using qtorus::SuiteBounds;
using qtorus::TorusElement;
using qtorus::TruncatedSeries;
using qtorus::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- element subcommand ----------------------------------------------------

TorusElement build_family_member(const std::string& family, bool index_given,
                                 std::int64_t index, const std::string& route) {
    using F = Families;
    const bool closed = (route == "closed");
    F fb;

    const auto indexless = [&](const char* name) {
        if (index_given)
            throw UsageError(std::string("family ") + name + " takes no index");
    };
    const auto indexed = [&](const char* name) {
        if (!index_given)
            throw UsageError(std::string("family ") + name + " requires an index");
    };

    if (family == "w0") {
        indexless("w0");
        return TorusElement::w(0);
    }
    if (family == "w1") {
        indexless("w1");
        return TorusElement::w(1);
    }
    if (family == "b-delta") {
        indexless("b-delta");
        return F::b_delta();
    }
    if (family == "b-alpha0") {
        indexed("b-alpha0");
        return closed ? F::b_alpha0_closed(index) : fb.b_alpha0_recursive(index);
    }
    if (family == "b-alpha1") {
        indexed("b-alpha1");
        return closed ? F::b_alpha1_closed(index) : fb.b_alpha1_recursive(index);
    }
    if (family == "b-ndelta") {
        indexed("b-ndelta");
        return closed ? F::b_ndelta_closed(index) : fb.b_ndelta_recursive(index);
    }
    if (family == "b1r") {
        indexed("b1r");
        return closed ? F::b1r_closed(index) : fb.b1r_recursive(index);
    }
    if (family == "theta-prime") {
        indexed("theta-prime");
        return closed ? F::theta_prime_closed(index) : fb.theta_prime_definitional(index);
    }
    if (family == "theta") {
        indexed("theta");
        return closed ? F::theta_closed(index) : fb.theta_definitional(index);
    }
    if (family == "h-prime") {
        indexed("h-prime");
        return closed ? F::h_prime_closed(index) : fb.h_prime_from_series(index);
    }
    if (family == "h") {
        indexed("h");
        return closed ? F::h_closed(index) : fb.h_from_series(index);
    }
    throw UsageError("unknown family: " + family);
}

// ---- series subcommand -----------------------------------------------------

TruncatedSeries<TorusElement> build_named_series(const std::string& name,
                                                 std::int64_t order) {
    if (order < 0) throw UsageError("series order must be >= 0");
    const auto n = static_cast<std::size_t>(order);
    if (name == "theta-prime") return qtorus::theta_prime_product_series<QHalfScalar>(n);
    if (name == "theta") return qtorus::theta_product_series<QHalfScalar>(n);
    if (name == "h-prime" || name == "h") {
        TruncatedSeries<TorusElement> s(n);
        for (std::int64_t k = 1; k <= order; ++k)
            s[static_cast<std::size_t>(k)] = name == "h"
                                                 ? Families::h_closed(k)
                                                 : Families::h_prime_closed(k);
        return s;
    }
    throw UsageError("unknown series: " + name);
}

// ---- verify subcommand -----------------------------------------------------

struct VerifySettings {
    std::vector<std::string> suites;  // canonical order, validated
    SuiteBounds bounds;
    std::optional<std::int64_t> max_override;
    std::string max_source = "per-suite defaults";
    int jobs = 1;
    bool fast = false;
    std::string format = "text";
};

std::vector<std::string> resolve_suite_selection(const std::vector<std::string>& requested) {
    const auto& canonical = qtorus::suite_names();
    if (requested.empty()) return canonical;
    for (const auto& name : requested)
        if (std::find(canonical.begin(), canonical.end(), name) == canonical.end())
            throw UsageError("unknown suite: " + name);
    std::vector<std::string> picked;
    for (const auto& name : canonical)
        if (std::find(requested.begin(), requested.end(), name) != requested.end())
            picked.push_back(name);
    return picked;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const auto sep = text.find("..", 1);  // offset 1: LO may start with '-'
    if (sep == std::string::npos)
        throw UsageError("malformed range (expected LO..HI): " + text);
    try {
        std::size_t used = 0;
        const std::int64_t lo = std::stoll(text.substr(0, sep), &used);
        if (used != sep) throw std::invalid_argument("trailing characters");
        const std::string hi_text = text.substr(sep + 2);
        const std::int64_t hi = std::stoll(hi_text, &used);
        if (used != hi_text.size()) throw std::invalid_argument("trailing characters");
        if (lo > hi) throw UsageError("empty range: " + text);
        return {lo, hi};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("malformed range (expected LO..HI): " + text);
    }
}

void apply_uniform_max(SuiteBounds& b, std::int64_t n) {
    b.closed_forms_max = n;
    b.series_order = n;
    b.bracket_max_m = n;
    b.commutation_max = n;
}

/// Run the selected suites, at most `jobs` at a time, and return the reports
/// in selection order regardless of completion order.
template <class S>
std::vector<CheckReport> run_selected(const std::vector<std::string>& names,
                                      const SuiteBounds& bounds, int jobs) {
    std::vector<CheckReport> reports(names.size());
    std::vector<std::exception_ptr> errors(names.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < names.size();) {
            try {
                reports[i] = qtorus::run_suite<S>(names[i], bounds);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto nworkers =
        std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(names.size(), 1));
    if (nworkers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < nworkers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return reports;
}

bool all_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

Rational random_eval_point() {
    static const std::pair<long, long> candidates[] = {
        {7, 5}, {9, 7}, {11, 9}, {13, 8}, {8, 5}, {10, 7}};
    std::mt19937 rng{std::random_device{}()};
    std::uniform_int_distribution<std::size_t> pick(0, std::size(candidates) - 1);
    const auto [num, den] = candidates[pick(rng)];
    return Rational(num, den);
}

std::string rational_text(const Rational& r) {
    return r.str();
}

int run_verify(const VerifySettings& vs) {
    const bool json = vs.format == "json";
    ordered_json out;
    if (json) {
        out["header"] = ordered_json{
            {"suites", vs.suites},
            {"max", vs.max_override ? ordered_json(*vs.max_override) : ordered_json()},
            {"max_source", vs.max_source},
            {"range", {vs.bounds.range_lo, vs.bounds.range_hi}},
            {"jobs", vs.jobs},
            {"fast_preview", vs.fast}};
    } else {
        std::cout << "verify: suites=" << join(vs.suites, ",")
                  << "  max=" << (vs.max_override ? std::to_string(*vs.max_override) : "defaults")
                  << " (" << vs.max_source << ")"
                  << "  range=[" << vs.bounds.range_lo << "," << vs.bounds.range_hi << "]"
                  << "  jobs=" << vs.jobs << "\n";
    }

    if (vs.fast) {
        const Rational s0 = random_eval_point();
        EvalScalar::set_eval_point(s0);
        bool preview_ok = true;
        std::string preview_error;
        std::vector<CheckReport> preview;
        try {
            preview = run_selected<EvalScalar>(vs.suites, vs.bounds, vs.jobs);
        } catch (const std::domain_error& e) {
            // A scalar happened to vanish at the sample point; the preview is
            // inconclusive and the exact pass below remains authoritative.
            preview_ok = false;
            preview_error = e.what();
        }
        if (json) {
            out["header"]["eval_point"] = rational_text(s0);
            ordered_json pj = ordered_json::array();
            for (const auto& r : preview) pj.push_back(qtorus::report_json(r));
            out["preview_reports"] = std::move(pj);
            if (!preview_ok) out["preview_error"] = preview_error;
        } else {
            std::cout << "preview at s = " << rational_text(s0) << ":\n";
            if (preview_ok)
                for (const auto& r : preview)
                    std::cout << "  " << qtorus::report_text(r) << "\n";
            else
                std::cout << "  inconclusive (" << preview_error << ")\n";
            std::cout << "exact pass:\n";
        }
    }

    const auto reports = run_selected<QHalfScalar>(vs.suites, vs.bounds, vs.jobs);
    const bool pass = all_pass(reports);
    if (json) {
        ordered_json rj = ordered_json::array();
        for (const auto& r : reports) rj.push_back(qtorus::report_json(r));
        out["reports"] = std::move(rj);
        out["overall"] = pass ? "pass" : "fail";
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports)
            std::cout << (vs.fast ? "  " : "") << qtorus::report_text(r) << "\n";
        std::cout << "overall: " << (pass ? "pass" : "FAIL") << "\n";
    }
    return pass ? kExitPass : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact symbolic computation in the quantum torus "
        "(x·y = q²·y·x over Q(q^(1/2)))"};
    app.require_subcommand(1);

    // element
    std::string family;
    std::int64_t index = 0;
    std::string el_route = "closed";
    std::string el_format = "text";
    auto* element = app.add_subcommand("element", "Print one family member");
    element->add_option("family", family,
                        "w0, w1, b-delta, b-alpha0, b-alpha1, b-ndelta, b1r, "
                        "theta-prime, theta, h-prime, h")
        ->required();
    auto* index_opt = element->add_option("index", index, "family index (integer)");
    element->add_option("--route", el_route, "construction route")
        ->check(CLI::IsMember({"recursive", "closed"}))
        ->capture_default_str();
    element->add_option("--format", el_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // series
    std::string series_name;
    std::int64_t series_order = 0;
    std::string se_format = "text";
    auto* series = app.add_subcommand("series", "Print generating-series coefficients");
    series->add_option("name", series_name, "theta, theta-prime, h, h-prime")->required();
    series->add_option("--order", series_order, "truncation order")->required();
    series->add_option("--format", se_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // verify
    std::vector<std::string> suite_flags;
    std::int64_t max_flag = 0;
    std::string range_flag;
    std::string ve_format = "text";
    int jobs = 1;
    bool fast = false;
    auto* verify = app.add_subcommand("verify", "Run identity suites");
    verify->add_option("--suite", suite_flags,
                       "suite name (repeatable); default: all suites");
    auto* max_opt = verify->add_option(
        "--max", max_flag,
        "uniform bound overriding each selected suite's primary default "
        "(also settable via QTORUS_MAX)");
    verify->add_option("--range", range_flag,
                       "r,s window for the bracket suites, as LO..HI (default -3..3)");
    verify->add_option("--format", ve_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    verify->add_option("--jobs", jobs, "max concurrently running suites")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_flag("--fast", fast,
                     "numeric preview at a random rational point before the "
                     "authoritative exact pass");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (element->parsed()) {
            const auto e = build_family_member(family, index_opt->count() > 0, index, el_route);
            if (el_format == "json")
                std::cout << qtorus::element_json(e).dump(2) << "\n";
            else
                std::cout << e.to_text() << "\n";
            return kExitPass;
        }

        if (series->parsed()) {
            const auto s = build_named_series(series_name, series_order);
            if (se_format == "json") {
                const auto sj = qtorus::series_json(s);
                std::cout << ordered_json{{"series", series_name},
                                          {"order", sj.at("order")},
                                          {"coeffs", sj.at("coeffs")}}
                                 .dump(2)
                          << "\n";
            } else {
                for (std::size_t k = 0; k <= s.order(); ++k)
                    std::cout << "t^" << k << ": " << s[k].to_text() << "\n";
            }
            return kExitPass;
        }

        VerifySettings vs;
        vs.suites = resolve_suite_selection(suite_flags);
        if (const char* env = std::getenv("QTORUS_MAX"); env && *env) {
            try {
                std::size_t used = 0;
                const std::int64_t n = std::stoll(env, &used);
                if (used != std::string(env).size())
                    throw std::invalid_argument("trailing characters");
                vs.max_override = n;
                vs.max_source = "QTORUS_MAX environment variable";
            } catch (const std::exception&) {
                throw UsageError(std::string("malformed QTORUS_MAX value: ") + env);
            }
        }
        if (max_opt->count() > 0) {
            vs.max_override = max_flag;
            vs.max_source = "--max flag";
        }
        if (vs.max_override) apply_uniform_max(vs.bounds, *vs.max_override);
        if (!range_flag.empty()) {
            const auto [lo, hi] = parse_range(range_flag);
            vs.bounds.range_lo = lo;
            vs.bounds.range_hi = hi;
        }
        vs.jobs = jobs;
        vs.fast = fast;
        vs.format = ve_format;
        return run_verify(vs);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
