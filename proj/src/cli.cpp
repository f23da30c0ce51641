#include "chebgf/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "chebgf/verify.hpp"

namespace chebgf::cli {

nlohmann::json bipoly_to_json(const BiPoly& p) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& a : c.coeffs()) row.push_back(a.get_str());
        rows.push_back(std::move(row));
    }
    return {{"t_coeffs", std::move(rows)}};
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
    std::vector<UniPoly> rows;
    for (const auto& row : j.at("t_coeffs")) {
        std::vector<Rational> cs;
        for (const auto& a : row) {
            Rational r(a.get<std::string>());
            r.canonicalize();
            cs.push_back(std::move(r));
        }
        rows.emplace_back(std::move(cs));
    }
    return BiPoly(std::move(rows));
}

nlohmann::json fs_to_json(unsigned s, const RatFun& f) {
    return {{"s", s}, {"numerator", bipoly_to_json(f.numerator())}, {"denominator", bipoly_to_json(f.denominator())}};
}

namespace {

enum class Format { kPretty, kExpanded, kJson };

const std::map<std::string, Format> kFormats{{"pretty", Format::kPretty}, {"expanded", Format::kExpanded}, {"json", Format::kJson}};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int cmd_fs(unsigned s, unsigned max_s, Format format, unsigned threads, std::ostream& out) {
    if (s < 1 || s > max_s) throw UsageError("--s must be in [1, " + std::to_string(max_s) + "]");
    RatFun f = compute_Fs(s, {threads, PowerSubMethod::kNorm});
    switch (format) {
        case Format::kJson:
            out << fs_to_json(s, f).dump() << "\n";
            break;
        case Format::kExpanded:
            out << "numerator: " << to_string(f.numerator()) << "\n";
            out << "denominator: " << to_string(f.denominator()) << "\n";
            break;
        case Format::kPretty:
            out << "numerator: " << to_collected_string(f.numerator()) << "\n";
            out << "denominator: " << to_collected_string(f.denominator()) << "\n";
            break;
    }
    return kExitOk;
}

int cmd_hpoly(unsigned s, unsigned m, Format format, std::ostream& out) {
    if (s < 1) throw UsageError("--s must be positive");
    UniPoly h = hms_poly(s, m);
    if (format == Format::kJson) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : h.coeffs()) cs.push_back(c.get_str());
        out << nlohmann::json{{"s", s}, {"m", m}, {"coeffs", cs}}.dump() << "\n";
    } else {
        out << to_string(h) << "\n";
    }
    return kExitOk;
}

int cmd_expand(unsigned s, unsigned terms, unsigned max_s, std::ostream& out, std::ostream& err) {
    if (s < 1 || s > max_s) throw UsageError("--s must be in [1, " + std::to_string(max_s) + "]");
    auto series = series_expand_ratfun(compute_Fs(s), terms);
    auto direct = terms == 0 ? HFamily{s, {}} : h_family(s, terms - 1);
    int code = kExitOk;
    for (unsigned m = 0; m < terms; ++m) {
        out << "H_" << m << " = " << to_string(series[m]) << "\n";
        if (series[m] != direct.polys[m]) {
            err << "mismatch at m=" << m << ": resultant route gives " << to_string(direct.polys[m]) << "\n";
            code = kExitVerifyFailed;
        }
    }
    return code;
}

int cmd_verify(bool all, const std::vector<std::string>& suites, const SuiteRanges& ranges, bool json, std::ostream& out) {
    std::vector<std::string> names = all || suites.empty() ? suite_names() : suites;
    for (const auto& n : names) {
        if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
            throw UsageError("unknown suite '" + n + "'");
    }
    std::vector<CheckReport> reports;
    for (const auto& n : names) reports.push_back(run_suite(n, ranges));
    bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) out << to_text(r) << "\n";
        out << (ok ? "all checks passed" : "verification FAILED") << "\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(unsigned s_max, unsigned max_s, bool csv, unsigned threads, std::ostream& out) {
    if (s_max < 1 || s_max > max_s) throw UsageError("--s-max must be in [1, " + std::to_string(max_s) + "]");
    if (csv) out << "s,seconds,deg_t_den,deg_x_den,deg_t_num,deg_x_num\n";
    else out << std::left << std::setw(4) << "s" << std::setw(14) << "seconds" << "deg_t(D)  deg_x(D)\n";
    for (unsigned s = 1; s <= s_max; ++s) {
        auto t0 = std::chrono::steady_clock::now();
        RatFun f = compute_Fs(s, {threads, PowerSubMethod::kNorm});
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (csv) {
            out << s << "," << std::setprecision(6) << secs << "," << f.denominator().degree() << "," << inner_degree(f.denominator()) << ","
                << f.numerator().degree() << "," << inner_degree(f.numerator()) << "\n";
        } else {
            std::ostringstream t;
            t << std::fixed << std::setprecision(4) << secs;
            out << std::left << std::setw(4) << s << std::setw(14) << t.str() << std::setw(10) << f.denominator().degree()
                << inner_degree(f.denominator()) << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational generating functions of the Chebyshev-like families H_m^(s)(x)", "chebgf"};
    app.require_subcommand(1);

    unsigned max_s = 8;
    unsigned threads = 1;
    app.add_option("--max-s", max_s, "Upper bound accepted for --s")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads for independent resultants")->check(CLI::PositiveNumber);

    auto* fs = app.add_subcommand("fs", "Print F_s(x,t) = N_s/D_s in canonical form");
    unsigned fs_s = 0;
    std::string fs_format = "pretty";
    fs->add_option("--s", fs_s, "Power s >= 1")->required();
    fs->add_option("--format", fs_format, "pretty | expanded | json")->check(CLI::IsMember({"pretty", "expanded", "json"}));

    auto* hp = app.add_subcommand("hpoly", "Print H_m^(s)(x)");
    unsigned hp_s = 0, hp_m = 0;
    std::string hp_format = "pretty";
    hp->add_option("--s", hp_s, "Power s >= 1")->required();
    hp->add_option("--m", hp_m, "Index m >= 0")->required();
    hp->add_option("--format", hp_format, "pretty | json")->check(CLI::IsMember({"pretty", "json"}));

    auto* ex = app.add_subcommand("expand", "Series coefficients of F_s, cross-checked against the resultant route");
    unsigned ex_s = 0, ex_terms = 8;
    ex->add_option("--s", ex_s, "Power s >= 1")->required();
    ex->add_option("--terms", ex_terms, "Number of coefficients")->capture_default_str();

    auto* ve = app.add_subcommand("verify", "Run verification suites");
    bool ve_all = false, ve_json = false;
    std::vector<std::string> ve_suites;
    SuiteRanges ranges;
    unsigned ve_s = 0, ve_m = 0;
    ve->add_flag("--all", ve_all, "Run every suite with default ranges");
    ve->add_option("--suite", ve_suites, "Suite name (repeatable)");
    auto* ve_s_opt = ve->add_option("--s-max", ve_s, "Override the s range");
    auto* ve_m_opt = ve->add_option("--m-max", ve_m, "Override the m range");
    ve->add_option("--tol", ranges.rel_tol, "Relative tolerance for floating-point checks")->capture_default_str();
    ve->add_flag("--json", ve_json, "JSON records instead of text");

    auto* be = app.add_subcommand("bench", "Time compute_Fs for s = 1..s-max");
    unsigned be_s = 6;
    bool be_csv = false;
    be->add_option("--s-max", be_s, "Largest s")->capture_default_str();
    be->add_flag("--csv", be_csv, "CSV output");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (fs->parsed()) return cmd_fs(fs_s, max_s, kFormats.at(fs_format), threads, out);
        if (hp->parsed()) return cmd_hpoly(hp_s, hp_m, kFormats.at(hp_format), out);
        if (ex->parsed()) return cmd_expand(ex_s, ex_terms, max_s, out, err);
        if (ve->parsed()) {
            if (*ve_s_opt) ranges.s_max = ve_s;
            if (*ve_m_opt) ranges.m_max = ve_m;
            return cmd_verify(ve_all, ve_suites, ranges, ve_json, out);
        }
        if (be->parsed()) return cmd_bench(be_s, max_s, be_csv, threads, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace chebgf::cli
