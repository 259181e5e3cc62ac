// Command line front end. `compute` renders a single object (correlator
// table, open free energy, principal specialization, Riccati coefficient,
// closed free energy, or Painleve expansion) as text, JSON, or LaTeX;
// `verify` runs the identity checking suites and reports the results.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or
// parameter error, 3 internal error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "toprec/cache_io.hpp"
#include "toprec/errors.hpp"
#include "toprec/openfe.hpp"
#include "toprec/recursion.hpp"
#include "toprec/render.hpp"
#include "toprec/verify.hpp"
#include "toprec/wkb.hpp"

namespace {

struct Options {
    std::string target;
    int g = -1;
    int n = -1;
    int m = -1;
    int order = 8;
    std::string fn = "q";
    std::string format = "text";
    std::string coord = "z";
    std::string cache;
    std::string suite = "all";
    int euler_max = 4;
    int gmax = 4;
    std::string out;
    bool json_report = false;
    bool no_timings = false;
};

// The --cache flag wins; otherwise the TOPREC_CACHE environment variable
// names the default cache file; otherwise no cache is used.
std::string resolve_cache(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("TOPREC_CACHE")) return env;
    return {};
}

void load_cache_if_present(toprec::WStore& store, const std::string& path) {
    if (!path.empty() && std::filesystem::exists(path)) toprec::cache_load(store, path);
}

void require_param(bool ok, const std::string& msg) {
    if (!ok) throw toprec::domain_error(msg);
}

// Output of one compute invocation in all three formats; which one is
// printed is decided at the end so every branch fills in the same way.
struct Rendered {
    std::string text;
    std::string latex;
    nlohmann::json json;
};

Rendered render_log_form(const toprec::BigRational& prefactor, const std::string& argument,
                         const std::string& latex) {
    Rendered out;
    out.text = toprec::render_rational(prefactor) + " * log(" + argument + ")";
    out.latex = latex;
    out.json = {{"log", {{"prefactor", toprec::json_rational(prefactor)},
                         {"argument", argument}}}};
    return out;
}

Rendered render_scalar(const toprec::CoeffFrac& c) {
    Rendered out;
    out.text = toprec::render_coeff(c);
    out.latex = toprec::latex_poly(toprec::ZLaurentPoly::monomial(c, 0));
    out.json = toprec::json_coeff(c);
    return out;
}

Rendered render_zpoly(const toprec::ZLaurentPoly& p, toprec::Coord coord) {
    Rendered out;
    out.text = toprec::render_poly(p, coord);
    out.latex = toprec::latex_poly(p, coord);
    out.json = toprec::json_poly(p);
    return out;
}

int run_compute(const Options& opt) {
    const toprec::Coord coord = opt.coord == "x" ? toprec::Coord::X : toprec::Coord::Z;
    const std::string cache = resolve_cache(opt.cache);
    Rendered out;

    if (opt.target == "w" || opt.target == "f-open") {
        require_param(opt.g >= 0 && opt.n >= 1, opt.target + " needs --g >= 0 and --n >= 1");
        require_param(2 * opt.g - 2 + opt.n >= 1,
                      opt.target + " is defined for stable (g, n): 2g - 2 + n >= 1");
        require_param(coord == toprec::Coord::Z,
                      opt.target + " is multivariate and is rendered in the z coordinates only");
        toprec::WStore store;
        load_cache_if_present(store, cache);
        const bool differentials = opt.target == "w";
        const toprec::SymTable table = differentials ? store.get(opt.g, opt.n)
                                                     : toprec::open_f_table(store, opt.g, opt.n);
        out.text = toprec::render_table(table, differentials);
        out.latex = toprec::latex_table(table, differentials);
        out.json = toprec::json_table(table);
        if (!cache.empty()) toprec::cache_save(store, cache);
    } else if (opt.target == "s") {
        require_param(opt.m >= 0, "s needs --m >= 0");
        if (opt.m == 1) {
            // S_1 integrates to a logarithm: -(1/2) log z, or in the base
            // coordinate -(1/4) log(x + 2 q0).
            out = coord == toprec::Coord::X
                      ? render_log_form(toprec::BigRational(-1, 4), "x + 2*q0",
                                        "-\\frac{1}{4} \\log\\left(x + 2 q_0\\right)")
                      : render_log_form(toprec::BigRational(-1, 2), "z", "-\\frac{1}{2} \\log z");
        } else if (opt.m == 0) {
            out = render_zpoly(toprec::curve_phi(), coord);
        } else {
            toprec::WStore store;
            load_cache_if_present(store, cache);
            out = render_zpoly(toprec::s_principal(store, opt.m), coord);
            if (!cache.empty()) toprec::cache_save(store, cache);
        }
    } else if (opt.target == "p") {
        require_param(opt.m >= 0, "p needs --m >= 0");
        toprec::PainleveData pd(std::max(opt.m + 1, 2));
        const toprec::HSeries hp = toprec::riccati_hp(pd);
        const toprec::ZRationalFn pm = hp.coeff(opt.m);
        out.text = toprec::render_fn(pm, coord);
        out.latex = toprec::latex_fn(pm, coord);
        out.json = toprec::json_fn(pm);
    } else if (opt.target == "free-energy") {
        require_param(opt.g >= 0, "free-energy needs --g >= 0");
        if (opt.g == 0) {
            out = render_scalar(toprec::closed_F0());
        } else if (opt.g == 1) {
            // F_1 is logarithmic; only its t-derivative is rational.
            out = render_log_form(toprec::BigRational(-1, 24), "-3 * q0",
                                  "-\\frac{1}{24} \\log\\left(-3 q_0\\right)");
        } else {
            toprec::WStore store;
            load_cache_if_present(store, cache);
            out = render_scalar(toprec::closed_F(opt.g, store));
            if (!cache.empty()) toprec::cache_save(store, cache);
        }
    } else if (opt.target == "painleve") {
        require_param(opt.order >= 0, "painleve needs --order >= 0");
        require_param(coord == toprec::Coord::Z,
                      "painleve expansions are z-free; only the z coordinate is accepted");
        toprec::PainleveData pd(std::max(opt.order + 1, 2));
        toprec::HSeries h = opt.fn == "p" ? pd.p() : opt.fn == "sigma" ? pd.sigma() : pd.q();
        h.truncate_to(opt.order + 1);
        out.text = toprec::render_hseries(h);
        out.latex = toprec::latex_hseries(h);
        out.json = toprec::json_hseries(h);
    }

    if (opt.format == "json") {
        std::cout << out.json.dump() << "\n";
    } else if (opt.format == "latex") {
        std::cout << out.latex << "\n";
    } else {
        // Table and series renderings are already newline terminated.
        std::cout << out.text;
        if (out.text.empty() || out.text.back() != '\n') std::cout << "\n";
    }
    return 0;
}

int run_verify(const Options& opt) {
    const std::string cache = resolve_cache(opt.cache);
    toprec::WStore store;
    load_cache_if_present(store, cache);
    const toprec::Report rep =
        toprec::run_suite(store, opt.suite, opt.order, opt.euler_max, opt.gmax);
    if (!cache.empty()) toprec::cache_save(store, cache);

    const nlohmann::json doc = toprec::report_to_json(rep, !opt.no_timings);
    if (opt.json_report) {
        std::cout << doc.dump(1) << "\n";
    } else {
        std::cout << toprec::report_text(rep);
    }
    if (!opt.out.empty()) {
        std::ofstream f(opt.out, std::ios::trunc);
        if (!f) throw toprec::io_error("cannot open '" + opt.out + "' for writing");
        f << doc.dump(1) << "\n";
        if (!f) throw toprec::io_error("write to '" + opt.out + "' failed");
    }
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Exact Eynard-Orantin recursion and WKB checks for the Painleve I spectral curve"};
    app.require_subcommand(1);

    CLI::App* compute = app.add_subcommand("compute", "Render one object");
    compute->add_option("target", opt.target, "One of: w, f-open, s, p, free-energy, painleve")
        ->required()
        ->check(CLI::IsMember({"w", "f-open", "s", "p", "free-energy", "painleve"}));
    compute->add_option("--g", opt.g, "Genus (w, f-open, free-energy)");
    compute->add_option("--n", opt.n, "Number of variables (w, f-open)");
    compute->add_option("--m", opt.m, "Expansion order (s, p)");
    compute->add_option("--order", opt.order, "Highest h order to print (painleve)")
        ->capture_default_str();
    compute->add_option("--fn", opt.fn, "Painleve expansion to print: q, p, or sigma")
        ->check(CLI::IsMember({"q", "p", "sigma"}))
        ->capture_default_str();
    compute->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    compute->add_option("--coord", opt.coord, "Rendering coordinate")
        ->check(CLI::IsMember({"z", "x"}))
        ->capture_default_str();
    compute->add_option("--cache", opt.cache, "Correlator cache file (default: $TOPREC_CACHE)");

    CLI::App* verify = app.add_subcommand("verify", "Run identity checking suites");
    verify
        ->add_option("suite", opt.suite,
                     "One of: all, quantum-curve, tau, diff-rec, variation, appendix, section4")
        ->check(CLI::IsMember(
            {"all", "quantum-curve", "tau", "diff-rec", "variation", "appendix", "section4"}))
        ->capture_default_str();
    verify->add_option("--order", opt.order, "Highest h order for the quantum curve checks")
        ->capture_default_str();
    verify->add_option("--euler-max", opt.euler_max, "Largest 2g - 2 + n for correlator checks")
        ->capture_default_str();
    verify->add_option("--gmax", opt.gmax, "Largest genus for the tau function checks")
        ->capture_default_str();
    verify->add_option("--cache", opt.cache, "Correlator cache file (default: $TOPREC_CACHE)");
    verify->add_option("--out", opt.out, "Also write the JSON report to this path");
    verify->add_flag("--json", opt.json_report, "Print the JSON report instead of the summary");
    verify->add_flag("--no-timings", opt.no_timings, "Omit timings from the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return compute->parsed() ? run_compute(opt) : run_verify(opt);
    } catch (const toprec::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const toprec::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
