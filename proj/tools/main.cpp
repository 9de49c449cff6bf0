#include "report.hpp"
#include "verify_suites.hpp"

#include "hartogs/kernel.hpp"
#include "hartogs/regularity.hpp"

#include <CLI11.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hartogs;

namespace {

struct Common {
    int k = 1;
    int n = 1;
    uint64_t seed = 42;
    std::size_t samples = 1000000;
    std::string format = "json";
    std::string output;
    int threads = 0; // 0 = auto (environment override, else OpenMP default)
};

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--k", c.k, "fiber exponent k of |z|^k < |w| < 1")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--n", c.n, "base dimension n (domain sits in C^{n+1})")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    sub->add_option("--samples", c.samples, "Monte Carlo sample count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "latex"}))
        ->capture_default_str();
    sub->add_option("--output", c.output, "write the report to this file instead of stdout");
    sub->add_option("--threads", c.threads,
                    "worker threads for the scans (0 = HARTOGS_THREADS env or all cores)")
        ->capture_default_str();
}

void apply_threads(int threads)
{
    if (threads == 0) {
        if (const char* env = std::getenv("HARTOGS_THREADS"))
            threads = std::atoi(env);
    }
#ifdef _OPENMP
    if (threads > 0)
        omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

nlohmann::json base_config(const char* subcommand, const Common& c)
{
    nlohmann::json cfg;
    cfg["subcommand"] = subcommand;
    cfg["k"] = c.k;
    cfg["n"] = c.n;
    cfg["seed"] = c.seed;
    cfg["samples"] = c.samples;
    cfg["format"] = c.format;
    cfg["output"] = c.output.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.output);
    return cfg;
}

Complex parse_complex(const std::string& s)
{
    std::istringstream is(s);
    double re = 0, im = 0;
    char comma = 0;
    if (!(is >> re))
        throw std::invalid_argument("cannot parse complex number: " + s);
    if (is >> comma) {
        if (comma != ',' || !(is >> im))
            throw std::invalid_argument("cannot parse complex number: " + s);
    }
    return {re, im};
}

// "1.2:4.5:0.1" with exact decimal arithmetic so classification thresholds
// like 4/3 and 4 are hit exactly
struct RationalGrid {
    Rational lo, hi, step;
};

Rational parse_decimal(const std::string& s)
{
    // digit-by-digit: cpp_int's string constructor would read a leading
    // zero (as in the fraction digits of "0.25") as an octal prefix
    bool neg = !s.empty() && s[0] == '-';
    std::string body = neg ? s.substr(1) : s;
    std::size_t dot = body.find('.');
    std::string digits =
        dot == std::string::npos ? body : body.substr(0, dot) + body.substr(dot + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("cannot parse grid number: " + s);
    boost::multiprecision::cpp_int num = 0;
    for (char ch : digits)
        num = num * 10 + (ch - '0');
    boost::multiprecision::cpp_int den = 1;
    if (dot != std::string::npos)
        for (std::size_t i = dot + 1; i < body.size(); ++i)
            den *= 10;
    return Rational(neg ? -num : num, den);
}

RationalGrid parse_grid(const std::string& spec)
{
    std::size_t c1 = spec.find(':'), c2 = spec.rfind(':');
    if (c1 == std::string::npos || c2 == c1)
        throw std::invalid_argument("grid must be lo:hi:step, got " + spec);
    RationalGrid g{parse_decimal(spec.substr(0, c1)),
                   parse_decimal(spec.substr(c1 + 1, c2 - c1 - 1)),
                   parse_decimal(spec.substr(c2 + 1))};
    if (g.step <= 0 || g.hi < g.lo)
        throw std::invalid_argument("grid must have positive step and hi >= lo");
    return g;
}

Point canonical_point(const DomainParams& d, double rho_w, double phase)
{
    Point p;
    p.w = std::polar(rho_w, phase);
    double rz = std::pow(0.5 * rho_w, 1.0 / d.k) / std::sqrt(double(d.n));
    p.z.resize(d.n);
    for (int j = 0; j < d.n; ++j)
        p.z[j] = std::polar(rz, phase + 0.4 * (j + 1));
    return p;
}

std::string fmt(double x)
{
    return nlohmann::json(x).dump();
}

// ------------------------------------------------------------- subcommands

int cmd_kernel(const Common& c, const std::string& a_str, const std::string& b_str,
               const std::string& method, int truncation)
{
    DomainParams d{c.n, c.k};
    validate(d);
    Complex a = parse_complex(a_str), b = parse_complex(b_str);

    cli::Report rep;
    rep.config = base_config("kernel", c);
    rep.config["a"] = a_str;
    rep.config["b"] = b_str;
    rep.config["method"] = method;
    rep.config["truncation"] = truncation;

    Complex value;
    double est_error = 0;
    if (method == "closed") {
        value = kernel_closed_ab(d, a, b);
    } else {
        KernelValue kv = kernel_series_ab(d, a, b, truncation, truncation);
        value = kv.value;
        est_error = kv.est_error;
    }

    rep.rows.push_back({"B.re", "ok", value.real(), std::nullopt, std::nullopt, std::nullopt,
                        method});
    rep.rows.push_back({"B.im", "ok", value.imag(), std::nullopt, std::nullopt, std::nullopt,
                        method});
    if (method == "series")
        rep.rows.push_back({"truncation_tail_bound", "ok", est_error, std::nullopt,
                            std::nullopt, std::nullopt, ""});
    return cli::emit(rep, c.format, c.output);
}

int cmd_coeffs(const Common& c, int l_filter)
{
    DomainParams d{c.n, c.k};
    validate(d);

    cli::Report rep;
    rep.config = base_config("coeffs", c);
    rep.config["l"] = l_filter < 0 ? nlohmann::json(nullptr) : nlohmann::json(l_filter);

    for (int l = 0; l <= c.n + 1; ++l) {
        if (l_filter >= 0 && l != l_filter)
            continue;
        IntPolynomial g = g_polynomial(l, d);
        if (g.is_zero()) {
            std::ostringstream name;
            name << "g[l=" << l << "]";
            rep.rows.push_back({name.str(), "ok", 0.0, std::nullopt, std::nullopt,
                                std::nullopt, "zero polynomial"});
            continue;
        }
        for (std::size_t t = 0; t < g.coeffs.size(); ++t) {
            std::ostringstream name;
            name << "g[l=" << l << "] b^" << t;
            rep.rows.push_back({name.str(), "ok", static_cast<double>(g.coeffs[t]),
                                std::nullopt, std::nullopt, std::nullopt,
                                g.coeffs[t].str()});
        }
    }
    return cli::emit(rep, c.format, c.output);
}

int cmd_counts(const Common& c)
{
    cli::Report rep;
    rep.config = base_config("counts", c);
    for (long l = 0; l <= 2L * c.k - 2; ++l) {
        std::ostringstream name;
        name << "f(" << l << ")";
        rep.rows.push_back({name.str(), "ok", double(count_f(l, c.k)), std::nullopt,
                            std::nullopt, std::nullopt, std::to_string(count_f(l, c.k))});
    }
    for (long l = 0; l <= 3L * c.k - 3; ++l) {
        std::ostringstream name;
        name << "h(" << l << ")";
        rep.rows.push_back({name.str(), "ok", double(count_h(l, c.k)), std::nullopt,
                            std::nullopt, std::nullopt, std::to_string(count_h(l, c.k))});
    }
    return cli::emit(rep, c.format, c.output);
}

int cmd_verify(const Common& c, const std::string& suite)
{
    cli::Report rep;
    rep.config = base_config("verify", c);
    rep.config["suite"] = suite;
    rep.rows = cli::run_suite(suite, {c.k, c.n, c.seed, c.samples});
    cli::emit(rep, c.format, c.output);
    return rep.any_fail() ? 1 : 0;
}

int cmd_lp_scan(const Common& c, const std::string& grid_spec)
{
    RationalGrid g = parse_grid(grid_spec);
    TestFunctionSpec spec = test_function(c.k, c.n);

    cli::Report rep;
    rep.config = base_config("lp-scan", c);
    rep.config["p_grid"] = grid_spec;

    for (Rational p = g.lo; p <= g.hi; p += g.step) {
        double pd = static_cast<double>(p);
        cli::Row row;
        row.name = "p=" + fmt(pd);
        row.status = "ok";
        if (p <= 1) {
            row.detail = "outside [1,inf)";
        } else {
            row.detail = lp_bounded(c.k, c.n, p) ? "bounded" : "unbounded";
            double norm = truncated_lp_norm(c.k, c.n, spec, pd, 1e-3);
            if (std::isfinite(norm))
                row.value = norm; // |w| > 1e-3 part of the p-th power norm
        }
        rep.rows.push_back(std::move(row));
    }
    return cli::emit(rep, c.format, c.output);
}

int cmd_schur_scan(const Common& c, const std::string& grid_spec)
{
    double lo = schur_eps_min(c.k, c.n), hi = schur_eps_max(c.k, c.n);

    std::vector<double> eps_values;
    if (grid_spec == "auto") {
        for (double frac : {0.0, 0.25, 0.5, 0.75, 0.95})
            eps_values.push_back(lo + frac * (hi - lo));
    } else {
        RationalGrid g = parse_grid(grid_spec);
        for (Rational e = g.lo; e <= g.hi; e += g.step)
            eps_values.push_back(static_cast<double>(e));
    }

    cli::Report rep;
    rep.config = base_config("schur-scan", c);
    rep.config["eps_grid"] = grid_spec;

    Point at = canonical_point({c.n, c.k}, 0.55, 0.3);
    int i = 0;
    for (double eps : eps_values) {
        cli::Row row;
        row.name = "eps=" + fmt(eps);
        row.status = "ok";
        if (eps < lo || eps >= hi) {
            row.detail = "outside admissible range";
        } else {
            IntegralEstimate r = schur_ratio(c.k, c.n, eps, at, c.samples, c.seed + 13 * i);
            row.value = r.value.real();
            row.std_error = r.std_error;
            row.detail = "sample estimate of the weighted kernel integral ratio";
        }
        rep.rows.push_back(std::move(row));
        ++i;
    }
    return cli::emit(rep, c.format, c.output);
}

int cmd_sample(const Common& c, std::size_t count)
{
    DomainParams d{c.n, c.k};
    validate(d);
    std::vector<Point> pts = sample_uniform(d, count, c.seed);

    cli::Report rep;
    rep.config = base_config("sample", c);
    rep.config["count"] = count;

    bool all_inside = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        all_inside = all_inside && contains(d, pts[i]);
        std::ostringstream detail;
        for (int j = 0; j < c.n; ++j)
            detail << "z" << (j + 1) << "=" << fmt(pts[i].z[j].real()) << "+"
                   << fmt(pts[i].z[j].imag()) << "i;";
        detail << "w=" << fmt(pts[i].w.real()) << "+" << fmt(pts[i].w.imag()) << "i";
        rep.rows.push_back({"point[" + std::to_string(i) + "]", "ok", std::abs(pts[i].w),
                            std::nullopt, std::nullopt, std::nullopt, detail.str()});
    }
    rep.rows.push_back({"all points inside domain", all_inside ? "pass" : "fail",
                        double(all_inside ? 1 : 0), 1.0, 0.0, std::nullopt, ""});
    cli::emit(rep, c.format, c.output);
    return rep.any_fail() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bergman kernels of the domains |z|^k < |w| < 1 and the L^p mapping "
                 "interval of their projection: evaluation, exact tables, and "
                 "seeded verification scans"};
    app.require_subcommand(1);

    Common common;

    // kernel
    auto* kernel = app.add_subcommand("kernel", "evaluate the kernel at paired arguments "
                                                "a = w conj(t), b = <z, s>");
    std::string a_str = "0.3,0.1", b_str = "0.2,0.0", method = "closed";
    int truncation = 128;
    add_common(kernel, common);
    kernel->add_option("--a", a_str, "pairing a as re,im")->capture_default_str();
    kernel->add_option("--b", b_str, "pairing b as re,im")->capture_default_str();
    kernel->add_option("--method", method, "evaluation route")
        ->check(CLI::IsMember({"closed", "series"}))
        ->capture_default_str();
    kernel->add_option("--truncation", truncation, "series truncation order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "exact numerator coefficient polynomials");
    int l_filter = -1;
    add_common(coeffs, common);
    coeffs->add_option("--l", l_filter, "restrict to one polynomial index l in 0..n+1");

    // counts
    auto* counts = app.add_subcommand("counts", "pair/triple counting tables f and h");
    add_common(counts, common);

    // verify
    auto* verify = app.add_subcommand("verify", "run seeded verification suites");
    std::string suite = "all";
    add_common(verify, common);
    {
        std::vector<std::string> names = cli::suite_names();
        names.push_back("all");
        verify->add_option("--suite", suite, "suite name")
            ->check(CLI::IsMember(names))
            ->capture_default_str();
    }

    // lp-scan
    auto* lp_scan = app.add_subcommand("lp-scan", "classify L^p boundedness over a p grid");
    std::string p_grid = "1.2:4.5:0.1";
    add_common(lp_scan, common);
    lp_scan->add_option("--p-grid", p_grid, "grid as lo:hi:step (exact decimals)")
        ->capture_default_str();

    // schur-scan
    auto* schur_scan = app.add_subcommand("schur-scan",
                                          "Schur-ratio estimates over an epsilon grid");
    std::string eps_grid = "auto";
    add_common(schur_scan, common);
    schur_scan->add_option("--eps-grid", eps_grid, "grid as lo:hi:step, or 'auto'")
        ->capture_default_str();

    // sample
    auto* sample = app.add_subcommand("sample", "draw uniform points from the domain");
    std::size_t count = 10;
    add_common(sample, common);
    sample->add_option("--count", count, "number of points to emit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    apply_threads(common.threads);

    try {
        if (kernel->parsed())
            return cmd_kernel(common, a_str, b_str, method, truncation);
        if (coeffs->parsed())
            return cmd_coeffs(common, l_filter);
        if (counts->parsed())
            return cmd_counts(common);
        if (verify->parsed())
            return cmd_verify(common, suite);
        if (lp_scan->parsed())
            return cmd_lp_scan(common, p_grid);
        if (schur_scan->parsed())
            return cmd_schur_scan(common, eps_grid);
        if (sample->parsed())
            return cmd_sample(common, count);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
