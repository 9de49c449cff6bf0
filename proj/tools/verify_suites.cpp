#include "verify_suites.hpp"

#include "hartogs/regularity.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

using namespace hartogs;

namespace cli {

namespace {

Row check(std::string name, double value, double expected, double tolerance, std::string detail = {})
{
    bool ok = std::isfinite(value) && std::abs(value - expected) <= tolerance;
    return {std::move(name), ok ? "pass" : "fail", value, expected, tolerance,
            std::nullopt, std::move(detail)};
}

Row check_below(std::string name, double value, double bound, std::string detail = {})
{
    bool ok = std::isfinite(value) && value <= bound;
    return {std::move(name), ok ? "pass" : "fail", value, 0.0, bound,
            std::nullopt, std::move(detail)};
}

// deterministic interior point away from both boundary pieces
Point interior_point(const DomainParams& d, double rho_w, double phase)
{
    Point p;
    p.w = std::polar(rho_w, phase);
    double rz = std::pow(0.5 * rho_w, 1.0 / d.k) / std::sqrt(double(d.n));
    p.z.resize(d.n);
    for (int j = 0; j < d.n; ++j)
        p.z[j] = std::polar(rz, phase + 0.4 * (j + 1));
    return p;
}

std::vector<Row> suite_combinatorics(const VerifyOptions& opt)
{
    std::vector<Row> rows;
    const int k = opt.k, n = opt.n;

    long worst_f = 0, worst_h = 0, sum_f = 0, sum_h = 0;
    for (long l = -2; l <= 3L * k; ++l) {
        long f = 0, h = 0;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                if (a + b == l)
                    ++f;
                for (int c = 0; c < k; ++c)
                    if (a + b + c == l)
                        ++h;
            }
        worst_f = std::max(worst_f, std::labs(count_f(l, k) - f));
        worst_h = std::max(worst_h, std::labs(count_h(l, k) - h));
        sum_f += f;
        sum_h += h;
    }
    rows.push_back(check("count_f equals enumeration", double(worst_f), 0, 0));
    rows.push_back(check("count_h equals enumeration", double(worst_h), 0, 0));
    rows.push_back(check("sum of f is k^2", double(sum_f), double(k) * k, 0));
    rows.push_back(check("sum of h is k^3", double(sum_h), double(k) * k * k, 0));

    // total coefficient mass over all l equals k^{n+2}, exact: the (n+3)-fold
    // tuple sums hit one residue class mod k, so exactly 1/k of all tuples
    BigInt total = 0;
    for (int l = 0; l <= n + 1; ++l)
        for (const BigInt& c : g_polynomial(l, {n, k}).coeffs)
            total += c;
    BigInt expect = 1;
    for (int i = 0; i < n + 2; ++i)
        expect *= k;
    rows.push_back(check("numerator coefficient mass is k^(n+2)",
                         total == expect ? 1 : 0, 1, 0));
    return rows;
}

std::vector<Row> suite_kernel(const VerifyOptions& opt)
{
    std::vector<Row> rows;
    DomainParams d{opt.n, opt.k};
    Sampler gen(d, opt.seed);

    auto contraction_safe_pair = [&]() {
        for (;;) {
            Point p = gen.next(), q = gen.next();
            PairedArgs ab = pair(p, q);
            double ra = std::abs(ab.a);
            if (ra < 0.05 || ra > 0.8)
                continue;
            if (std::abs(ab.b) > 0.8 * std::pow(ra, 1.0 / d.k))
                continue;
            return std::make_pair(p, q);
        }
    };

    double worst_series = 0, worst_herm = 0, worst_diag = 0;
    for (int i = 0; i < 10; ++i) {
        auto [p, q] = contraction_safe_pair();
        Complex c = kernel_closed(d, p, q).value;
        Complex s = kernel_series(d, p, q, 128, 128).value;
        worst_series = std::max(worst_series, std::abs(s - c) / std::abs(c));
        Complex ct = kernel_closed(d, q, p).value;
        worst_herm = std::max(worst_herm, std::abs(std::conj(ct) - c) / std::abs(c));
        Complex diag = kernel_closed(d, p, p).value;
        worst_diag = std::max(worst_diag,
                              diag.real() > 0 ? std::abs(diag.imag()) / diag.real() : 1.0);
    }
    rows.push_back(check_below("series vs closed form, relative", worst_series, 1e-8,
                               "10 contraction-safe pairs, truncation 128"));
    rows.push_back(check_below("Hermitian symmetry, relative", worst_herm, 1e-13));
    rows.push_back(check_below("diagonal positivity, |Im|/Re", worst_diag, 1e-12));

    if (opt.k == 1) {
        double worst = 0;
        for (int i = 0; i < 10; ++i) {
            Point p = gen.next(), q = gen.next();
            Complex c = kernel_closed(d, p, q).value;
            worst = std::max(worst,
                             std::abs(kernel_k1_closed(opt.n, p, q).value - c) / std::abs(c));
        }
        rows.push_back(check_below("k=1 product-domain reduction, relative", worst, 1e-13));
    }
    if (opt.n == 2) {
        double worst = 0;
        for (int i = 0; i < 10; ++i) {
            Point p = gen.next(), q = gen.next();
            Complex c = kernel_closed(d, p, q).value;
            worst = std::max(worst,
                             std::abs(kernel_n2_closed(opt.k, p, q).value - c) / std::abs(c));
        }
        rows.push_back(check_below("n=2 special-case form, relative", worst, 1e-12));
    }
    if (opt.k >= 2) {
        Sampler gen1({opt.n, 1}, opt.seed ^ 0x9e3779b97f4a7c15ULL);
        double worst = 0;
        for (int i = 0; i < 10; ++i)
            worst = std::max(worst,
                             bell_identity_residual(opt.k, opt.n, gen1.next(), gen.next()));
        rows.push_back(check_below("transformation identity residual", worst, 1e-10));
    }
    return rows;
}

std::vector<Row> suite_norms(const VerifyOptions& opt)
{
    std::vector<Row> rows;
    DomainParams d{opt.n, opt.k};

    // non-constant monomials only: (0,0) would integrate the constant 1,
    // whose sample variance is exactly zero
    struct Cell {
        long p1, q;
    } cells[] = {{0, 1}, {1, 0}};
    int i = 0;
    for (const Cell& c : cells) {
        mc::Estimate est = mc::integrate(
            d,
            [&](const Point& y) {
                double f = 1;
                for (long j = 0; j < c.p1; ++j)
                    f *= std::norm(y.z[0]);
                double w2 = std::norm(y.w);
                for (long j = 0; j < c.q; ++j)
                    f *= w2;
                return Complex(f);
            },
            opt.samples, opt.seed + 11 * i++);
        double truth = normalizing_constant(d, {c.p1, c.q});
        double diff = std::abs(est.value.real() - truth);
        double sig = diff == 0 ? 0 : diff / est.std_error;
        std::ostringstream name;
        name << "monomial norm vs MC, (p1,q)=(" << c.p1 << "," << c.q << ")";
        Row r = check_below(name.str(), sig, 3.5, "deviation in standard errors");
        r.std_error = est.std_error;
        rows.push_back(std::move(r));
    }

    mc::Estimate orth = mc::integrate(
        d, [](const Point& y) { return y.z[0] * std::conj(y.w); }, opt.samples, opt.seed + 97);
    rows.push_back(check_below("monomial orthogonality <z1, w> / sigma",
                               std::abs(orth.value) / orth.std_error, 3.5));
    return rows;
}

std::vector<Row> suite_reproduce(const VerifyOptions& opt)
{
    std::vector<Row> rows;
    DomainParams d{opt.n, opt.k};
    Point at = interior_point(d, 0.55, 0.3);

    std::vector<std::pair<std::vector<long>, long>> monomials = {
        {std::vector<long>(opt.n, 0), 0},
        {[&] { std::vector<long> p(opt.n, 0); p[0] = 1; return p; }(), 0},
        {std::vector<long>(opt.n, 0), 1},
    };
    int i = 0;
    for (const auto& [p, q] : monomials) {
        ReproduceResult r = reproduce_check(d, p, q, at, opt.samples, opt.seed + 31 * i++);
        double sig = std::abs(r.estimate - r.truth) / r.std_error;
        std::ostringstream name;
        name << "reproducing property, monomial p1=" << p[0] << " q=" << q;
        Row row = check_below(name.str(), sig, 3.5, "deviation in standard errors");
        row.std_error = r.std_error;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Row> suite_interval(const VerifyOptions& opt)
{
    std::vector<Row> rows;
    const int k = opt.k, n = opt.n;
    CriticalInterval iv = critical_interval(k, n);
    CriticalInterval sv = schur_to_interval(k, n);
    rows.push_back(check("Schur route equals critical interval",
                         (sv.lower == iv.lower && sv.upper == iv.upper) ? 1 : 0, 1, 0));
    rows.push_back(check("divergence crossing equals upper endpoint",
                         divergence_crossing(k, n, test_function(k, n)) == iv.upper ? 1 : 0,
                         1, 0));
    rows.push_back(check("endpoints Holder conjugate",
                         holder_conjugate(iv.lower) == iv.upper ? 1 : 0, 1, 0));
    rows.push_back(check("lower endpoint", static_cast<double>(iv.lower),
                         double(2 * k + 2 * n) / (k + n + 1), 1e-15));
    rows.push_back(check("upper endpoint", static_cast<double>(iv.upper),
                         double(2 * k + 2 * n) / (k + n - 1), 1e-15));
    return rows;
}

std::vector<Row> suite_schur(const VerifyOptions& opt)
{
    std::vector<Row> rows;
    double lo = schur_eps_min(opt.k, opt.n), hi = schur_eps_max(opt.k, opt.n);
    Point at = interior_point({opt.n, opt.k}, 0.55, 0.3);
    int i = 0;
    for (double eps : {lo, 0.5 * (lo + hi)}) {
        IntegralEstimate r = schur_ratio(opt.k, opt.n, eps, at, opt.samples, opt.seed + 7 * i++);
        std::ostringstream name;
        name << "Schur ratio finite at eps=" << eps;
        Row row{name.str(),
                std::isfinite(r.value.real()) && r.value.real() > 0 ? "pass" : "fail",
                r.value.real(), std::nullopt, std::nullopt, r.std_error, "sample estimate"};
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::vector<std::string> suite_names()
{
    return {"combinatorics", "kernel", "norms", "reproduce", "interval", "schur"};
}

std::vector<Row> run_suite(const std::string& suite, const VerifyOptions& opt)
{
    if (suite == "all") {
        std::vector<Row> rows;
        for (const std::string& s : suite_names()) {
            std::vector<Row> part = run_suite(s, opt);
            for (Row& r : part) {
                r.name = s + ": " + r.name;
                rows.push_back(std::move(r));
            }
        }
        return rows;
    }
    if (suite == "combinatorics")
        return suite_combinatorics(opt);
    if (suite == "kernel")
        return suite_kernel(opt);
    if (suite == "norms")
        return suite_norms(opt);
    if (suite == "reproduce")
        return suite_reproduce(opt);
    if (suite == "interval")
        return suite_interval(opt);
    if (suite == "schur")
        return suite_schur(opt);
    throw std::invalid_argument("unknown suite: " + suite);
}

} // namespace cli
