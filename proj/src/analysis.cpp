#include "hartogs/analysis.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hartogs {

double sphere_moment(int n, const std::vector<long>& v)
{
    if (n < 1 || v.size() != std::size_t(n))
        throw std::invalid_argument("sphere_moment: v must have n entries");
    long total = 0;
    BigInt vfact = 1;
    for (long vi : v) {
        if (vi < 0)
            throw std::invalid_argument("sphere_moment: negative exponent");
        total += vi;
        vfact *= factorial(vi);
    }
    boost::multiprecision::cpp_rational ratio(vfact, factorial(n + total - 1));
    return 2.0 * std::pow(M_PI, n) * static_cast<double>(ratio);
}

double sphere_moment_z1(int n, double s)
{
    if (n < 1 || s <= -2.0)
        throw std::invalid_argument("sphere_moment_z1: need n >= 1 and s > -2");
    return 2.0 * std::pow(M_PI, n)
         * std::exp(log_gamma(s / 2.0 + 1.0) - log_gamma(n + s / 2.0));
}

MonomialNorm monomial_l2_norm(const DomainParams& d, const std::vector<long>& p, long q)
{
    validate(d);
    if (p.size() != std::size_t(d.n))
        throw std::invalid_argument("monomial_l2_norm: p must have n entries");
    long total = 0;
    for (long pi : p) {
        if (pi < 0)
            throw std::invalid_argument("monomial_l2_norm: z exponents must be nonnegative");
        total += pi;
    }
    if (total + long(d.k) * (q + 1) <= -long(d.n))
        return {true, 0.0};
    if (p.size() == 1 || std::all_of(p.begin() + 1, p.end(), [](long x) { return x == 0; }))
        return {false, normalizing_constant(d, {p[0], q})};
    // radial reduction: angular factor times
    // \int_0^1 rho^{2q+1+(2|p|+2n)/k} * (k-fiber radius) ... collapses to
    // s_p * pi * k / (2 (|p|+n) (k(q+1)+|p|+n))
    double sp = sphere_moment(d.n, p);
    return {false, sp * M_PI * d.k
                       / (2.0 * double(total + d.n) * double(d.k * (q + 1) + total + d.n))};
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol)
{
    struct Rec {
        const std::function<double(double)>& f;
        double operator()(double a, double fa, double b, double fb, double m, double fm,
                          double whole, double tol, int depth) const
        {
            double lm = (a + m) / 2, rm = (m + b) / 2;
            double flm = f(lm), frm = f(rm);
            double left = (m - a) / 6 * (fa + 4 * flm + fm);
            double right = (b - m) / 6 * (fm + 4 * frm + fb);
            if (depth <= 0 || std::abs(left + right - whole) <= 15 * tol)
                return left + right + (left + right - whole) / 15;
            return (*this)(a, fa, m, fm, lm, flm, left, tol / 2, depth - 1)
                 + (*this)(m, fm, b, fb, rm, frm, right, tol / 2, depth - 1);
        }
    } rec{f};
    double m = (a + b) / 2;
    double fa = f(a), fb = f(b), fm = f(m);
    double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return rec(a, fa, b, fb, m, fm, whole, tol, 48);
}

IntegralEstimate monomial_l2_quadrature(const DomainParams& d, const std::vector<long>& p, long q,
                                        double tol)
{
    validate(d);
    long total = 0;
    for (long pi : p)
        total += pi;
    if (total + long(d.k) * (q + 1) <= -long(d.n))
        throw std::domain_error("monomial_l2_quadrature: divergent monomial");
    double sp = sphere_moment(d.n, p);
    // inner z integral over the fiber ball of radius |w|^{1/k} gives
    // s_p rho_z^{2|p|+2n} / (2|p|+2n); then the w integral in polar form
    double expo = 2.0 * q + 1.0 + (2.0 * total + 2.0 * d.n) / d.k; // > -1
    double eps = 1e-7; // analytic patch near 0 for negative exponents
    double head = std::pow(eps, expo + 1.0) / (expo + 1.0);
    double tail = adaptive_simpson([expo](double r) { return std::pow(r, expo); }, eps, 1.0, tol);
    double value = sp / (2.0 * total + 2.0 * d.n) * 2.0 * M_PI * (head + tail);
    return {value, tol, 0, EstimateMethod::radial_quadrature, 0};
}

ReproduceResult reproduce_check(const DomainParams& d, const std::vector<long>& p, long q,
                                const Point& at, std::size_t samples, uint64_t seed)
{
    validate(d);
    if (p.size() != std::size_t(d.n))
        throw std::invalid_argument("reproduce_check: p must have n entries");
    long total = 0;
    for (long pi : p)
        total += pi;
    if (total + long(d.k) * (q + 1) <= -long(d.n))
        throw std::domain_error("reproduce_check: monomial not square-integrable");
    if (!contains(d, at))
        throw std::domain_error("reproduce_check: evaluation point outside domain");

    auto monomial = [&p, q](const Point& y) {
        Complex acc = cpow_int(y.w, q);
        for (std::size_t i = 0; i < p.size(); ++i)
            acc *= cpow_int(y.z[i], p[i]);
        return acc;
    };
    mc::Estimate est = mc::integrate(
        d,
        [&](const Point& y) {
            PairedArgs ab = pair(at, y);
            return kernel_closed_ab(d, ab.a, ab.b) * monomial(y);
        },
        samples, seed);
    Complex truth = monomial(at);
    double rel = std::abs(est.value - truth) / std::abs(truth);
    return {est.value, truth, est.std_error, rel, est.samples, seed};
}

RatioEstimate disk_estimate_ratio(Complex z, double eps, double beta_exp,
                                  std::size_t samples, uint64_t seed)
{
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("disk_estimate_ratio: need |z| < 1");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::domain_error("disk_estimate_ratio: need eps in (0,1)");
    if (!(beta_exp < 2.0))
        throw std::domain_error("disk_estimate_ratio: need beta < 2");

    mc::Estimate est = mc::integrate_ball(
        1,
        [=](const std::vector<Complex>& wv) {
            const Complex& w = wv[0];
            double r2 = std::norm(w);
            if (r2 == 0.0 && beta_exp > 0.0)
                return Complex(0.0); // measure-zero singular point
            return Complex(std::pow(1.0 - r2, -eps) / std::norm(1.0 - z * std::conj(w))
                           * std::pow(r2, -beta_exp / 2.0));
        },
        samples, seed);
    double scale = std::pow(1.0 - std::norm(z), eps);
    return {est.value.real() * scale, est.std_error * scale,
            est.value.real(), est.std_error, est.samples, seed};
}

RatioEstimate ball_estimate_ratio(int n, int k, double eps, double delta_mod,
                                  std::size_t samples, uint64_t seed)
{
    if (n < 1 || k < 1)
        throw std::domain_error("ball_estimate_ratio: need n, k >= 1");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::domain_error("ball_estimate_ratio: need eps in (0,1)");
    if (!(delta_mod >= 0.0 && delta_mod < 1.0))
        throw std::domain_error("ball_estimate_ratio: need |Delta| in [0,1)");

    mc::Estimate est = mc::integrate_ball(
        n,
        [=](const std::vector<Complex>& eta) {
            double r2 = 0;
            for (const Complex& e : eta)
                r2 += std::norm(e);
            Complex pairing = cpow_int(eta[0] * delta_mod, k);
            return Complex(std::pow(1.0 - std::pow(r2, double(k)), -eps)
                           / std::pow(std::abs(1.0 - pairing), double(n + 1)));
        },
        samples, seed);
    double scale = std::pow(1.0 - std::pow(delta_mod, 2.0 * k), eps);
    return {est.value.real() * scale, est.std_error * scale,
            est.value.real(), est.std_error, est.samples, seed};
}

double ball_series_coefficient(int n, int k, double eps, long m)
{
    if (n < 1 || k < 1 || m < 0 || !(eps > 0.0 && eps < 1.0))
        throw std::domain_error("ball_series_coefficient: parameter out of range");
    double half = (n + 1) / 2.0;
    double nk = double(n) / k;
    double lg = log_gamma(1.0 - eps) + n * std::log(M_PI) - std::log(double(k))
              - 2.0 * log_gamma(half)
              + 2.0 * (log_gamma(m + half) - log_gamma(m + 1.0))
              + log_gamma(nk + m) - log_gamma(nk + m + 1.0 - eps)
              + log_gamma(double(k) * m + 1.0) - log_gamma(double(k) * m + n);
    return std::exp(lg);
}

double ball_series_value(int n, int k, double eps, double delta_mod, double tol)
{
    if (!(delta_mod >= 0.0 && delta_mod < 1.0))
        throw std::domain_error("ball_series_value: need |Delta| in [0,1)");
    double x = std::pow(delta_mod, 2.0 * k);
    double sum = ball_series_coefficient(n, k, eps, 0);
    if (x == 0.0)
        return sum;
    double xm = 1.0;
    for (long m = 1; m < 200000; ++m) {
        xm *= x;
        double term = ball_series_coefficient(n, k, eps, m) * xm;
        sum += term;
        if (term < tol * sum) {
            sum += term * x / (1.0 - x); // geometric tail
            break;
        }
    }
    return sum;
}

} // namespace hartogs
