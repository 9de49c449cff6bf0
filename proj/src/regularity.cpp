#include "hartogs/regularity.hpp"

#include <cmath>
#include <stdexcept>

namespace hartogs {

CriticalInterval critical_interval(int k, int n)
{
    if (k < 1 || n < 1)
        throw std::invalid_argument("critical_interval: need k, n >= 1");
    return {Rational(2 * k + 2 * n, k + n + 1), Rational(2 * k + 2 * n, k + n - 1)};
}

CriticalInterval schur_to_interval(int k, int n)
{
    if (k < 1 || n < 1)
        throw std::invalid_argument("schur_to_interval: need k, n >= 1");
    Rational a(k + n - 1, 2 * k), b(k + n + 1, 2 * k);
    return {(a + b) / b, (a + b) / a};
}

TestFunctionSpec test_function(int k, int n)
{
    if (k < 1 || n < 1)
        throw std::invalid_argument("test_function: need k, n >= 1");
    long l = 1;
    while (long(k) * l - k - n + 1 < 0)
        ++l;
    long m = long(k) * l - k - n + 1;
    DomainParams d{n, k};
    double N = normalizing_constant(d, {m, -l});
    double C = std::pow(M_PI, n + 1) * static_cast<double>(factorial(m))
             * beta(double(m + n) / k, 2.0) / (k * N * gamma(double(n + m)));
    return {m, l, C};
}

Complex projected_test_function_truth(const TestFunctionSpec& spec, const Point& at)
{
    return spec.C * cpow_int(at.z[0], spec.m) * cpow_int(at.w, -spec.l);
}

IntegralEstimate project_test_function(int k, int n, const TestFunctionSpec& spec,
                                       const Point& at, std::size_t samples, uint64_t seed)
{
    DomainParams d{n, k};
    if (!contains(d, at))
        throw std::domain_error("project_test_function: evaluation point outside domain");
    mc::Estimate est = mc::integrate(
        d,
        [&](const Point& y) {
            PairedArgs ab = pair(at, y);
            Complex f = cpow_int(y.z[0], spec.m) * std::conj(cpow_int(y.w, spec.l));
            return kernel_closed_ab(d, ab.a, ab.b) * f;
        },
        samples, seed);
    return {est.value, est.std_error, est.samples, EstimateMethod::monte_carlo, seed};
}

double divergence_exponent(int k, int n, const TestFunctionSpec& spec, double p)
{
    if (p < 1.0)
        throw std::domain_error("divergence_exponent: need p >= 1");
    return -double(spec.l) * p + (2.0 * n + double(spec.m) * p) / k + 1.0;
}

Rational divergence_crossing(int k, int n, const TestFunctionSpec& spec)
{
    // e(p) = -1  <=>  p (l - m/k) = 2 + 2n/k  <=>  p = (2k+2n)/(lk - m)
    return Rational(2 * k + 2 * n, spec.l * k - spec.m);
}

double truncated_lp_norm(int k, int n, const TestFunctionSpec& spec, double p, double delta)
{
    if (!(delta > 0.0 && delta < 1.0))
        throw std::domain_error("truncated_lp_norm: need delta in (0,1)");
    double e = divergence_exponent(k, n, spec, p);
    // expm1 keeps the e -> -1 limit (log growth) numerically clean
    double t = e + 1.0;
    double radial = (t == 0.0) ? std::log(1.0 / delta)
                               : -std::expm1(t * std::log(delta)) / t;
    double mp = double(spec.m) * p;
    double angular = sphere_moment_z1(n, mp) / (mp + 2.0 * n) * 2.0 * M_PI;
    return std::pow(spec.C, p) * angular * radial;
}

bool lp_bounded(int k, int n, const Rational& p)
{
    CriticalInterval iv = critical_interval(k, n);
    return p > iv.lower && p < iv.upper;
}

Rational holder_conjugate(const Rational& p)
{
    if (p <= 1)
        throw std::domain_error("holder_conjugate: need p > 1");
    return p / (p - 1);
}

double schur_eps_min(int k, int n) { return double(k + n - 1) / (2.0 * k); }
double schur_eps_max(int k, int n) { return double(k + n + 1) / (2.0 * k); }

IntegralEstimate schur_ratio(int k, int n, double eps, const Point& at,
                             std::size_t samples, uint64_t seed)
{
    DomainParams d{n, k};
    if (!(eps >= schur_eps_min(k, n) && eps < schur_eps_max(k, n)))
        throw std::domain_error("schur_ratio: eps outside the admissible range");
    if (!contains(d, at))
        throw std::domain_error("schur_ratio: evaluation point outside domain");

    mc::Estimate est = mc::integrate(
        d,
        [&](const Point& y) {
            PairedArgs ab = pair(at, y);
            double h = boundary_distance_weight(d, y);
            return Complex(std::abs(kernel_closed_ab(d, ab.a, ab.b)) * std::pow(h, -eps));
        },
        samples, seed);
    double scale = std::pow(boundary_distance_weight(d, at), eps);
    return {est.value * scale, est.std_error * scale, est.samples,
            EstimateMethod::monte_carlo, seed};
}

} // namespace hartogs
