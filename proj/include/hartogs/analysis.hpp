#pragma once

#include "hartogs/kernel.hpp"
#include "hartogs/mc.hpp"

#include <functional>
#include <vector>

namespace hartogs {

enum class EstimateMethod { monte_carlo, radial_quadrature, exact_moment };

struct IntegralEstimate {
    Complex value;
    double std_error; // 0 iff the method is exact
    std::size_t samples;
    EstimateMethod method;
    uint64_t seed;
};

// \int_{S^{2n-1}} |xi^v|^2 dsigma = 2 v! pi^n / Gamma(n + |v|), exact
// (integer Gamma evaluated as a big-integer factorial ratio).
double sphere_moment(int n, const std::vector<long>& v);

// \int_{S^{2n-1}} |xi_1|^s dsigma = 2 Gamma(s/2 + 1) pi^n / Gamma(n + s/2)
// for real s > -2; reduces to sphere_moment at s = 2 v_1.
double sphere_moment_z1(int n, double s);

struct MonomialNorm {
    bool divergent;
    double value; // meaningful only when !divergent
};

// gamma_{p,q} = \int |z^p|^2 |w|^{2q} dV over Omega_k^{n+1}; finite exactly
// when |p| + k(q+1) > -n. At p = (p1, 0, ..., 0) this is the series
// normalizing constant (same formula path).
MonomialNorm monomial_l2_norm(const DomainParams& d, const std::vector<long>& p, long q);

// Same quantity by radial quadrature against the exact angular factor;
// independent numerical oracle for the closed form.
IntegralEstimate monomial_l2_quadrature(const DomainParams& d, const std::vector<long>& p, long q,
                                        double tol = 1e-10);

struct ReproduceResult {
    Complex estimate;
    Complex truth;
    double std_error;
    double rel_error;
    std::size_t samples;
    uint64_t seed;
};

// Monte Carlo check of P f = f for the monomial f = z^p w^q in A^2:
// integrates B(at, .) f against the uniform sampler and compares with
// f(at).
ReproduceResult reproduce_check(const DomainParams& d, const std::vector<long>& p, long q,
                                const Point& at, std::size_t samples, uint64_t seed);

struct RatioEstimate {
    double ratio;
    double ratio_std_error;
    double integral;
    double std_error;
    std::size_t samples;
    uint64_t seed;
};

// I(z) = \int_D (1-|w|^2)^{-eps} |1 - z conj(w)|^{-2} |w|^{-beta} dV(w) over
// the unit disk, returned as I(z) / (1-|z|^2)^{-eps}. Requires |z| < 1,
// eps in (0,1), beta < 2.
RatioEstimate disk_estimate_ratio(Complex z, double eps, double beta_exp,
                                  std::size_t samples, uint64_t seed);

// \int_{B_n} (1-|eta|^{2k})^{-eps} |1-(eta . conj(Delta))^k|^{-(n+1)} dV(eta)
// divided by (1-|Delta|^{2k})^{-eps}, with Delta = delta_mod * e_1 (the
// integrand is unitarily invariant in the direction of Delta).
RatioEstimate ball_estimate_ratio(int n, int k, double eps, double delta_mod,
                                  std::size_t samples, uint64_t seed);

// Exact series for the ball estimate: integral = sum_m c_m |Delta|^{2km},
//   c_m = Gamma(1-eps) pi^n / (k Gamma((n+1)/2)^2)
//       * (Gamma(m+(n+1)/2)/Gamma(m+1))^2
//       * Gamma(n/k+m)/Gamma(n/k+m+1-eps)
//       * Gamma(km+1)/Gamma(km+n);
// c_m is of order m^{eps-1}, which is what makes the ratio bounded.
double ball_series_coefficient(int n, int k, double eps, long m);
double ball_series_value(int n, int k, double eps, double delta_mod, double tol = 1e-12);

// Adaptive Simpson quadrature on [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10);

} // namespace hartogs
