#pragma once

#include "hartogs/analysis.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace hartogs {

using Rational = boost::multiprecision::cpp_rational;

// Open interval of exponents on which the projection is L^p bounded:
// ((2k+2n)/(k+n+1), (2k+2n)/(k+n-1)); the endpoints are Holder conjugate.
struct CriticalInterval {
    Rational lower;
    Rational upper;
};

CriticalInterval critical_interval(int k, int n);

// The Schur-test route to the same interval: the admissible exponent range
// [a, b) = [(k+n-1)/(2k), (k+n+1)/(2k)) maps to ((a+b)/b, (a+b)/a).
CriticalInterval schur_to_interval(int k, int n);

// f = z_1^m conj(w)^l with m + k(1-l) = 1-n and (m, -l) in Lambda; l is the
// smallest admissible value, m = k(l-1) - n + 1. C is the constant in
// P f = C z_1^m / w^l:
//   C = pi^{n+1} m! B((m+n)/k, 2) / (k N_{k,n}(m, -l) Gamma(n+m)).
struct TestFunctionSpec {
    long m;
    long l;
    double C;
};

TestFunctionSpec test_function(int k, int n);

// Monte Carlo estimate of (P f)(at) = \int B(at, .) f dV.
IntegralEstimate project_test_function(int k, int n, const TestFunctionSpec& spec,
                                       const Point& at, std::size_t samples, uint64_t seed);
Complex projected_test_function_truth(const TestFunctionSpec& spec, const Point& at);

// Radial exponent of ||P f||_p^p: e(p) = -l p + (2n + m p)/k + 1; the norm
// is finite iff e(p) > -1 and the crossing e(p) = -1 lands exactly on the
// upper endpoint of the critical interval.
double divergence_exponent(int k, int n, const TestFunctionSpec& spec, double p);
Rational divergence_crossing(int k, int n, const TestFunctionSpec& spec);

// Closed form of the |w| > delta part of ||P f||_p^p (angular factors via
// sphere moments, radial factor \int_delta^1 r^{e(p)} dr).
double truncated_lp_norm(int k, int n, const TestFunctionSpec& spec, double p, double delta);

bool lp_bounded(int k, int n, const Rational& p);
Rational holder_conjugate(const Rational& p);

// Valid epsilon range for the Schur weight h^{-eps}.
double schur_eps_min(int k, int n); // (k+n-1)/(2k)
double schur_eps_max(int k, int n); // (k+n+1)/(2k)

// \int |B(at, .)| h(.)^{-eps} dV / h(at)^{-eps}; boundedness of this ratio
// over the domain is the Schur self-improving estimate. For eps >= 1 the
// integral is divergent in the strict sense (h vanishes to first order at
// the boundary), so sample estimates there are finite-sample regression
// values, not convergent integrals.
IntegralEstimate schur_ratio(int k, int n, double eps, const Point& at,
                             std::size_t samples, uint64_t seed);

} // namespace hartogs
