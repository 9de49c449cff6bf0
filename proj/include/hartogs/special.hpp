#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hartogs {

using BigInt = boost::multiprecision::cpp_int;

struct GammaEval {
    double x;
    double value;      // exp(log_value), +inf past x ~ 171.6
    double log_value;
};

// Gamma for real x > 0, Lanczos approximation (g = 7, 9 terms) with the
// reflection formula below x = 1/2. Relative error <= 1e-12 on [1e-3, 170].
GammaEval gamma_eval(double x);
double gamma(double x);
double log_gamma(double x);

// Gamma(x) Gamma(y) / Gamma(x+y), computed in log space so large arguments
// do not overflow before the ratio is taken.
double beta(double x, double y);

// Gamma(m + lambda) / Gamma(m) for integer m >= 1; ~ m^lambda for large m.
double gamma_ratio_asymptotic(long m, double lambda);

// Exact big-integer combinatorial primitives. binomial is total: returns 0
// for r < 0 or r > n.
BigInt binomial(long long n, long long r);
BigInt factorial(long n);

} // namespace hartogs
