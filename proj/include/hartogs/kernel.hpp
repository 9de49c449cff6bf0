#pragma once

#include "hartogs/combinatorics.hpp"
#include "hartogs/domain.hpp"

#include <stdexcept>
#include <vector>

namespace hartogs {

enum class KernelMethod { closed, series, special_case };

struct KernelValue {
    Complex value;
    KernelMethod method;
    double est_error; // 0 for closed forms
};

// Index lattice of the monomial basis z_1^{p1} w^q with finite L2 norm:
// Lambda_{k,n} = { (p1, q) : p1 + k(q+1) > -n }.
struct IndexPair {
    long p1;
    long q;
};

bool in_lambda(const DomainParams& d, IndexPair idx);
// Least q with (p1, q) in Lambda: -ceil((n + p1) / k).
long q_min(const DomainParams& d, long p1);

// N_{k,n}(p1, q) = \int |z_1|^{2 p1} |w|^{2q} dV over Omega_k^{n+1}
//               = pi^{n+1} k / ((p1+n) (p1+1)...(p1+n-1) (k(q+1)+p1+n)).
double normalizing_constant(const DomainParams& d, IndexPair idx);

struct SingularityError : std::runtime_error {
    double dist_one_a; // |1 - a|
    double dist_a_bk;  // |a - b^k|
    SingularityError(double d1, double d2);
};

// Floor on |1-a| and |a-b^k| below which closed-form evaluation refuses to
// produce a value. Settable; defaults to 1e-9.
double& singularity_floor();

// Closed form:
//   B_{k,n} = n! (g_{(n+1)k}(b) a^{n+1} + ... + g_0(b)) /
//             (pi^{n+1} k (1-a)^2 (a-b^k)^{n+1}).
// The denominator factor is k, not k^2: re-deriving the coefficient
// extraction, the root-of-unity sum over the k branch inverses contributes a
// factor k that cancels one of the two 1/k Jacobian weights. The series,
// the transformation-rule identity and the Monte Carlo reproducing check all
// pin this normalization (see tests).
KernelValue kernel_closed(const DomainParams& d, const Point& p, const Point& q);
Complex kernel_closed_ab(const DomainParams& d, Complex a, Complex b);

// Orthonormal-series evaluation B = sum b^{p1} a^q / N_{k,n}(p1, q) over
// Lambda, truncated at p1 <= max_p1, q <= max_q. Converges when |a| < 1 and
// |b| < |a|^{1/k}; est_error is the geometric tail bound from the last row
// and column of the summed rectangle.
KernelValue kernel_series(const DomainParams& d, const Point& p, const Point& q,
                          int max_p1 = 128, int max_q = 128);
KernelValue kernel_series_ab(const DomainParams& d, Complex a, Complex b,
                             int max_p1 = 128, int max_q = 128);

// n = 2 special case with the closed-form g polynomials (no external n!:
// those polynomials are already twice the tuple counts).
KernelValue kernel_n2_closed(int k, const Point& p, const Point& q);

// k = 1 special case: B_{1,n} = n! a / (pi^{n+1} (1-a)^2 (a-b)^{n+1}).
Complex kernel_k1_closed_ab(int n, Complex a, Complex b);
KernelValue kernel_k1_closed(int n, const Point& p, const Point& q);

// Relative residual of the proper-map transformation identity
//   u(p) B_{k,n}(phi(p), q) = sum_{j=1}^k B_{1,n}(p, Phi_j(q)) conj(U_j(q)),
// phi(z,w) = (z, w^k), u = k w^{k-1}, Phi_j(z,w) = (z, zeta^j w^{1/k}),
// U_j = zeta^j w^{1/k-1} / k, with the k-th root taken with argument in
// (0, 2pi/k). p must lie in Omega_1^{n+1} and q in Omega_k^{n+1}.
double bell_identity_residual(int k, int n, const Point& p, const Point& q);

// |B_{k,n}(p,q)| |1-a|^2 |a-b^k|^{n+1} / |a|^{n-(n-1)/k}; the boundedness of
// this ratio is the pointwise kernel estimate driving the Schur test.
double pointwise_bound_ratio(const DomainParams& d, const Point& p, const Point& q);

// g-polynomial coefficients for the numerator, converted to double once per
// (k, n) and shared; index [l][t] multiplies a^l b^t.
const std::vector<std::vector<double>>& numerator_coeffs(const DomainParams& d);

} // namespace hartogs
