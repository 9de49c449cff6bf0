#pragma once

#include "hartogs/domain.hpp"
#include "hartogs/special.hpp"

#include <vector>

namespace hartogs {

// Polynomial in b with exact nonnegative integer coefficients; coeffs[t]
// multiplies b^t. The zero polynomial has an empty coefficient vector.
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return long(coeffs.size()) - 1; }
    BigInt at(std::size_t t) const
    {
        return t < coeffs.size() ? coeffs[t] : BigInt(0);
    }
    void trim()
    {
        while (!coeffs.empty() && coeffs.back() == 0)
            coeffs.pop_back();
    }
    Complex eval(Complex b) const
    {
        Complex acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;)
            acc = acc * b + static_cast<double>(coeffs[i]);
        return acc;
    }
    bool operator==(const IntPolynomial&) const = default;
};

// Tuples (j_1..j_parts) with sum = total and 0 <= j_i <= cap-1.
struct CompositionSpec {
    long total;
    int parts;
    int cap;
};

// Inclusion-exclusion: sum_i (-1)^i C(parts, i) C(total - i*cap + parts - 1, parts - 1).
BigInt bounded_compositions(const CompositionSpec& spec);

// Number of (j1, j2) in [0, k-1]^2 with j1 + j2 = l:
//   l+1 on 0 <= l <= k-1, 2k-l-1 on k-1 <= l <= 2k-2, else 0.
long count_f(long l, int k);

// Number of (j1, j2, j3) in [0, k-1]^3 with sum l; four branches that agree
// at l = k-1 and l = 2k-2.
long count_h(long l, int k);

// Coefficient polynomial g_{lk} of the kernel numerator: coefficient of b^t
// counts tuples (j_1..j_{n+3}) in [0, k-1]^{n+3} with total sum
// S = (n-l+2)k - (n+1) and j_3 + ... + j_{n+3} = t. Computed via the
// f x (n+1-part) composition split, exact integers.
IntPolynomial g_polynomial(int l, const DomainParams& d);

// Explicit n = 2 closed forms for g_{lk}, l in {0..3}, as quadratics in
// m = k - 1. These carry the kernel's n! = 2 inside: they equal twice the
// tuple counts of g_polynomial (the factor is pinned by a golden test).
// Beware the tempting (m+2)^2 (m-1) variant of the g_{2k} constant term:
// it violates nonnegativity of tuple counts (k = 2 gives -4 + 6b against
// the exact 4 + 6b); the correct factor is (m+2)^2 (m+1).
IntPolynomial g_polynomial_n2_closed(int l, int k);

} // namespace hartogs
