#include "hartogs/combinatorics.hpp"

#include <stdexcept>

namespace hartogs {

BigInt bounded_compositions(const CompositionSpec& spec)
{
    if (spec.parts < 1 || spec.cap < 1)
        throw std::invalid_argument("bounded_compositions: parts and cap must be >= 1");
    if (spec.total < 0 || spec.total > long(spec.parts) * (spec.cap - 1))
        return 0;
    BigInt acc = 0;
    for (int i = 0; i <= spec.parts; ++i) {
        long t = spec.total - long(i) * spec.cap;
        if (t < 0)
            break;
        BigInt term = binomial(spec.parts, i) * binomial(t + spec.parts - 1, spec.parts - 1);
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

long count_f(long l, int k)
{
    if (k < 1)
        throw std::invalid_argument("count_f: k must be >= 1");
    if (l < 0 || l > 2 * k - 2)
        return 0;
    return l <= k - 1 ? l + 1 : 2 * k - l - 1;
}

long count_h(long l, int k)
{
    if (k < 1)
        throw std::invalid_argument("count_h: k must be >= 1");
    if (l < 0 || l > 3 * k - 3)
        return 0;
    if (l <= k - 1)
        return (l + 2) * (l + 1) / 2;
    if (l <= 2 * k - 2)
        return (l + 2) * (l + 1) / 2 - 3 * (l + 2 - k) * (l + 1 - k) / 2;
    return (3 * k - l - 1) * (3 * k - l - 2) / 2;
}

IntPolynomial g_polynomial(int l, const DomainParams& d)
{
    validate(d);
    const int n = d.n, k = d.k;
    if (l < 0 || l > n + 1)
        throw std::out_of_range("g_polynomial: l must satisfy 0 <= l <= n+1");
    IntPolynomial g;
    long S = long(n - l + 2) * k - (n + 1);
    if (S < 0 || S > long(n + 3) * (k - 1))
        return g;
    long tmax = std::min(S, long(n + 1) * (k - 1));
    g.coeffs.resize(tmax + 1);
    for (long t = 0; t <= tmax; ++t)
        g.coeffs[t] = bounded_compositions({S - t, 2, k})
                    * bounded_compositions({t, n + 1, k});
    g.trim();
    return g;
}

IntPolynomial g_polynomial_n2_closed(int l, int k)
{
    if (k < 1)
        throw std::invalid_argument("g_polynomial_n2_closed: k must be >= 1");
    if (l < 0 || l > 3)
        throw std::out_of_range("g_polynomial_n2_closed: l must be in {0,1,2,3}");

    IntPolynomial g;
    auto add = [&g](long t, long v) {
        if (g.coeffs.size() <= std::size_t(t))
            g.coeffs.resize(t + 1);
        g.coeffs[t] += v;
    };

    switch (l) {
    case 3:
        for (long m = 0; m <= k - 3; ++m)
            add(m, (k - 2 - m) * (m + 2) * (m + 1));
        break;
    case 2:
        for (long m = 0; m <= k - 2; ++m) {
            add(m + k - 1, (k - m - 1) * ((k + m + 1) * (k + m) - 3 * (m + 1) * m));
            add(m, (m + 2) * (m + 2) * (m + 1)); // (m+1); the (m-1) variant fails enumeration
        }
        break;
    case 1:
        for (long m = 0; m <= k - 1; ++m) {
            add(m + 2 * k - 1, (k - m - 1) * (k - m - 1) * (k - m));
            add(m + k - 1, (m + 1) * ((k + m + 1) * (k + m) - 3 * (m + 1) * m));
        }
        break;
    case 0:
        for (long m = 0; m <= k - 2; ++m)
            add(2 * k - 1 + m, (m + 1) * (k - m) * (k - m - 1));
        break;
    }
    g.trim();
    return g;
}

} // namespace hartogs
