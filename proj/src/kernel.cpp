#include "hartogs/kernel.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>

namespace hartogs {

bool in_lambda(const DomainParams& d, IndexPair idx)
{
    validate(d);
    return idx.p1 >= 0 && idx.p1 + long(d.k) * (idx.q + 1) > -long(d.n);
}

long q_min(const DomainParams& d, long p1)
{
    validate(d);
    // least q with p1 + k(q+1) > -n, i.e. q > -(n+p1)/k - 1
    return -((d.n + p1 + d.k - 1) / d.k);
}

double normalizing_constant(const DomainParams& d, IndexPair idx)
{
    if (!in_lambda(d, idx))
        throw std::domain_error("normalizing_constant: index outside Lambda, integral diverges");
    const int n = d.n, k = d.k;
    double prod = 1;
    for (int i = 1; i < n; ++i)
        prod *= double(idx.p1 + i); // Gamma(p1+n)/Gamma(p1+1)
    return std::pow(M_PI, n + 1) * k
         / ((idx.p1 + n) * prod * (k * (idx.q + 1) + idx.p1 + n));
}

SingularityError::SingularityError(double d1, double d2)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "kernel evaluation within singularity floor: |1-a| = " << d1
             << ", |a-b^k| = " << d2;
          return os.str();
      }()),
      dist_one_a(d1), dist_a_bk(d2)
{
}

double& singularity_floor()
{
    static double floor_ = 1e-9;
    return floor_;
}

namespace {

// Immutable once published; readers walk the list lock-free, builders
// serialize on a mutex. Nodes live for the process lifetime.
struct CoeffNode {
    int k, n;
    std::vector<std::vector<double>> table;
    CoeffNode* next;
};
std::atomic<CoeffNode*> coeff_head{nullptr};
std::mutex coeff_build_mutex;

} // namespace

const std::vector<std::vector<double>>& numerator_coeffs(const DomainParams& d)
{
    validate(d);
    for (CoeffNode* p = coeff_head.load(std::memory_order_acquire); p; p = p->next)
        if (p->k == d.k && p->n == d.n)
            return p->table;
    std::lock_guard<std::mutex> lock(coeff_build_mutex);
    for (CoeffNode* p = coeff_head.load(std::memory_order_acquire); p; p = p->next)
        if (p->k == d.k && p->n == d.n)
            return p->table;
    auto* node = new CoeffNode{d.k, d.n, {}, coeff_head.load(std::memory_order_relaxed)};
    for (int l = 0; l <= d.n + 1; ++l) {
        IntPolynomial g = g_polynomial(l, d);
        std::vector<double> row(g.coeffs.size());
        for (std::size_t t = 0; t < g.coeffs.size(); ++t)
            row[t] = static_cast<double>(g.coeffs[t]);
        node->table.push_back(std::move(row));
    }
    coeff_head.store(node, std::memory_order_release);
    return node->table;
}

static Complex horner(const std::vector<double>& c, Complex x)
{
    Complex acc = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * x + c[i];
    return acc;
}

Complex kernel_closed_ab(const DomainParams& d, Complex a, Complex b)
{
    const int n = d.n, k = d.k;
    Complex bk = cpow_int(b, k);
    double d1 = std::abs(1.0 - a), d2 = std::abs(a - bk);
    if (d1 < singularity_floor() || d2 < singularity_floor())
        throw SingularityError(d1, d2);

    const auto& table = numerator_coeffs(d);
    Complex num = 0;
    for (int l = n + 1; l >= 0; --l)
        num = num * a + horner(table[l], b);

    double nf = 1;
    for (int i = 2; i <= n; ++i)
        nf *= i;
    Complex den = std::pow(M_PI, n + 1) * k * (1.0 - a) * (1.0 - a) * cpow_int(a - bk, n + 1);
    return nf * num / den;
}

KernelValue kernel_closed(const DomainParams& d, const Point& p, const Point& q)
{
    if (!contains(d, p) || !contains(d, q))
        throw std::domain_error("kernel_closed: points must lie in the domain");
    PairedArgs ab = pair(p, q);
    return {kernel_closed_ab(d, ab.a, ab.b), KernelMethod::closed, 0.0};
}

KernelValue kernel_series(const DomainParams& d, const Point& p, const Point& q,
                          int max_p1, int max_q)
{
    if (!contains(d, p) || !contains(d, q))
        throw std::domain_error("kernel_series: points must lie in the domain");
    PairedArgs ab = pair(p, q);
    return kernel_series_ab(d, ab.a, ab.b, max_p1, max_q);
}

KernelValue kernel_series_ab(const DomainParams& d, Complex a, Complex b,
                             int max_p1, int max_q)
{
    const int n = d.n, k = d.k;

    const double ra = std::abs(a);
    const double rb = ra > 0 ? std::abs(b) / std::pow(ra, 1.0 / k) : 1.0;
    if (ra == 0.0 || ra >= 1.0 || (std::abs(b) != 0.0 && rb >= 1.0))
        throw std::domain_error("kernel_series_ab: arguments outside the convergence region");

    const double inv_pi_k = 1.0 / (std::pow(M_PI, n + 1) * k);
    Complex sum = 0;
    double row_abs = 0; // |terms| in the last p1 row
    double col_abs = 0; // |terms| at q = max_q, accumulated over p1
    Complex bp = 1;     // b^{p1}
    double prod = 1;    // (p1+1)...(p1+n-1), so (n-1)! at the first row
    for (int i = 2; i < n; ++i)
        prod *= i;

    for (long p1 = 0; p1 <= max_p1; ++p1) {
        const long q0 = q_min(d, p1);
        Complex aq = 1; // a^{q0}
        for (long i = 0; i < -q0; ++i)
            aq /= a;
        const double row_scale = (p1 + n) * prod * inv_pi_k;
        row_abs = 0;
        for (long qi = q0; qi <= max_q; ++qi) {
            // 1/N = (p1+n) prod (k(q+1)+p1+n) / (pi^{n+1} k)
            Complex term = bp * aq * (row_scale * double(k * (qi + 1) + p1 + n));
            sum += term;
            double m = std::abs(term);
            row_abs += m;
            if (qi == max_q)
                col_abs += m;
            aq *= a;
        }
        if (b == 0.0)
            break; // only p1 = 0 contributes
        bp *= b;
        prod *= double(p1 + n) / double(p1 + 1);
    }

    // geometric tails: remaining p1 rows shrink by rb per row, remaining q
    // columns by ra per column (polynomial growth of 1/N absorbed by the
    // strict contraction; the doubling test guards the heuristic)
    double tail = col_abs * ra / (1.0 - ra);
    if (std::abs(b) != 0.0)
        tail += row_abs * rb / (1.0 - rb);
    return {sum, KernelMethod::series, tail};
}

KernelValue kernel_n2_closed(int k, const Point& p, const Point& q)
{
    DomainParams d{2, k};
    if (!contains(d, p) || !contains(d, q))
        throw std::domain_error("kernel_n2_closed: points must lie in the domain");
    PairedArgs ab = pair(p, q);
    Complex a = ab.a, b = ab.b;
    Complex bk = cpow_int(b, k);
    double d1 = std::abs(1.0 - a), d2 = std::abs(a - bk);
    if (d1 < singularity_floor() || d2 < singularity_floor())
        throw SingularityError(d1, d2);

    Complex num = 0;
    for (int l = 3; l >= 0; --l)
        num = num * a + g_polynomial_n2_closed(l, k).eval(b);
    Complex den = std::pow(M_PI, 3) * k * (1.0 - a) * (1.0 - a) * cpow_int(a - bk, 3);
    return {num / den, KernelMethod::special_case, 0.0};
}

Complex kernel_k1_closed_ab(int n, Complex a, Complex b)
{
    double nf = 1;
    for (int i = 2; i <= n; ++i)
        nf *= i;
    return nf * a / (std::pow(M_PI, n + 1) * (1.0 - a) * (1.0 - a) * cpow_int(a - b, n + 1));
}

KernelValue kernel_k1_closed(int n, const Point& p, const Point& q)
{
    DomainParams d{n, 1};
    if (!contains(d, p) || !contains(d, q))
        throw std::domain_error("kernel_k1_closed: points must lie in the domain");
    PairedArgs ab = pair(p, q);
    return {kernel_k1_closed_ab(n, ab.a, ab.b), KernelMethod::special_case, 0.0};
}

double bell_identity_residual(int k, int n, const Point& p, const Point& q)
{
    DomainParams d1{n, 1}, dk{n, k};
    if (!contains(d1, p))
        throw std::domain_error("bell_identity_residual: p must lie in Omega_1");
    if (!contains(dk, q))
        throw std::domain_error("bell_identity_residual: q must lie in Omega_k");
    if (p.w == 0.0 || q.w == 0.0)
        throw std::domain_error("bell_identity_residual: w = 0 is on the branch locus");

    Point phi_p{p.z, cpow_int(p.w, k)};
    Complex u = double(k) * cpow_int(p.w, k - 1);
    PairedArgs ab = pair(phi_p, q);
    Complex lhs = u * kernel_closed_ab(dk, ab.a, ab.b);

    // k-th root of q.w with argument in (0, 2pi/k)
    double arg = std::arg(q.w);
    if (arg <= 0)
        arg += 2.0 * M_PI;
    Complex root = std::pow(std::abs(q.w), 1.0 / k)
                 * Complex(std::cos(arg / k), std::sin(arg / k));
    Complex zeta = Complex(std::cos(2.0 * M_PI / k), std::sin(2.0 * M_PI / k));

    Complex rhs = 0;
    Complex zj = 1;
    for (int j = 1; j <= k; ++j) {
        zj *= zeta;
        Point branch{q.z, zj * root};
        PairedArgs ab1 = pair(p, branch);
        Complex Uj = zj * root / (q.w * double(k)); // zeta^j w^{1/k - 1} / k
        rhs += kernel_k1_closed_ab(n, ab1.a, ab1.b) * std::conj(Uj);
    }
    return std::abs(lhs - rhs) / std::abs(lhs);
}

double pointwise_bound_ratio(const DomainParams& d, const Point& p, const Point& q)
{
    if (!contains(d, p) || !contains(d, q))
        throw std::domain_error("pointwise_bound_ratio: points must lie in the domain");
    PairedArgs ab = pair(p, q);
    if (ab.a == 0.0)
        throw std::domain_error("pointwise_bound_ratio: a = 0");
    Complex bk = cpow_int(ab.b, d.k);
    double B = std::abs(kernel_closed_ab(d, ab.a, ab.b));
    double expo = d.n - double(d.n - 1) / d.k;
    return B * std::norm(1.0 - ab.a) * std::pow(std::abs(ab.a - bk), d.n + 1)
         / std::pow(std::abs(ab.a), expo);
}

} // namespace hartogs
