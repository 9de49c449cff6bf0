#include "hartogs/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace hartogs {

void validate(const DomainParams& d)
{
    if (d.n < 1 || d.k < 1)
        throw std::invalid_argument("DomainParams: need n >= 1 and k >= 1");
}

static double norm_z(const Point& p)
{
    double s = 0;
    for (const Complex& zi : p.z)
        s += std::norm(zi);
    return std::sqrt(s);
}

bool contains(const DomainParams& d, const Point& p)
{
    validate(d);
    if (p.z.size() != std::size_t(d.n))
        throw std::invalid_argument("contains: z has wrong dimension");
    double aw = std::abs(p.w);
    if (!(aw < 1.0))
        return false;
    return std::pow(norm_z(p), d.k) < aw;
}

PairedArgs pair(const Point& p, const Point& q)
{
    if (p.z.size() != q.z.size())
        throw std::invalid_argument("pair: dimension mismatch");
    Complex b = 0;
    for (std::size_t i = 0; i < p.z.size(); ++i)
        b += p.z[i] * std::conj(q.z[i]);
    return {p.w * std::conj(q.w), b};
}

double boundary_distance_weight(const DomainParams& d, const Point& p)
{
    if (!contains(d, p))
        throw std::domain_error("boundary_distance_weight: point outside domain");
    double w2 = std::norm(p.w);
    double zk = std::pow(norm_z(p), 2.0 * d.k);
    return (w2 - zk) * (1.0 - w2);
}

double domain_volume(const DomainParams& d)
{
    validate(d);
    double nf = 1;
    for (int i = 2; i <= d.n; ++i)
        nf *= i;
    return std::pow(M_PI, d.n + 1) * d.k / ((d.n + d.k) * nf);
}

Complex cpow_int(Complex base, long e)
{
    if (e < 0)
        return 1.0 / cpow_int(base, -e);
    Complex acc = 1, b = base;
    for (unsigned long u = e; u; u >>= 1) {
        if (u & 1)
            acc *= b;
        b *= b;
    }
    return acc;
}

uint64_t splitmix64(uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t shard_seed(uint64_t seed, uint64_t shard)
{
    return splitmix64(seed + shard * 0x9e3779b97f4a7c15ULL);
}

Sampler::Sampler(DomainParams d, uint64_t seed)
    : d_(d), rng_(seed), normal_(0.0, 1.0), unif_(0.0, 1.0)
{
    validate(d_);
}

Point Sampler::next()
{
    const int n = d_.n, k = d_.k;
    Point p;
    p.z.resize(n);
    for (;;) {
        double u = unif_(rng_);
        double rho = std::pow(u, k / (2.0 * (n + k)));
        double phi = 2.0 * M_PI * unif_(rng_);
        p.w = Complex(rho * std::cos(phi), rho * std::sin(phi));

        double g2 = 0;
        for (int i = 0; i < n; ++i) {
            p.z[i] = Complex(normal_(rng_), normal_(rng_));
            g2 += std::norm(p.z[i]);
        }
        double r = std::pow(rho, 1.0 / k) * std::pow(unif_(rng_), 1.0 / (2.0 * n));
        double scale = r / std::sqrt(g2);
        for (int i = 0; i < n; ++i)
            p.z[i] *= scale;

        // u = 0 or a boundary tie can only arise from floating underflow;
        // retry rather than return a point that fails the strict membership.
        if (contains(d_, p))
            return p;
    }
}

std::vector<Point> sample_uniform(const DomainParams& d, std::size_t count, uint64_t seed)
{
    if (count < 1)
        throw std::invalid_argument("sample_uniform: count must be >= 1");
    Sampler s(d, seed);
    std::vector<Point> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(s.next());
    return out;
}

} // namespace hartogs
