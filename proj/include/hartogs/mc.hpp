#pragma once

#include "hartogs/domain.hpp"

#include <cmath>
#include <cstddef>

namespace hartogs::mc {

// Work is cut into a fixed shard grid regardless of thread count. Each shard
// owns an independent generator seeded from (seed, shard) and its partial
// sums are merged in shard order, so the OpenMP and serial paths produce
// bit-identical results.
inline constexpr int shard_count = 256;

struct Estimate {
    Complex value;
    double std_error;
    std::size_t samples;
    uint64_t seed;
};

namespace detail {

struct Partial {
    double re = 0, im = 0, sq = 0;
    std::size_t m = 0;
};

template <class Gen, class F>
Partial run_shard(Gen& gen, std::size_t m, F& f)
{
    Partial p;
    p.m = m;
    for (std::size_t i = 0; i < m; ++i) {
        Complex v = f(gen.next());
        p.re += v.real();
        p.im += v.imag();
        p.sq += std::norm(v);
    }
    return p;
}

inline Estimate merge(const Partial* parts, double volume, uint64_t seed)
{
    double re = 0, im = 0, sq = 0;
    std::size_t m = 0;
    for (int s = 0; s < shard_count; ++s) {
        re += parts[s].re;
        im += parts[s].im;
        sq += parts[s].sq;
        m += parts[s].m;
    }
    Complex mean(re / double(m), im / double(m));
    double var = sq / double(m) - std::norm(mean);
    if (var < 0)
        var = 0;
    return {volume * mean, volume * std::sqrt(var / double(m)), m, seed};
}

} // namespace detail

// Integral over Omega_k^{n+1} of f : Point -> Complex, as vol * mean(f) at
// uniform points.
template <class F>
Estimate integrate(const DomainParams& d, F&& f, std::size_t samples, uint64_t seed,
                   bool parallel = true)
{
    detail::Partial parts[shard_count];
    const std::size_t base = samples / shard_count;
    const std::size_t rem = samples % shard_count;

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int s = 0; s < shard_count; ++s) {
        Sampler gen(d, shard_seed(seed, uint64_t(s)));
        parts[s] = detail::run_shard(gen, base + (std::size_t(s) < rem ? 1 : 0), f);
    }
    return detail::merge(parts, domain_volume(d), seed);
}

// Uniform sampler on the unit ball of C^n (n = 1: the unit disk).
class BallSampler {
public:
    BallSampler(int n, uint64_t seed) : n_(n), rng_(seed), normal_(0.0, 1.0), unif_(0.0, 1.0) {}

    std::vector<Complex> next()
    {
        std::vector<Complex> z(n_);
        for (;;) {
            double g2 = 0;
            for (int i = 0; i < n_; ++i) {
                z[i] = Complex(normal_(rng_), normal_(rng_));
                g2 += std::norm(z[i]);
            }
            if (g2 == 0)
                continue;
            double r = std::pow(unif_(rng_), 1.0 / (2.0 * n_));
            double scale = r / std::sqrt(g2);
            double check = 0;
            for (int i = 0; i < n_; ++i) {
                z[i] *= scale;
                check += std::norm(z[i]);
            }
            if (check < 1.0)
                return z;
        }
    }

private:
    int n_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_;
    std::uniform_real_distribution<double> unif_;
};

inline double ball_volume(int n)
{
    double nf = 1;
    for (int i = 2; i <= n; ++i)
        nf *= i;
    return std::pow(M_PI, n) / nf;
}

// Integral over the unit ball of C^n of f : vector<Complex> -> Complex.
template <class F>
Estimate integrate_ball(int n, F&& f, std::size_t samples, uint64_t seed, bool parallel = true)
{
    detail::Partial parts[shard_count];
    const std::size_t base = samples / shard_count;
    const std::size_t rem = samples % shard_count;

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int s = 0; s < shard_count; ++s) {
        BallSampler gen(n, shard_seed(seed, uint64_t(s)));
        parts[s] = detail::run_shard(gen, base + (std::size_t(s) < rem ? 1 : 0), f);
    }
    return detail::merge(parts, ball_volume(n), seed);
}

} // namespace hartogs::mc
