#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace hartogs {

using Complex = std::complex<double>;

// Omega_k^{n+1} = { (z, w) in C^n x C : |z|^k < |w| < 1 }, |z| Euclidean.
struct DomainParams {
    int n; // dimension of the z block
    int k; // exponent
};

void validate(const DomainParams& d); // throws std::invalid_argument

struct Point {
    std::vector<Complex> z;
    Complex w;
};

// Reinhardt pairings the kernel depends on: a = w conj(t), b = <z, s>.
struct PairedArgs {
    Complex a;
    Complex b;
};

bool contains(const DomainParams& d, const Point& p);
PairedArgs pair(const Point& p, const Point& q);

// h(z,w) = (|w|^2 - |z|^{2k})(1 - |w|^2), the Schur-test auxiliary weight.
double boundary_distance_weight(const DomainParams& d, const Point& p);

// vol(Omega_k^{n+1}) = pi^{n+1} k / ((n+k) n!)
double domain_volume(const DomainParams& d);

// z^p w^q with integer exponents (negative q allowed).
Complex cpow_int(Complex base, long e);

uint64_t splitmix64(uint64_t x);
// Disjoint per-worker streams derived from (seed, shard).
uint64_t shard_seed(uint64_t seed, uint64_t shard);

// Uniform sampler on Omega. Exact radial decomposition, no rejection in the
// typical case: the z fiber over w is the ball of radius |w|^{1/k}, whose
// volume scales like |w|^{2n/k}, so the |w| marginal has radial density
// proportional to rho^{2n/k + 1}. Inverting the CDF gives
// |w| = U^{k / (2(n+k))}; z is then uniform on the fiber ball.
class Sampler {
public:
    Sampler(DomainParams d, uint64_t seed);
    Point next();

private:
    DomainParams d_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_;
    std::uniform_real_distribution<double> unif_;
};

std::vector<Point> sample_uniform(const DomainParams& d, std::size_t count, uint64_t seed);

} // namespace hartogs
