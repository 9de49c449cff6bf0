// Times the Monte Carlo engine's serial path against the OpenMP path on a
// kernel-weighted integrand and checks the two merge to bit-identical
// results (the shard grid is fixed, so thread count must not matter).

#include "hartogs/kernel.hpp"
#include "hartogs/mc.hpp"

#include <chrono>
#include <complex>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hartogs;

namespace {

double now()
{
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

} // namespace

int main(int argc, char** argv)
{
    std::size_t samples = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000000;
    const DomainParams d{2, 2};
    const uint64_t seed = 42;

    Point at;
    at.z = {Complex(0.25, 0.05), Complex(-0.1, 0.2)};
    at.w = Complex(0.6, -0.15);

    // integrand of the reproducing identity for f = w
    auto f = [&](const Point& y) { return kernel_closed(d, at, y).value * y.w; };

#ifdef _OPENMP
    std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP, both paths run serially\n";
#endif
    std::cout << "samples " << samples << ", domain k=" << d.k << " n=" << d.n << "\n";

    double t0 = now();
    mc::Estimate serial = mc::integrate(d, f, samples, seed, /*parallel=*/false);
    double t_serial = now() - t0;

    t0 = now();
    mc::Estimate parallel = mc::integrate(d, f, samples, seed, /*parallel=*/true);
    double t_parallel = now() - t0;

    std::cout.precision(17);
    std::cout << "serial   " << t_serial << " s  (" << double(samples) / t_serial
              << " samples/s)  value " << serial.value << "\n";
    std::cout << "parallel " << t_parallel << " s  (" << double(samples) / t_parallel
              << " samples/s)  value " << parallel.value << "\n";
    std::cout << "speedup  " << t_serial / t_parallel << "x\n";

    if (serial.value != parallel.value || serial.std_error != parallel.std_error
        || serial.samples != parallel.samples) {
        std::cerr << "serial and parallel results differ\n";
        return 1;
    }
    std::cout << "results bit-identical\n";
    return 0;
}
