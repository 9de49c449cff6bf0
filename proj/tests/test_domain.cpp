#include <doctest.h>

#include "hartogs/domain.hpp"
#include "hartogs/mc.hpp"

#include <cmath>
#include <set>

using namespace hartogs;

TEST_CASE("contains follows the strict inequalities")
{
    DomainParams d{1, 2};
    CHECK(contains(d, {{0.5}, 0.3}));
    CHECK_FALSE(contains(d, {{0.6}, 0.3}));          // 0.36 > 0.3
    CHECK_FALSE(contains(d, {{0.0}, 0.0}));          // |w| > 0 required
    CHECK_FALSE(contains(d, {{0.1}, 1.0}));          // |w| < 1 strict
    CHECK_FALSE(contains(d, {{Complex(0, 0.6)}, 0.3}));
    CHECK(contains({2, 1}, {{0.3, Complex(0, 0.2)}, 0.5}));
    CHECK_THROWS_AS(contains(d, Point{{0.1, 0.1}, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(validate(DomainParams{0, 1}), std::invalid_argument);
}

TEST_CASE("pair computes the Hermitian pairings")
{
    Point p{{0.5}, 0.6}, q{{0.5}, 0.6};
    PairedArgs ab = pair(p, q);
    CHECK(ab.a.real() == doctest::Approx(0.36));
    CHECK(ab.a.imag() == doctest::Approx(0.0));
    CHECK(ab.b.real() == doctest::Approx(0.25));

    Point r{{Complex(0, 0.3)}, 0.5}, s{{0.3}, 0.5};
    PairedArgs ab2 = pair(r, s);
    CHECK(ab2.b.real() == doctest::Approx(0.0));
    CHECK(ab2.b.imag() == doctest::Approx(0.09));
    CHECK(ab2.a.real() == doctest::Approx(0.25));

    Point z0{{0.0}, 0.5};
    CHECK(pair(z0, s).b == Complex(0.0));
    CHECK_THROWS_AS(pair(p, Point{{0.1, 0.1}, 0.5}), std::invalid_argument);
}

TEST_CASE("pair is conjugate-symmetric")
{
    Point p{{Complex(0.2, 0.1), Complex(-0.1, 0.05)}, Complex(0.5, 0.2)};
    Point q{{Complex(0.1, -0.3), Complex(0.2, 0.02)}, Complex(-0.3, 0.4)};
    PairedArgs pq = pair(p, q), qp = pair(q, p);
    CHECK(pq.a == std::conj(qp.a));
    CHECK(pq.b == std::conj(qp.b));
}

TEST_CASE("self-pairing invariant: b^k < a for interior points")
{
    for (int n : {1, 2}) {
        for (int k : {1, 2, 3}) {
            DomainParams d{n, k};
            Sampler gen(d, 99);
            for (int i = 0; i < 1000; ++i) {
                Point p = gen.next();
                PairedArgs ab = pair(p, p);
                CHECK(ab.a.real() > 0.0);
                CHECK(ab.a.real() < 1.0);
                CHECK(std::pow(ab.b.real(), k) < ab.a.real());
            }
        }
    }
}

TEST_CASE("boundary_distance_weight")
{
    CHECK(boundary_distance_weight({1, 1}, {{0.0}, 0.5}) == doctest::Approx(0.1875));
    CHECK(boundary_distance_weight({1, 2}, {{0.5}, 0.3})
          == doctest::Approx((0.09 - 0.0625) * 0.91));
    CHECK(boundary_distance_weight({1, 1}, {{0.0}, 0.999}) < 0.002);
    CHECK_THROWS_AS(boundary_distance_weight({1, 2}, Point{{0.6}, 0.3}), std::domain_error);
}

TEST_CASE("sampler determinism and membership")
{
    DomainParams d{2, 3};
    auto a = sample_uniform(d, 500, 42);
    auto b = sample_uniform(d, 500, 42);
    auto c = sample_uniform(d, 500, 43);
    REQUIRE(a.size() == 500);
    bool all_equal = true, any_diff_seed = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].w != b[i].w || a[i].z != b[i].z)
            all_equal = false;
        if (a[i].w != c[i].w)
            any_diff_seed = true;
        CHECK(contains(d, a[i]));
    }
    CHECK(all_equal);
    CHECK(any_diff_seed);
    CHECK_THROWS_AS(sample_uniform(d, 0, 1), std::invalid_argument);
}

TEST_CASE("sampler membership across the parameter grid")
{
    for (int n : {1, 2, 3})
        for (int k : {1, 2, 3}) {
            DomainParams d{n, k};
            Sampler gen(d, uint64_t(100 * n + k));
            for (int i = 0; i < 20000; ++i)
                CHECK(contains(d, gen.next()));
        }
}

TEST_CASE("sample mean of |w|^2 matches the radial closed form")
{
    // E|w|^2 = (n+k)/(n+2k) under the uniform law on the domain
    for (int n : {1, 2})
        for (int k : {1, 2, 3}) {
            DomainParams d{n, k};
            const std::size_t N = 200000;
            mc::Estimate est = mc::integrate(
                d, [](const Point& p) { return Complex(std::norm(p.w)); }, N, 4242);
            double vol = domain_volume(d);
            double mean = est.value.real() / vol;
            double se = est.std_error / vol;
            double exact = double(n + k) / double(n + 2 * k);
            INFO("n=", n, " k=", k, " mean=", mean, " exact=", exact);
            CHECK(std::abs(mean - exact) <= 3.0 * se);
        }
}

TEST_CASE("rejection from the bounding product gives the domain volume")
{
    // independent volume oracle: propose w uniform on the disk, z uniform on
    // the unit ball, accept when (z, w) lands inside the domain
    for (int n : {1, 2})
        for (int k : {1, 2}) {
            DomainParams d{n, k};
            mc::BallSampler wgen(1, 7001), zgen(n, 7002);
            const int N = 200000;
            int acc = 0;
            for (int i = 0; i < N; ++i) {
                Complex w = wgen.next()[0];
                Point p{zgen.next(), w};
                if (contains(d, p))
                    ++acc;
            }
            double bound_vol = M_PI * mc::ball_volume(n);
            double est = bound_vol * double(acc) / N;
            double se = bound_vol * std::sqrt(double(acc) / N * (1.0 - double(acc) / N) / N);
            INFO("n=", n, " k=", k, " est=", est, " exact=", domain_volume(d));
            CHECK(std::abs(est - domain_volume(d)) <= 3.5 * se);
        }
}

TEST_CASE("splitmix shard seeds are distinct")
{
    CHECK(splitmix64(0) != splitmix64(1));
    std::set<uint64_t> seen;
    for (uint64_t s = 0; s < 1024; ++s)
        seen.insert(shard_seed(42, s));
    CHECK(seen.size() == 1024);
}

TEST_CASE("cpow_int")
{
    Complex z(0.3, -0.7);
    CHECK(std::abs(cpow_int(z, 5) - std::pow(z, 5)) < 1e-14);
    CHECK(std::abs(cpow_int(z, -3) - 1.0 / (z * z * z)) < 1e-14);
    CHECK(cpow_int(z, 0) == Complex(1.0));
}
