#include <doctest.h>

#include "hartogs/regularity.hpp"

#include <cmath>

using namespace hartogs;

TEST_CASE("critical interval: pinned values, conjugacy, and the Schur route")
{
    CriticalInterval iv11 = critical_interval(1, 1);
    CHECK(iv11.lower == Rational(4, 3));
    CHECK(iv11.upper == Rational(4));

    for (int k = 1; k <= 12; ++k)
        for (int n = 1; n <= 12; ++n) {
            CriticalInterval iv = critical_interval(k, n);
            CHECK(iv.lower > 1);
            CHECK(iv.lower < 2);
            CHECK(iv.upper > 2);
            // endpoints are Holder conjugate
            CHECK(Rational(1) / iv.lower + Rational(1) / iv.upper == 1);
            CHECK(holder_conjugate(iv.lower) == iv.upper);
            // the Schur exponent range maps onto the same interval exactly
            CriticalInterval sv = schur_to_interval(k, n);
            CHECK(sv.lower == iv.lower);
            CHECK(sv.upper == iv.upper);
        }

    CHECK_THROWS_AS(critical_interval(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(holder_conjugate(Rational(1)), std::domain_error);
    CHECK(holder_conjugate(Rational(2)) == Rational(2));
}

TEST_CASE("membership classifier agrees with its Holder dual")
{
    for (int k : {1, 2, 3, 5, 12})
        for (int n : {1, 2, 3, 12}) {
            CriticalInterval iv = critical_interval(k, n);
            Rational probes[] = {iv.lower - Rational(1, 100), iv.lower, iv.lower + Rational(1, 100),
                                 Rational(2), iv.upper - Rational(1, 100), iv.upper,
                                 iv.upper + Rational(1, 100)};
            for (const Rational& p : probes) {
                if (p <= 1)
                    continue;
                CHECK(lp_bounded(k, n, p) == lp_bounded(k, n, holder_conjugate(p)));
            }
            // endpoints excluded
            CHECK_FALSE(lp_bounded(k, n, iv.lower));
            CHECK_FALSE(lp_bounded(k, n, iv.upper));
            CHECK(lp_bounded(k, n, Rational(2)));
        }
}

TEST_CASE("test function: minimal exponents and the projection constant")
{
    TestFunctionSpec s11 = test_function(1, 1);
    CHECK(s11.l == 1);
    CHECK(s11.m == 0);
    CHECK(s11.C == doctest::Approx(0.5).epsilon(1e-13));

    TestFunctionSpec s23 = test_function(2, 3);
    CHECK(s23.l == 2);
    CHECK(s23.m == 0);

    TestFunctionSpec s32 = test_function(3, 2);
    CHECK(s32.l == 2);
    CHECK(s32.m == 2);

    for (int k = 1; k <= 12; ++k)
        for (int n = 1; n <= 12; ++n) {
            TestFunctionSpec s = test_function(k, n);
            CHECK(s.m >= 0);
            CHECK(s.m < k); // minimality of l
            CHECK(s.m + long(k) * (1 - s.l) == 1 - long(n));
            CHECK(in_lambda({n, k}, {s.m, -s.l}));
            CHECK(s.C > 0);
            CHECK(std::isfinite(s.C));
        }
}

TEST_CASE("divergence exponent and its crossing")
{
    TestFunctionSpec s11 = test_function(1, 1);
    for (double p : {1.0, 2.0, 3.5, 4.0, 6.0})
        CHECK(divergence_exponent(1, 1, s11, p) == doctest::Approx(3.0 - p).epsilon(1e-15));
    CHECK(divergence_crossing(1, 1, s11) == Rational(4));
    CHECK(divergence_exponent(1, 1, s11, 2.0) > -1.0);
    CHECK_THROWS_AS(divergence_exponent(1, 1, s11, 0.5), std::domain_error);

    TestFunctionSpec s32 = test_function(3, 2);
    CHECK(divergence_crossing(3, 2, s32) == Rational(5, 2));

    // the crossing is exactly the upper endpoint of the critical interval
    for (int k = 1; k <= 12; ++k)
        for (int n = 1; n <= 12; ++n)
            CHECK(divergence_crossing(k, n, test_function(k, n))
                  == critical_interval(k, n).upper);
}

TEST_CASE("truncated norm: monotone in delta with the right small-delta behavior")
{
    for (int k : {1, 2, 3})
        for (int n : {1, 2}) {
            TestFunctionSpec s = test_function(k, n);
            double pc = static_cast<double>(divergence_crossing(k, n, s));

            double prev = 0;
            for (double delta : {0.5, 0.1, 0.01, 1e-4}) {
                double v = truncated_lp_norm(k, n, s, 2.0, delta);
                CHECK(v >= prev);
                prev = v;
            }

            // below the crossing the truncation converges (Cauchy tail;
            // the tail scale is delta^{2/k}, slowest at k = 3)
            double a = truncated_lp_norm(k, n, s, 2.0, 1e-6);
            double b = truncated_lp_norm(k, n, s, 2.0, 1e-7);
            CHECK(std::abs(b - a) / b <= 2e-4);

            // above the crossing it blows up like a power of 1/delta
            double p_hi = pc + 0.5;
            double t = divergence_exponent(k, n, s, p_hi) + 1.0; // < 0
            double r = truncated_lp_norm(k, n, s, p_hi, 5e-9)
                     / truncated_lp_norm(k, n, s, p_hi, 1e-8);
            CHECK(std::abs(r / std::pow(2.0, -t) - 1.0) <= 0.01);
        }

    // exactly at the crossing the growth is logarithmic
    TestFunctionSpec s11 = test_function(1, 1);
    double c1 = truncated_lp_norm(1, 1, s11, 4.0, 1e-4) / std::log(1e4);
    double c2 = truncated_lp_norm(1, 1, s11, 4.0, 1e-8) / std::log(1e8);
    CHECK(c1 == doctest::Approx(c2).epsilon(1e-12));

    CHECK_THROWS_AS(truncated_lp_norm(1, 1, s11, 2.0, 0.0), std::domain_error);
}

TEST_CASE("projected test function: truth transforms correctly, MC agrees")
{
    TestFunctionSpec s11 = test_function(1, 1);
    Point at{{Complex(0.2, 0.1)}, Complex(0.55, 0.1)};

    // w-rotation equivariance of the closed form: f ~ w^{-l}
    double theta = 0.7;
    Point rotated = at;
    rotated.w *= std::polar(1.0, theta);
    Complex lhs = projected_test_function_truth(s11, rotated);
    Complex rhs = std::polar(1.0, -double(s11.l) * theta)
                * projected_test_function_truth(s11, at);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));

    IntegralEstimate est = project_test_function(1, 1, s11, at, 200000, 4242);
    Complex truth = projected_test_function_truth(s11, at);
    CHECK(std::abs(est.value - truth) <= 3.5 * est.std_error);

    TestFunctionSpec s22 = test_function(2, 2);
    Point at22{{Complex(0.25, 0.05), Complex(-0.1, 0.2)}, Complex(0.6, -0.15)};
    IntegralEstimate est22 = project_test_function(2, 2, s22, at22, 200000, 4243);
    Complex truth22 = projected_test_function_truth(s22, at22);
    CHECK(std::abs(est22.value - truth22) <= 3.5 * est22.std_error);

    // m > 0 kills the projection along z_1 = 0
    TestFunctionSpec s32 = test_function(3, 2);
    Point axis{{Complex(0.0, 0.0), Complex(0.2, 0.1)}, Complex(0.5, 0.2)};
    CHECK(projected_test_function_truth(s32, axis) == Complex(0.0));

    CHECK_THROWS_AS(
        project_test_function(1, 1, s11, Point{{Complex(0.9, 0)}, Complex(0.3, 0)}, 10, 1),
        std::domain_error);
}

TEST_CASE("Schur ratio: admissible range and finite sample values")
{
    CHECK(schur_eps_min(1, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(schur_eps_max(1, 1) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(schur_eps_min(2, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(schur_eps_max(2, 1) == doctest::Approx(1.0).epsilon(1e-15));

    Point at{{Complex(0.2, 0.1)}, Complex(0.55, 0.1)};
    CHECK_THROWS_AS(schur_ratio(1, 1, 0.4, at, 10, 1), std::domain_error);
    CHECK_THROWS_AS(schur_ratio(1, 1, 1.5, at, 10, 1), std::domain_error);

    // a convergent cell: k=2, n=1 admits eps in [0.5, 1)
    Point at21{{Complex(0.15, 0.1)}, Complex(0.5, 0.2)};
    IntegralEstimate r = schur_ratio(2, 1, 0.6, at21, 100000, 777);
    CHECK(std::isfinite(r.value.real()));
    CHECK(r.value.real() > 0);
    CHECK(r.std_error > 0);

    // eps >= 1 cells are finite-sample regression values but must not blow up
    IntegralEstimate r11 = schur_ratio(1, 1, 1.0, at, 100000, 778);
    CHECK(std::isfinite(r11.value.real()));
    CHECK(r11.value.real() > 0);
}
