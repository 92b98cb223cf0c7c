#include "doctest.h"

#include <cmath>
#include <random>

#include "padhaus/weights.hpp"
#include "test_util.hpp"

using namespace padhaus;
using testutil::u01;

TEST_SUITE_BEGIN("weights");

TEST_CASE("power-weight classification truth table on the boundary grid") {
    for (int n : {1, 2}) {
        for (double ell : {1.0, 2.0, 3.0}) {
            const double top = n * (ell - 1.0);
            const double grid[] = {-n - 0.1, -n + 0.1, -0.1, 0.0, 0.1, top - 0.1, top + 0.1};
            for (double alpha : grid) {
                const auto cls = classify_power_weight(2, n, alpha, ell);
                bool expected;
                if (alpha <= -n)
                    expected = false;
                else if (ell == 1.0)
                    expected = alpha <= 0.0;
                else
                    expected = alpha < top;
                CAPTURE(n);
                CAPTURE(ell);
                CAPTURE(alpha);
                CHECK(cls.member == expected);
                CHECK(cls.locally_integrable == (alpha > -n));
            }
        }
    }
    // Boundary itself is excluded for ell > 1 and included for ell = 1 at 0.
    CHECK(!classify_power_weight(2, 1, 1.0, 2.0).member);
    CHECK(classify_power_weight(2, 1, 0.0, 1.0).member);
}

TEST_CASE("reverse Hoelder index") {
    CHECK(classify_power_weight(2, 1, -0.5, 2.0).reverse_holder_index == doctest::Approx(2.0));
    CHECK(std::isinf(classify_power_weight(2, 1, 0.5, 2.0).reverse_holder_index));
    CHECK(std::isnan(classify_power_weight(2, 1, -1.5, 2.0).reverse_holder_index));

    // Bracket: |x|^{alpha r} is ball-integrable just below the index and
    // blows up just above it.
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 50; ++trial) {
        const int p = std::vector<int>{2, 3, 5}[rng() % 3];
        const int n = 1 + static_cast<int>(rng() % 2);
        const double alpha = -n + 0.1 + u01(rng) * (n - 0.2);
        const double idx = classify_power_weight(p, n, alpha, 2.0).reverse_holder_index;
        CHECK(idx * alpha == doctest::Approx(-double(n)).epsilon(1e-12));
        CHECK_NOTHROW(weighted_measure(p, n, Region::ball(0), {alpha * idx / 1.01}));
        CHECK_THROWS_AS(weighted_measure(p, n, Region::ball(0), {alpha * idx * 1.01}),
                        NonconvergentSum);
    }
}

TEST_CASE("Muckenhoupt characteristic of power weights") {
    // Constant weight: both means are 1 on every ball.
    CHECK(muckenhoupt_characteristic(2, 1, 0.0, 3.0).to_real(2) ==
          doctest::Approx(1.0).epsilon(1e-14));

    // Closed instance at p=2, n=1, alpha=1, ell=3.
    const double first = 0.5 / 0.75;
    const double second = std::pow(0.5 / (1.0 - std::pow(2.0, -0.5)), 2.0);
    CHECK(muckenhoupt_characteristic(2, 1, 1.0, 3.0).to_real(2) ==
          doctest::Approx(first * second).epsilon(1e-12));

    // Direct summation oracle for a sampled instance.
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 30; ++trial) {
        const int p = std::vector<int>{2, 3}[rng() % 2];
        const int n = 1 + static_cast<int>(rng() % 2);
        const double ell = 1.5 + u01(rng) * 2.0;
        const double alpha = -n + 0.4 + u01(rng) * (n * (ell - 1.0) + n - 0.8);
        if (!classify_power_weight(p, n, alpha, ell).member)
            continue;
        double mean_w = 0.0, mean_d = 0.0;
        const double dual = -alpha / (ell - 1.0);
        for (int theta = -1200; theta <= 0; ++theta) {
            mean_w += std::pow(p, theta * (alpha + n)) * (1.0 - std::pow(p, -n));
            mean_d += std::pow(p, theta * (dual + n)) * (1.0 - std::pow(p, -n));
        }
        const double expected = mean_w * std::pow(mean_d, ell - 1.0);
        CHECK(muckenhoupt_characteristic(p, n, alpha, ell).to_real(p) ==
              doctest::Approx(expected).epsilon(1e-10));
    }

    CHECK_THROWS_AS(muckenhoupt_characteristic(2, 1, 3.0, 2.0), ParameterOutOfRange);
}

TEST_CASE("membership is monotone in ell") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 2);
        const double ell = 1.0 + u01(rng) * 3.0;
        const double alpha = -n - 0.5 + u01(rng) * (n * 4.0);
        const double bigger = ell + u01(rng) * 3.0;
        if (classify_power_weight(3, n, alpha, ell).member)
            CHECK(classify_power_weight(3, n, alpha, bigger).member);
    }
}

TEST_CASE("characteristic diverges toward the membership boundary") {
    double last = 0.0;
    for (int k = 1; k <= 6; ++k) {
        const double alpha = 1.0 * (2.0 - 1.0) - std::pow(10.0, -k); // n(ell-1) = 1
        const double value = muckenhoupt_characteristic(2, 1, alpha, 2.0).to_real(2);
        CHECK(value > last);
        last = value;
    }
    CHECK(last > 1e4);
}

TEST_CASE("sandwich inequality over sampled subsets") {
    // Constant weight: both ratios coincide, constants are about 1.
    const auto flat = check_sandwich(2, 1, 0.0, 2.0, 2.0);
    CHECK(flat.pass);
    CHECK(flat.c_lower <= 1.0 + 1e-12);
    CHECK(flat.c_upper >= 1.0 - 1e-12);
    for (const auto& s : flat.samples)
        CHECK(s.weight_ratio == doctest::Approx(s.measure_ratio).epsilon(1e-12));

    // Closed instance: alpha=1, ell=3, r=3 (the weight is in every RH_r).
    const auto rep = check_sandwich(2, 1, 1.0, 3.0, 3.0);
    CHECK(rep.pass);
    CHECK(rep.c_lower > 0.0);
    CHECK(std::isfinite(rep.c_upper));
    CHECK(rep.samples.size() >= 100);
    for (const auto& s : rep.samples) {
        CHECK(rep.c_lower * std::pow(s.measure_ratio, 3.0) <= s.weight_ratio * (1 + 1e-12));
        CHECK(s.weight_ratio <=
              rep.c_upper * std::pow(s.measure_ratio, 2.0 / 3.0) * (1 + 1e-12));
    }

    CHECK_THROWS_AS(check_sandwich(2, 1, -0.5, 2.0, 3.0), ParameterOutOfRange);
}

TEST_CASE("mean bound over sampled balls and profiles") {
    const SeparableFunction one{RadialProfile::constant(1.0, 2), AngularFactor::constant(1.0)};
    const auto flat = check_mean_bound(2, 1, one, 0.0, 2.0);
    CHECK(flat.pass);
    for (const auto& s : flat.samples) {
        CHECK(s.lhs == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(s.rhs == doctest::Approx(1.0).epsilon(1e-10));
    }

    // Shell indicator at the ball's own radius.
    for (int g : {-3, 0, 2}) {
        const SeparableFunction shell{RadialProfile::finite_window(g, g, {LogScalar::one()}),
                                      AngularFactor::constant(1.0)};
        const auto rep = check_mean_bound(2, 1, shell, 0.0, 2.0, g, g);
        CHECK(rep.pass);
        CHECK(std::isfinite(rep.c_fit));
    }

    const SeparableFunction power{RadialProfile::power_law(-0.3), AngularFactor::constant(1.0)};
    const auto rep = check_mean_bound(2, 1, power, 1.0, 3.0);
    CHECK(rep.pass);
    CHECK(rep.c_fit < 10.0);
    // The fitted constant is stable across ball scales.
    for (const auto& s : rep.samples)
        CHECK(s.lhs <= rep.c_fit * s.rhs * (1 + 1e-12));
}

TEST_SUITE_END();
