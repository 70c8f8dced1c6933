#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ccva/termstructures.hpp"
#include "oracles.hpp"

using ccva::DiscountCurve;
using ccva::HazardCurve;
using ccva::HazardNode;
using ccva::SurvivalFn;

TEST_CASE("discount factors from a flat rate") {
    CHECK(DiscountCurve(0.0).discount(7.3) == doctest::Approx(1.0));
    CHECK(DiscountCurve(0.02).discount(10.0) == doctest::Approx(std::exp(-0.2)));
    CHECK(DiscountCurve(0.02).discount(0.0) == 1.0);
    CHECK_THROWS_AS(DiscountCurve(0.02).discount(-1.0), std::invalid_argument);
}

TEST_CASE("hazard interpolation is linear with flat extrapolation") {
    const HazardCurve flat = HazardCurve::flat(0.0166667);
    CHECK(flat.hazard_at(57.0) == doctest::Approx(0.0166667));

    const HazardCurve ramp({{10.0, 0.0166667}, {80.0, 0.25}});
    // 0.0166667 + 35 * (0.25 - 0.0166667) / 70
    CHECK(ramp.hazard_at(45.0) == doctest::Approx(0.1333333).epsilon(1e-6));
    CHECK(ramp.hazard_at(10.0) == doctest::Approx(0.0166667));
    CHECK(ramp.hazard_at(3.0) == doctest::Approx(0.0166667));   // flat before
    CHECK(ramp.hazard_at(120.0) == doctest::Approx(0.25));      // flat after
}

TEST_CASE("cumulative hazard is the exact trapezoid integral") {
    const HazardCurve flat = HazardCurve::flat(0.0166667);
    CHECK(flat.cumulative_hazard(10.0) == doctest::Approx(0.166667));
    CHECK(flat.cumulative_hazard(0.0) == 0.0);

    // slowest-uniform ramp to the 80y endpoint: published survival at 20y is
    // 60.55%, continuous conventions give 60.65% (Lambda = 0.5 exactly);
    // the convention slack is absorbed by the 0.2pp tolerance.
    const HazardCurve ramp({{10.0, 0.0166667}, {80.0, 0.25}});
    CHECK(ramp.cumulative_hazard(20.0) == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(100.0 * ramp.survival(20.0) == doctest::Approx(60.55).epsilon(0.0035));

    // two-node closed form to machine precision
    const HazardCurve seg({{1.0, 0.10}, {3.0, 0.30}});
    const double expected = 0.10 * 1.0 + 0.5 * (0.10 + 0.30) * 2.0;
    CHECK(seg.cumulative_hazard(3.0) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("survival probabilities for the flat 100bps curve") {
    const HazardCurve flat = HazardCurve::flat(0.01 / 0.6);
    CHECK(100.0 * flat.survival(10.0) == doctest::Approx(84.65).epsilon(1e-4));
    CHECK(100.0 * flat.survival(30.0) == doctest::Approx(60.65).epsilon(1e-4));
    CHECK(flat.survival(0.0) == 1.0);
}

TEST_CASE("jump nodes: zero-width segments carry no hazard mass") {
    const HazardCurve jump({{0.0, 0.01}, {10.0, 0.01}, {10.0, 0.05}, {20.0, 0.05}});
    CHECK(jump.hazard_at(9.999) == doctest::Approx(0.01));
    CHECK(jump.hazard_at(10.0) == doctest::Approx(0.05));  // right-continuous
    CHECK(jump.cumulative_hazard(10.0) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(jump.cumulative_hazard(20.0) == doctest::Approx(0.1 + 0.5).epsilon(1e-15));
    CHECK_THROWS_AS(
        HazardCurve({{10.0, 0.1}, {10.0, 0.2}, {10.0, 0.3}}), std::invalid_argument);
}

TEST_CASE("curve validation") {
    CHECK_THROWS_AS(HazardCurve({}), std::invalid_argument);
    CHECK_THROWS_AS(HazardCurve({{2.0, 0.1}, {1.0, 0.1}}), std::invalid_argument);
    CHECK_THROWS_AS(HazardCurve({{1.0, -0.1}}), std::invalid_argument);
    CHECK_THROWS_AS(HazardCurve({{-1.0, 0.1}}), std::invalid_argument);
}

TEST_CASE("survival function view") {
    const HazardCurve ramp({{10.0, 0.02}, {40.0, 0.10}});
    const SurvivalFn s(ramp);
    CHECK(s(25.0) == doctest::Approx(ramp.survival(25.0)));
    CHECK(s.default_density(25.0) ==
          doctest::Approx(ramp.hazard_at(25.0) * ramp.survival(25.0)));
}

TEST_CASE("property: survival is non-increasing on random curves") {
    std::mt19937 rng(20240117);
    std::uniform_real_distribution<double> horizon(0.0, 120.0);
    for (int trial = 0; trial < 200; ++trial) {
        const HazardCurve curve = ccva::testing::random_hazard_curve(rng);
        double t1 = horizon(rng), t2 = horizon(rng);
        if (t1 > t2) std::swap(t1, t2);
        const double s1 = curve.survival(t1);
        const double s2 = curve.survival(t2);
        CHECK(s2 <= s1 + 1e-15);
        CHECK(s1 <= 1.0);
        CHECK(s2 > 0.0);
    }
}

TEST_CASE("property: cumulative hazard matches dense midpoint quadrature") {
    std::mt19937 rng(987654321);
    std::uniform_real_distribution<double> horizon(1.0, 110.0);
    for (int trial = 0; trial < 100; ++trial) {
        const HazardCurve curve = ccva::testing::random_hazard_curve(rng);
        const double t = horizon(rng);
        const double exact = curve.cumulative_hazard(t);
        const double oracle = ccva::testing::dense_midpoint(
            [&](double u) { return curve.hazard_at(u); }, 0.0, t);
        CHECK(exact == doctest::Approx(oracle).epsilon(1e-8));
    }
}
