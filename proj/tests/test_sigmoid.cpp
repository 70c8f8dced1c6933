#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ccva/sigmoid.hpp"
#include "oracles.hpp"

using ccva::build_endpoint_curve;
using ccva::build_transient_curve;
using ccva::HazardCurve;
using ccva::SigmoidParams;
using ccva::slowest_uniform_curve;

namespace {

SigmoidParams reference_params() {
    SigmoidParams p;
    p.transient = false;
    p.t_start = 10.0;
    p.h_start = 0.0170;
    p.mid = 40.0;
    p.width = 20.0;
    p.buildup = 0.10;
    p.t_end = 80.0;
    p.h_max = 0.25;
    return p;
}

}  // namespace

TEST_CASE("endpoint curve: reference parameter set") {
    const HazardCurve curve = build_endpoint_curve(reference_params());
    const auto& nodes = curve.nodes();
    REQUIRE(nodes.size() == 4);
    CHECK(nodes[0].time == 10.0);
    CHECK(nodes[0].hazard == doctest::Approx(0.0170));
    CHECK(nodes[1].time == 30.0);
    CHECK(nodes[1].hazard == doctest::Approx(0.0403));
    CHECK(nodes[2].time == 50.0);
    CHECK(nodes[2].hazard == doctest::Approx(0.2267));
    CHECK(nodes[3].time == 80.0);
    CHECK(nodes[3].hazard == doctest::Approx(0.25));
}

TEST_CASE("endpoint curve: u = 0 collapses the build-up") {
    SigmoidParams p = reference_params();
    p.buildup = 0.0;
    const HazardCurve curve = build_endpoint_curve(p);
    const auto& nodes = curve.nodes();
    REQUIRE(nodes.size() == 4);
    CHECK(nodes[1].hazard == doctest::Approx(0.0170));  // middle runs h_start -> h_max
    CHECK(nodes[2].hazard == doctest::Approx(0.25));
}

TEST_CASE("endpoint curve: steep final section removes the interior point") {
    SigmoidParams p = reference_params();
    p.t_end = 51.0;  // final section (50 -> 51) steeper than the middle one
    const HazardCurve curve = build_endpoint_curve(p);
    const auto& nodes = curve.nodes();
    REQUIRE(nodes.size() == 3);
    CHECK(nodes[0].time == 10.0);
    CHECK(nodes[1].time == 30.0);
    CHECK(nodes[2].time == 51.0);
    CHECK(nodes[2].hazard == doctest::Approx(0.25));
    // slopes from the middle section on are non-increasing after removal
    const double s1 = (nodes[2].hazard - nodes[1].hazard) / (nodes[2].time - nodes[1].time);
    const double s0 = (nodes[1].hazard - nodes[0].hazard) / (nodes[1].time - nodes[0].time);
    CHECK(s1 >= s0);  // still a ramp up, no terminal jump
}

TEST_CASE("endpoint curve: zero-length final section counts as infinitely steep") {
    SigmoidParams p = reference_params();
    p.mid = 45.0;
    p.width = 70.0;  // middle section spans [10, 80] exactly
    const HazardCurve curve = build_endpoint_curve(p);
    const auto& nodes = curve.nodes();
    REQUIRE(nodes.size() == 3);
    // build-up section has zero length: jump at t_start, then straight to the end
    CHECK(nodes[0].time == 10.0);
    CHECK(nodes[0].hazard == doctest::Approx(0.0170));
    CHECK(nodes[1].time == 10.0);
    CHECK(nodes[1].hazard == doctest::Approx(0.0170 + 0.1 * (0.25 - 0.0170)));
    CHECK(nodes[2].time == 80.0);
    CHECK(nodes[2].hazard == doctest::Approx(0.25));
}

TEST_CASE("endpoint curve: w = 0 leaves a jump across the middle section") {
    SigmoidParams p = reference_params();
    p.width = 0.0;
    const HazardCurve curve = build_endpoint_curve(p);
    const auto& nodes = curve.nodes();
    REQUIRE(nodes.size() == 4);
    CHECK(nodes[1].time == 40.0);
    CHECK(nodes[2].time == 40.0);
    CHECK(nodes[1].hazard < nodes[2].hazard);
    CHECK(curve.hazard_at(40.0) == doctest::Approx(nodes[2].hazard));
}

TEST_CASE("transient curve: reference parameter set") {
    SigmoidParams p = reference_params();
    p.transient = true;
    const HazardCurve curve = build_transient_curve(p);
    const auto& nodes = curve.nodes();
    REQUIRE(nodes.size() == 5);
    CHECK(nodes[0].time == 10.0);
    CHECK(nodes[0].hazard == doctest::Approx(0.0170));
    CHECK(nodes[1].time == 30.0);
    CHECK(nodes[1].hazard == doctest::Approx(0.0403));
    CHECK(nodes[2].time == 40.0);
    CHECK(nodes[2].hazard == doctest::Approx(0.25));
    CHECK(nodes[3].time == 50.0);
    CHECK(nodes[3].hazard == doctest::Approx(0.0403));
    CHECK(nodes[4].time == 80.0);
    CHECK(nodes[4].hazard == doctest::Approx(0.0170));
}

TEST_CASE("transient curve: degenerate stress is flat") {
    SigmoidParams p = reference_params();
    p.transient = true;
    p.h_start = 0.25;
    p.h_max = 0.25;
    const HazardCurve curve = build_transient_curve(p);
    for (const auto& n : curve.nodes()) CHECK(n.hazard == doctest::Approx(0.25));
}

TEST_CASE("builders reject mismatched or invalid parameters") {
    SigmoidParams p = reference_params();
    CHECK_THROWS_AS(build_transient_curve(p), std::invalid_argument);
    p.transient = true;
    CHECK_THROWS_AS(build_endpoint_curve(p), std::invalid_argument);

    SigmoidParams bad = reference_params();
    bad.width = 80.0;  // middle section sticks out both ends
    CHECK_THROWS_AS(build_endpoint_curve(bad), std::invalid_argument);

    bad = reference_params();
    bad.buildup = 0.5;
    CHECK_THROWS_AS(build_endpoint_curve(bad), std::invalid_argument);

    bad = reference_params();
    bad.h_start = 0.30;  // above h_max
    CHECK_THROWS_AS(build_endpoint_curve(bad), std::invalid_argument);

    bad = reference_params();
    bad.h_start.reset();  // unset outside the quote-extension layer
    CHECK_THROWS_AS(build_endpoint_curve(bad), std::invalid_argument);
}

TEST_CASE("slowest uniform curve") {
    const HazardCurve ramp = slowest_uniform_curve(10.0, 0.0166667, 80.0, 0.25);
    // published survival at 30y for the 80y-endpoint ramp: 31.04%
    CHECK(std::abs(100.0 * ramp.survival(30.0) - 31.04) <= 0.2);
    CHECK(ramp.hazard_at(100.0) == doctest::Approx(0.25));  // capped after the endpoint

    const HazardCurve level = slowest_uniform_curve(10.0, 0.02, 80.0, 0.02);
    CHECK(level.survival(37.0) == doctest::Approx(std::exp(-0.02 * 37.0)).epsilon(1e-12));

    // cross-check a short ramp against the dense quadrature oracle
    const HazardCurve fast = slowest_uniform_curve(10.0, 0.0166667, 40.0, 0.25);
    const double oracle = ccva::testing::dense_midpoint(
        [&](double u) { return fast.hazard_at(u); }, 0.0, 20.0);
    CHECK(fast.survival(20.0) == doctest::Approx(std::exp(-oracle)).epsilon(1e-8));

    CHECK_THROWS_AS(slowest_uniform_curve(10.0, 0.02, 10.0, 0.25), std::invalid_argument);
    CHECK_THROWS_AS(slowest_uniform_curve(10.0, 0.25, 80.0, 0.02), std::invalid_argument);
}

TEST_CASE("property: endpoint node hazards are non-decreasing, slopes taper") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> mid_dist(15.0, 75.0);
    std::uniform_real_distribution<double> u_dist(0.0, 0.49);
    std::uniform_real_distribution<double> level(0.0, 0.05);
    for (int trial = 0; trial < 300; ++trial) {
        SigmoidParams p;
        p.t_start = 10.0;
        p.t_end = 80.0;
        p.h_start = level(rng);
        p.h_max = 0.25;
        p.buildup = u_dist(rng);
        p.mid = mid_dist(rng);
        const double max_width =
            2.0 * std::min(p.mid - p.t_start, p.t_end - p.mid);
        p.width = max_width * std::uniform_real_distribution<double>(0.0, 1.0)(rng);

        const HazardCurve curve = build_endpoint_curve(p);
        const auto& nodes = curve.nodes();
        CHECK(nodes.front().time == p.t_start);
        CHECK(nodes.front().hazard == doctest::Approx(*p.h_start));
        CHECK(nodes.back().hazard == doctest::Approx(p.h_max));
        CHECK(curve.hazard_at(p.t_end) == doctest::Approx(p.h_max));

        double prev_slope = std::numeric_limits<double>::infinity();
        bool past_buildup = false;
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            CHECK(nodes[i].hazard <= nodes[i + 1].hazard + 1e-15);
            if (!past_buildup) {  // skip the build-up section, taper applies after it
                past_buildup = true;
                continue;
            }
            if (nodes[i + 1].time == nodes[i].time) continue;
            const double slope =
                (nodes[i + 1].hazard - nodes[i].hazard) / (nodes[i + 1].time - nodes[i].time);
            CHECK(slope <= prev_slope + 1e-12);
            prev_slope = slope;
        }
    }
}

TEST_CASE("property: transient curve is symmetric about the midpoint") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> mid_dist(15.0, 75.0);
    std::uniform_real_distribution<double> u_dist(0.0, 0.49);
    for (int trial = 0; trial < 300; ++trial) {
        SigmoidParams p;
        p.transient = true;
        p.t_start = 10.0;
        p.t_end = 80.0;
        p.h_start = 0.0166667;
        p.h_max = 0.25;
        p.buildup = u_dist(rng);
        p.mid = mid_dist(rng);
        const double max_width = 2.0 * std::min(p.mid - p.t_start, p.t_end - p.mid);
        p.width =
            std::max(0.25, max_width * std::uniform_real_distribution<double>(0.0, 1.0)(rng));

        const HazardCurve curve = build_transient_curve(p);
        const auto& nodes = curve.nodes();
        CHECK(nodes.back().hazard == doctest::Approx(nodes.front().hazard));
        // shoulders share one level
        const double left = curve.hazard_at(p.mid - 0.5 * p.width);
        const double right = curve.hazard_at(p.mid + 0.5 * p.width);
        CHECK(left == doctest::Approx(right));
        CHECK(curve.hazard_at(p.mid) == doctest::Approx(p.h_max));
    }
}
