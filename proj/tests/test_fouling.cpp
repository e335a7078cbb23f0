#include <cmath>

#include <doctest.h>

#include "hensched/fouling.hpp"

using namespace hensched;

namespace {

ExchangerGeometry sample_geometry() {
    ExchangerGeometry g;
    g.area_m2 = 240.0;
    g.d_outer_m = 0.025;
    g.d_inner_m = 0.02;
    g.wall_conductivity_w_mk = 45.0;
    g.h_tube_w_m2k = 1000.0;
    g.h_shell_w_m2k = 800.0;
    return g;
}

}  // namespace

TEST_CASE("fouling_resistance: fresh surface, half-asymptote, asymptote") {
    const FoulingParams p{0.002, 0.1};
    CHECK(fouling_resistance(p, 0.0) == 0.0);
    CHECK(fouling_resistance(p, std::log(2.0) / 0.1) == doctest::Approx(0.001).epsilon(1e-12));
    CHECK(fouling_resistance(p, 1e6) == doctest::Approx(0.002).epsilon(1e-12));
}

TEST_CASE("fouling_resistance: monotone and bounded by the asymptote") {
    const FoulingParams p{0.0031, 0.17};
    double prev = 0.0;
    for (double t = 0.5; t < 60.0; t += 0.5) {
        const double r = fouling_resistance(p, t);
        CHECK(r >= prev);
        CHECK(r < p.asymptote_m2kw);
        prev = r;
    }
}

TEST_CASE("resistance_timeline: uncleaned trajectory") {
    const FoulingParams p{0.002, 0.1};
    const auto tl = resistance_timeline(p, {}, 10);
    for (int t = 1; t <= 10; ++t) {
        CHECK(tl.values[t - 1] == doctest::Approx(0.002 * (1.0 - std::exp(-0.1 * t))));
    }
}

TEST_CASE("resistance_timeline: clock resets after a cleaning month") {
    const FoulingParams p{0.002, 0.1};
    const auto tl = resistance_timeline(p, {5}, 10);
    CHECK(tl.values[4] == 0.0);  // offline during the clean month
    CHECK(tl.values[5] == doctest::Approx(tl.values[0]).epsilon(1e-12));
}

TEST_CASE("resistance_timeline: two cleanings, direct evaluation between them") {
    const FoulingParams p{0.002, 0.1};
    const auto tl = resistance_timeline(p, {5, 10}, 10);
    CHECK(tl.values[8] == doctest::Approx(0.002 * (1.0 - std::exp(-0.4))).epsilon(1e-12));
    CHECK(tl.values[9] == 0.0);
}

TEST_CASE("resistance_timeline: periodic under a regular cleaning cadence") {
    const FoulingParams p{0.0025, 0.22};
    const int d = 6;
    const auto tl = resistance_timeline(p, {6, 12, 18, 24, 30, 36, 42}, 44);
    for (int t = d + 1; t <= 44; ++t) {
        if (t % d == 0) continue;
        const int phase = t % d;
        CHECK(tl.values[t - 1] == doctest::Approx(tl.values[phase - 1]).epsilon(1e-12));
    }
}

TEST_CASE("effective_ua: clean UA and composition with overall_u") {
    const auto g = sample_geometry();
    CHECK(effective_ua(g, 0.0) == doctest::Approx(g.area_m2 * overall_u(g, 0.0, 0.0)));
    const double a = 0.002;
    CHECK(effective_ua(g, a) == doctest::Approx(g.area_m2 * overall_u(g, a, 0.0)).epsilon(1e-15));
}

TEST_CASE("effective_ua: strictly decreasing in fouling resistance, vanishing limit") {
    const auto g = sample_geometry();
    double prev = effective_ua(g, 0.0);
    for (double r = 0.001; r <= 0.1; r += 0.001) {
        const double ua = effective_ua(g, r);
        CHECK(ua < prev);
        prev = ua;
    }
    CHECK(effective_ua(g, 1e9) < 1e-3);
}
