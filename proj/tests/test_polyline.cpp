#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mollipath/polyline.hpp"

using mollipath::Polyline;
using mollipath::resample_curve;

namespace {
const Polyline kAbs({{-1, 1}, {0, 0}, {1, 1}});
}

TEST_CASE("evaluation hits waypoints, midpoints and the affine extension") {
    CHECK(kAbs.eval(1.0) == std::vector<double>{0, 0});
    CHECK(kAbs.eval(0.5) == std::vector<double>{-0.5, 0.5});
    CHECK(kAbs.eval(-1.0) == std::vector<double>{-2, 2});
    CHECK(kAbs.eval(3.0) == std::vector<double>{2, 2});
    CHECK(kAbs.eval(0.0) == std::vector<double>{-1, 1});
    CHECK(kAbs.eval(2.0) == std::vector<double>{1, 1});
}

TEST_CASE("derivative is the segment slope with right-hand breakpoints") {
    CHECK(kAbs.derivative(0.5) == std::vector<double>{1, -1});
    CHECK(kAbs.derivative(1.5) == std::vector<double>{1, 1});
    CHECK(kAbs.derivative(1.0) == std::vector<double>{1, 1});  // right slope
    CHECK(kAbs.derivative(-5.0) == std::vector<double>{1, -1});
    CHECK(kAbs.derivative(9.0) == std::vector<double>{1, 1});
}

TEST_CASE("length sums segment norms") {
    CHECK(kAbs.length() == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(Polyline({{0, 0}, {3, 4}}).length() == doctest::Approx(5.0));
    const Polyline repeated({{1, 1}, {1, 1}, {4, 5}});
    CHECK(repeated.length() == doctest::Approx(5.0));
    CHECK(repeated.segment_length(1) == 0.0);
    CHECK(repeated.max_segment_length() == doctest::Approx(5.0));
}

TEST_CASE("integer parameters reproduce waypoints exactly") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    std::vector<std::vector<double>> pts(6, std::vector<double>(3));
    for (auto& q : pts)
        for (auto& x : q) x = coord(rng);
    const Polyline pl(pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
        CHECK(pl.eval(static_cast<double>(i)) == pts[i]);
}

TEST_CASE("evaluation is Lipschitz with the max segment length") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-2.0, 2.0), td(-2.0, 7.0);
    std::vector<std::vector<double>> pts(5, std::vector<double>(2));
    for (auto& q : pts)
        for (auto& x : q) x = coord(rng);
    const Polyline pl(pts);
    const double lip = pl.max_segment_length();
    for (int i = 0; i < 300; ++i) {
        const double a = td(rng), b = td(rng);
        const auto va = pl.eval(a), vb = pl.eval(b);
        double d = std::hypot(va[0] - vb[0], va[1] - vb[1]);
        CHECK(d <= lip * std::abs(a - b) + 1e-12);
    }
}

TEST_CASE("derivative equals the chord slope inside a segment") {
    const auto d = kAbs.derivative(0.3);
    const auto a = kAbs.eval(0.3), b = kAbs.eval(0.7);
    CHECK((b[0] - a[0]) / 0.4 == doctest::Approx(d[0]));
    CHECK((b[1] - a[1]) / 0.4 == doctest::Approx(d[1]));
}

TEST_CASE("construction rejects malformed waypoint lists") {
    CHECK_THROWS_AS(Polyline({{1.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Polyline({{1.0}, {1.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Polyline({{}, {}}), std::invalid_argument);
}

TEST_CASE("resample_curve keeps samples or densifies to a target spacing") {
    const std::vector<std::vector<double>> two{{0, 0}, {1, 1}};
    const Polyline id = resample_curve(two, 0.0);
    CHECK(id.num_waypoints() == 2);
    CHECK(id.waypoint(1) == std::vector<double>{1, 1});

    // Unit circle: length converges to the circumference.
    std::vector<std::vector<double>> circle;
    for (int i = 0; i < 1000; ++i) {
        const double a = 2.0 * M_PI * i / 999.0;
        circle.push_back({std::cos(a), std::sin(a)});
    }
    const Polyline dense = resample_curve(circle, 0.01);
    CHECK(dense.length() ==
          doctest::Approx(2.0 * M_PI).epsilon(1e-3));
    CHECK(dense.max_segment_length() <= 0.01 + 1e-12);

    CHECK_THROWS_AS(resample_curve({{0.0, 0.0}}, 0.1), std::invalid_argument);
}
