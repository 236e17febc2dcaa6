#include <doctest.h>

#include <limits>

#include "oracles.hpp"
#include "swath/errors.hpp"
#include "swath/kinodynamics.hpp"

using namespace swath;

TEST_CASE("trapezoidal closed forms") {
    const MotionLimits m{5.0, 2.5, std::numeric_limits<double>::infinity()};
    CHECK(rest_to_rest_time(10.0, m) == 4.0);
    CHECK(rest_to_rest_time(100.0, m) == 22.0);
    CHECK(rest_to_rest_time(0.0, m) == 0.0);
    // Short hop: triangular profile.
    CHECK(rest_to_rest_time(2.5, m) == doctest::Approx(2.0));
}

TEST_CASE("profiles agree with a bisection oracle") {
    Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const double v = rng.uniform(0.5, 10), a = rng.uniform(0.3, 5);
        const double j = rng.chance(0.2) ? std::numeric_limits<double>::infinity() : rng.uniform(0.2, 20);
        const double d = std::exp(rng.uniform(-5, 6));
        const MotionLimits m{v, a, j};
        CHECK(rest_to_rest_time(d, m) == doctest::Approx(oracle::rest_to_rest_bisect(d, v, a, j)).epsilon(1e-9));
    }
}

TEST_CASE("jerk limit only slows things down") {
    for (double d : {0.01, 0.5, 3.0, 10.0, 80.0}) {
        const double trap = rest_to_rest_time(d, {5, 2.5, std::numeric_limits<double>::infinity()});
        double prev = 0;
        for (double j : {0.5, 2.0, 10.0, 100.0, 1e4, 1e7}) {
            const double s = rest_to_rest_time(d, {5, 2.5, j});
            CHECK(s >= trap * (1 - 1e-12));
            if (prev > 0) CHECK(s <= prev * (1 + 1e-12));
            prev = s;
        }
        CHECK(prev == doctest::Approx(trap).epsilon(1e-3));
    }
}

TEST_CASE("time parameterization of polylines") {
    const MotionLimits m;
    SUBCASE("degenerate inputs") {
        CHECK(time_parameterize(Polyline{}, m).total == 0.0);
        CHECK(time_parameterize(Polyline{{1, 1}}, m).total == 0.0);
        CHECK(time_parameterize(Polyline{{1, 1}, {1, 1}}, m).total == 0.0);
    }
    SUBCASE("collinear runs are one profile") {
        const TimingProfile p = time_parameterize(Polyline{{0, 0}, {40, 0}, {100, 0}}, m);
        CHECK(p.total == 22.0);
        CHECK(p.segment_durations.size() == 1);
        CHECK(p.stop_vertices.empty());
    }
    SUBCASE("turns split the path and add time") {
        const TimingProfile p = time_parameterize(Polyline{{0, 0}, {10, 0}, {10, 10}}, m);
        CHECK(p.segment_durations.size() == 2);
        CHECK(p.stop_vertices == std::vector<std::size_t>{1});
        CHECK(p.total == 8.0);
        double sum = 0;
        for (double t : p.segment_durations) sum += t;
        CHECK(sum == p.total);
    }
    SUBCASE("monotone in turns for a fixed length") {
        // Zig-zag paths of total length 60 with more and more corners.
        double prev = 0;
        for (int corners = 0; corners <= 8; ++corners) {
            Polyline path{{0, 0}};
            const double piece = 60.0 / (corners + 1);
            for (int k = 0; k <= corners; ++k) {
                const Point last = path.back();
                path.push_back(k % 2 == 0 ? Point{last.x + piece, last.y} : Point{last.x, last.y + piece});
            }
            const TimingProfile p = time_parameterize(path, m);
            CHECK(static_cast<int>(p.stop_vertices.size()) == corners);
            CHECK(p.total >= prev);
            prev = p.total;
        }
    }
    SUBCASE("reversal symmetric") {
        const Polyline path{{0, 0}, {7, 0}, {7, 3}, {1, 3}, {1, 9}};
        const Polyline back(path.rbegin(), path.rend());
        CHECK(time_parameterize(path, m).total == doctest::Approx(time_parameterize(back, m).total).epsilon(1e-15));
    }
}

TEST_CASE("limits are validated") {
    CHECK_THROWS_AS(validate(MotionLimits{0, 1, 1}), InvalidSpecError);
    CHECK_THROWS_AS(validate(MotionLimits{1, -1, 1}), InvalidSpecError);
    CHECK_THROWS_AS(validate(MotionLimits{1, 1, 0}), InvalidSpecError);
    CHECK_NOTHROW(validate(MotionLimits{1, 1, std::numeric_limits<double>::infinity()}));
}
