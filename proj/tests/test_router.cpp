#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "swath/errors.hpp"
#include "swath/router.hpp"

using namespace swath;

namespace {

SweepCandidate fixed(int id, Point entry, Point exit, double length, int turns = 0) {
    SweepCandidate c;
    c.partition_id = id;
    c.entry = entry;
    c.exit = exit;
    c.length = length;
    c.turns = turns;
    c.waypoints = {entry, exit};
    return c;
}

CandidateTable scaled(const CandidateTable& t, double s) {
    CandidateTable out = t;
    for (auto& row : out) {
        for (SweepCandidate& c : row) {
            c.entry = s * c.entry;
            c.exit = s * c.exit;
            c.length *= s;
            for (Point& p : c.waypoints) p = s * p;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("local and connector costs") {
    CHECK(local_cost(fixed(0, {0, 0}, {0, 0}, 30.0, 6), CostParams{0.0}) == 30.0);
    CHECK(local_cost(fixed(0, {0, 0}, {0, 0}, 100.0, 10), CostParams{0.15}) == doctest::Approx(101.5));
    CHECK(local_cost(fixed(0, {0, 0}, {0, 0}, 0.0, 0), CostParams{}) == 0.0);
    CHECK(connector_cost({0, 0}, {3, 4}) == 5.0);
    CHECK(connector_cost({2, 2}, {2, 2}) == 0.0);
    CHECK(connector_cost({1, 1}, {4, 5}) == 5.0);
}

TEST_CASE("held-karp small cases") {
    SUBCASE("single partition") {
        const CandidateTable t{{fixed(0, {0, 0}, {1, 0}, 10.0)}};
        const GlobalPlan plan = held_karp(t, CostParams{0.0});
        CHECK(plan.total_cost == 10.0);
        CHECK(plan.order == std::vector<int>{0});
    }
    SUBCASE("two partitions with asymmetric connectors") {
        // A exits at (0,0); B enters 3 away from it. B exits 5 away from A's entry.
        const CandidateTable t{{fixed(0, {0, 5}, {0, 0}, 10.0)}, {fixed(1, {3, 0}, {0, 10}, 12.0)}};
        const GlobalPlan plan = held_karp(t, CostParams{0.0});
        CHECK(plan.order == std::vector<int>{0, 1});
        CHECK(plan.total_cost == doctest::Approx(25.0));
    }
    SUBCASE("limit") {
        Rng rng(1);
        const CandidateTable t = oracle::random_table(rng, 6, 2);
        CHECK_THROWS_AS(held_karp(t, CostParams{}, ExactOptions{5, std::nullopt}), SolverLimitError);
    }
    SUBCASE("missing candidates") {
        const CandidateTable t{{fixed(0, {0, 0}, {1, 0}, 1.0)}, {}};
        CHECK_THROWS_AS(held_karp(t, CostParams{}), IncompleteMatrixError);
    }
}

TEST_CASE("held-karp equals exhaustive enumeration") {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.range(1, 6);
        const CandidateTable t = oracle::random_table(rng, n, 4);
        const double rho = rng.uniform(0.0, 2.0);
        DPStats stats;
        const GlobalPlan plan = held_karp(t, CostParams{rho}, {}, &stats);
        const oracle::BruteResult brute = oracle::brute_force_route(t, rho);
        CHECK(plan.total_cost == doctest::Approx(brute.cost).epsilon(1e-9));
        CHECK(plan_cost(t, plan.order, plan.choices, CostParams{rho}) == doctest::Approx(plan.total_cost).epsilon(1e-12));
        std::size_t m = 0;
        for (const auto& row : t) m = std::max(m, row.size());
        CHECK(stats.states <= (std::size_t{1} << n) * static_cast<std::size_t>(n) * m);
    }
}

TEST_CASE("optimality ordering dp <= ga <= arbitrary") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = rng.range(2, 7);
        const CandidateTable t = oracle::random_table(rng, n, 4);
        const CostParams params{0.15};
        const double dp = held_karp(t, params).total_cost;
        GAConfig cfg(1000 + static_cast<std::uint64_t>(trial));
        cfg.population = 120;
        cfg.generations = 80;
        const GlobalPlan ga = ga_route(t, cfg);
        CHECK(ga.total_cost == doctest::Approx(ga_fitness(t, ga.order, ga.choices, cfg.lambda_turns)));
        CHECK(dp <= ga.total_cost * (1 + 1e-12));
        std::vector<int> order(static_cast<std::size_t>(n)), choices(static_cast<std::size_t>(n), 0);
        std::iota(order.begin(), order.end(), 0);
        CHECK(ga.total_cost <= plan_cost(t, order, choices, params) * (1 + 1e-12));
    }
}

TEST_CASE("genetic route is seeded and near optimal") {
    Rng rng(31);
    int close = 0;
    const int runs = 20;
    for (int trial = 0; trial < runs; ++trial) {
        const CandidateTable t = oracle::random_table(rng, rng.range(1, 7), 4);
        const double best = held_karp(t, CostParams{0.15}).total_cost;
        const GlobalPlan ga = ga_route(t, GAConfig(static_cast<std::uint64_t>(trial)));
        if (ga.total_cost <= best * 1.02) ++close;
        const GlobalPlan again = ga_route(t, GAConfig(static_cast<std::uint64_t>(trial)));
        CHECK(again.order == ga.order);
        CHECK(again.choices == ga.choices);
    }
    CHECK(close >= runs * 95 / 100);
}

TEST_CASE("relabeling and scaling leave the optimum alone") {
    Rng rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = rng.range(2, 6);
        const CandidateTable t = oracle::random_table(rng, n, 3);
        const CostParams params{0.15};
        const GlobalPlan base = held_karp(t, params);

        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm.begin(), perm.end());
        CandidateTable relabeled(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) relabeled[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = t[static_cast<std::size_t>(i)];
        CHECK(held_karp(relabeled, params).total_cost == doctest::Approx(base.total_cost).epsilon(1e-12));

        const GlobalPlan big = held_karp(scaled(t, 3.0), CostParams{0.45});
        CHECK(big.total_cost == doctest::Approx(3.0 * base.total_cost).epsilon(1e-12));
        CHECK(big.order == base.order);
        CHECK(big.choices == base.choices);
    }
}

TEST_CASE("fixed start adds the lead-in") {
    const CandidateTable t{{fixed(0, {10, 0}, {11, 0}, 1.0)}, {fixed(1, {0, 0}, {1, 0}, 1.0)}};
    const GlobalPlan free = held_karp(t, CostParams{0.0});
    const GlobalPlan anchored = held_karp(t, CostParams{0.0}, ExactOptions{15, Point{20, 0}});
    CHECK(free.order == std::vector<int>{1, 0});
    CHECK(anchored.total_cost == doctest::Approx(plan_cost(t, anchored.order, anchored.choices, CostParams{0.0}, Point{20, 0})));
}

TEST_CASE("stitching") {
    SUBCASE("single partition is unchanged") {
        SweepCandidate c = fixed(0, {0, 0}, {4, 1}, 0.0);
        c.waypoints = {{0, 0}, {4, 0}, {4, 1}};
        const CandidateTable t{{c}};
        std::vector<Segment> conns;
        CHECK(stitch(t, std::vector<int>{0}, std::vector<int>{0}, &conns) == c.waypoints);
        CHECK(conns.empty());
    }
    SUBCASE("coincident exit and entry adds no connector") {
        const CandidateTable t{{fixed(0, {0, 0}, {2, 0}, 2.0)}, {fixed(1, {2, 0}, {2, 3}, 3.0)}};
        std::vector<Segment> conns;
        const Polyline p = stitch(t, std::vector<int>{0, 1}, std::vector<int>{0, 0}, &conns);
        CHECK(conns.empty());
        CHECK(p == Polyline{{0, 0}, {2, 0}, {2, 3}});
    }
    SUBCASE("three partitions: length is local lengths plus connectors") {
        Rng rng(8);
        const CandidateTable raw = oracle::random_table(rng, 3, 1);
        CandidateTable t = raw;
        for (auto& row : t)
            for (SweepCandidate& c : row) c.length = distance(c.entry, c.exit);
        const std::vector<int> order{2, 0, 1}, choices{0, 0, 0};
        std::vector<Segment> conns;
        const Polyline p = stitch(t, order, choices, &conns);
        double expected = 0;
        for (const auto& row : t) expected += row[0].length;
        expected += distance(t[2][0].exit, t[0][0].entry) + distance(t[0][0].exit, t[1][0].entry);
        CHECK(polyline_length(p) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(conns.size() == 2);
    }
}

TEST_CASE("nearest-neighbour baseline") {
    SUBCASE("rectangle gives a serpentine") {
        const CellRegion r = oracle::from_rows({"####", "####", "####"});
        const GlobalPlan plan = nn_baseline(r, CostParams{});
        const Polyline expected{{0, 0.5}, {4, 0.5}, {4, 1.5}, {0, 1.5}, {0, 2.5}, {4, 2.5}};
        CHECK(plan.stitched == expected);
        CHECK(plan.total_cost == doctest::Approx(14.0));
        CHECK(count_turns(plan.stitched) == 4);
    }
    SUBCASE("two distant blobs are finished one at a time") {
        std::vector<std::string> rows(3, std::string(40, '.'));
        for (auto& row : rows) {
            std::fill(row.begin(), row.begin() + 3, '#');
            std::fill(row.end() - 3, row.end(), '#');
        }
        const CellRegion r = oracle::from_rows(rows);
        const GlobalPlan plan = nn_baseline(r, CostParams{});
        const std::vector<Segment> tracks = region_row_tracks(r);
        REQUIRE(plan.order.size() == 6);
        // The first three visited tracks all belong to the left blob.
        for (int k = 0; k < 3; ++k) CHECK(tracks[static_cast<std::size_t>(plan.order[static_cast<std::size_t>(k)])].a.x == 0.0);
    }
    SUBCASE("never empty") {
        const CellRegion r = oracle::from_rows({"#"});
        CHECK_FALSE(nn_baseline(r, CostParams{}).stitched.empty());
    }
}
