#include "swath/router.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "swath/errors.hpp"

namespace swath {

namespace {

void check_table(std::span<const std::vector<SweepCandidate>> table) {
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i].empty())
            throw IncompleteMatrixError("partition " + std::to_string(i) + " has no sweep candidates");
    }
}

void check_chromosome(std::span<const std::vector<SweepCandidate>> table, std::span<const int> order,
                      std::span<const int> choices) {
    const std::size_t n = table.size();
    if (order.size() != n || choices.size() != n) throw ContractError("order/choices size does not match table");
    std::vector<char> seen(n, 0);
    for (int p : order) {
        if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)])
            throw ContractError("order is not a permutation of partition ids");
        seen[static_cast<std::size_t>(p)] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (choices[i] < 0 || static_cast<std::size_t>(choices[i]) >= table[i].size())
            throw ContractError("candidate choice out of range for partition " + std::to_string(i));
    }
}

// Strictly better than `best` beyond a relative tolerance.
bool improves(double value, double best) { return value < best - 1e-9 * std::max(1.0, std::abs(best)); }

}  // namespace

double local_cost(const SweepCandidate& candidate, const CostParams& params) {
    return candidate.length + params.rho * candidate.turns;
}

double connector_cost(Point exit, Point entry) { return distance(exit, entry); }

double plan_cost(std::span<const std::vector<SweepCandidate>> table, std::span<const int> order,
                 std::span<const int> choices, const CostParams& params, std::optional<Point> start) {
    check_chromosome(table, order, choices);
    double total = 0.0;
    const SweepCandidate* prev = nullptr;
    for (int p : order) {
        const SweepCandidate& c = table[static_cast<std::size_t>(p)][static_cast<std::size_t>(choices[static_cast<std::size_t>(p)])];
        if (prev) {
            total += connector_cost(prev->exit, c.entry);
        } else if (start) {
            total += connector_cost(*start, c.entry);
        }
        total += local_cost(c, params);
        prev = &c;
    }
    return total;
}

Polyline stitch(std::span<const std::vector<SweepCandidate>> table, std::span<const int> order,
                std::span<const int> choices, std::vector<Segment>* connectors) {
    check_chromosome(table, order, choices);
    Polyline out;
    if (connectors) connectors->clear();
    for (int p : order) {
        const SweepCandidate& c = table[static_cast<std::size_t>(p)][static_cast<std::size_t>(choices[static_cast<std::size_t>(p)])];
        if (!out.empty() && connectors && !(out.back() == c.entry)) connectors->push_back({out.back(), c.entry});
        for (const Point& q : c.waypoints) {
            if (out.empty() || !(out.back() == q)) out.push_back(q);
        }
    }
    return out;
}

GlobalPlan assemble_plan(std::span<const std::vector<SweepCandidate>> table, std::vector<int> order,
                         std::vector<int> choices, const CostParams& params, std::optional<Point> start) {
    GlobalPlan plan;
    plan.total_cost = plan_cost(table, order, choices, params, start);
    plan.stitched = stitch(table, order, choices, &plan.connectors);
    plan.order = std::move(order);
    plan.choices = std::move(choices);
    return plan;
}

GlobalPlan held_karp(std::span<const std::vector<SweepCandidate>> table, const CostParams& params,
                     const ExactOptions& options, DPStats* stats) {
    const int n = static_cast<int>(table.size());
    if (n > options.max_partitions || n > 30) {
        throw SolverLimitError(std::to_string(n) + " partitions exceed the exact solver limit of " +
                               std::to_string(options.max_partitions));
    }
    check_table(table);
    if (stats) *stats = {};
    if (n == 0) return {};

    // Flatten (partition, candidate) into slots.
    std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        offset[static_cast<std::size_t>(i) + 1] = offset[static_cast<std::size_t>(i)] + static_cast<int>(table[static_cast<std::size_t>(i)].size());
    const int k_slots = offset.back();
    std::vector<int> owner(static_cast<std::size_t>(k_slots));
    std::vector<const SweepCandidate*> slot(static_cast<std::size_t>(k_slots));
    for (int i = 0; i < n; ++i) {
        for (int j = offset[static_cast<std::size_t>(i)]; j < offset[static_cast<std::size_t>(i) + 1]; ++j) {
            owner[static_cast<std::size_t>(j)] = i;
            slot[static_cast<std::size_t>(j)] = &table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - offset[static_cast<std::size_t>(i)])];
        }
    }
    std::vector<double> local(static_cast<std::size_t>(k_slots));
    for (int s = 0; s < k_slots; ++s) local[static_cast<std::size_t>(s)] = local_cost(*slot[static_cast<std::size_t>(s)], params);
    std::vector<double> link(static_cast<std::size_t>(k_slots) * static_cast<std::size_t>(k_slots));
    for (int a = 0; a < k_slots; ++a)
        for (int b = 0; b < k_slots; ++b)
            link[static_cast<std::size_t>(a) * static_cast<std::size_t>(k_slots) + static_cast<std::size_t>(b)] =
                connector_cost(slot[static_cast<std::size_t>(a)]->exit, slot[static_cast<std::size_t>(b)]->entry);

    // cost[S][slot]: cheapest way to run `slot` first and then every other
    // partition of S, where S contains the slot's partition.
    const std::size_t masks = std::size_t{1} << n;
    const auto ks = static_cast<std::size_t>(k_slots);
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> cost(masks * ks, inf);
    std::vector<int> next(masks * ks, -1);
    std::size_t states = 0, transitions = 0;

    for (std::size_t mask = 1; mask < masks; ++mask) {
        double* row = &cost[mask * ks];
        int* succ = &next[mask * ks];
        for (int i = 0; i < n; ++i) {
            if (!(mask >> i & 1U)) continue;
            const std::size_t rest = mask & ~(std::size_t{1} << i);
            const double* rest_row = &cost[rest * ks];
            for (int a = offset[static_cast<std::size_t>(i)]; a < offset[static_cast<std::size_t>(i) + 1]; ++a) {
                ++states;
                if (rest == 0) {
                    row[a] = local[static_cast<std::size_t>(a)];
                    continue;
                }
                const double* la = &link[static_cast<std::size_t>(a) * ks];
                double best = inf;
                int arg = -1;
                for (int b = 0; b < k_slots; ++b) {
                    if (!(rest >> owner[static_cast<std::size_t>(b)] & 1U)) continue;
                    ++transitions;
                    const double v = la[b] + rest_row[b];
                    if (arg < 0 || improves(v, best)) {
                        best = v;
                        arg = b;
                    }
                }
                row[a] = local[static_cast<std::size_t>(a)] + best;
                succ[a] = arg;
            }
        }
    }

    const std::size_t full = masks - 1;
    double best = inf;
    int first = -1;
    for (int a = 0; a < k_slots; ++a) {
        double v = cost[full * ks + static_cast<std::size_t>(a)];
        if (options.start) v += connector_cost(*options.start, slot[static_cast<std::size_t>(a)]->entry);
        if (first < 0 || improves(v, best)) {
            best = v;
            first = a;
        }
    }

    std::vector<int> order, choices(static_cast<std::size_t>(n), 0);
    std::size_t mask = full;
    for (int a = first; a >= 0;) {
        const int i = owner[static_cast<std::size_t>(a)];
        order.push_back(i);
        choices[static_cast<std::size_t>(i)] = a - offset[static_cast<std::size_t>(i)];
        const int b = next[mask * ks + static_cast<std::size_t>(a)];
        mask &= ~(std::size_t{1} << i);
        a = b;
    }
    if (stats) {
        stats->states = states;
        stats->transitions = transitions;
    }
    return assemble_plan(table, std::move(order), std::move(choices), params, options.start);
}

std::vector<Segment> region_row_tracks(const CellRegion& region) {
    std::vector<Segment> tracks;
    const GridSpec& g = region.grid();
    const auto& cells = region.cells();
    for (std::size_t i = 0; i < cells.size();) {
        std::size_t j = i;
        while (j + 1 < cells.size() && cells[j + 1].row == cells[i].row && cells[j + 1].col == cells[j].col + 1) ++j;
        const double y = g.cell_center(cells[i]).y;
        tracks.push_back({{g.x_at(cells[i].col), y}, {g.x_at(cells[j].col + 1), y}});
        i = j + 1;
    }
    return tracks;
}

GlobalPlan nn_baseline(const CellRegion& region, const CostParams& params) {
    const std::vector<Segment> tracks = region_row_tracks(region);
    CandidateTable table;
    table.reserve(tracks.size());
    for (std::size_t t = 0; t < tracks.size(); ++t) {
        const int id = static_cast<int>(t);
        table.push_back({make_candidate(id, Axis::horizontal, Corner::BL, {tracks[t].a, tracks[t].b}),
                         make_candidate(id, Axis::horizontal, Corner::BR, {tracks[t].b, tracks[t].a})});
    }
    if (tracks.empty()) return {};

    // Cells are ordered by (row, col), so track 0's left end is the
    // lowest-leftmost endpoint.
    std::vector<int> order{0}, choices(tracks.size(), 0);
    std::vector<char> used(tracks.size(), 0);
    used[0] = 1;
    Point here = tracks[0].b;
    for (std::size_t step = 1; step < tracks.size(); ++step) {
        double best = std::numeric_limits<double>::infinity();
        int pick = -1, dir = 0;
        for (std::size_t t = 0; t < tracks.size(); ++t) {
            if (used[t]) continue;
            const double da = distance(here, tracks[t].a);
            const double db = distance(here, tracks[t].b);
            if (da < best) {
                best = da;
                pick = static_cast<int>(t);
                dir = 0;
            }
            if (db < best) {
                best = db;
                pick = static_cast<int>(t);
                dir = 1;
            }
        }
        used[static_cast<std::size_t>(pick)] = 1;
        order.push_back(pick);
        choices[static_cast<std::size_t>(pick)] = dir;
        here = dir == 0 ? tracks[static_cast<std::size_t>(pick)].b : tracks[static_cast<std::size_t>(pick)].a;
    }

    GlobalPlan plan = assemble_plan(table, std::move(order), std::move(choices), params);
    // The baseline is scored by the distance it actually flies.
    plan.total_cost = polyline_length(plan.stitched);
    return plan;
}

}  // namespace swath
