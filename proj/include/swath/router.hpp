#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "swath/geometry.hpp"
#include "swath/roi.hpp"
#include "swath/sweeper.hpp"

namespace swath {

struct CostParams {
    double rho = 0.15;  ///< meters per turn
};

/// Candidate lists indexed by partition id.
using CandidateTable = std::vector<std::vector<SweepCandidate>>;

/// L + rho * T
double local_cost(const SweepCandidate& candidate, const CostParams& params);

/// Straight-line distance from one partition's exit to the next entry.
double connector_cost(Point exit, Point entry);

struct GlobalPlan {
    std::vector<int> order;    ///< partition ids in visit order
    std::vector<int> choices;  ///< candidate index per partition id
    double total_cost = 0.0;
    Polyline stitched;
    std::vector<Segment> connectors;
};

/// Sum of local costs plus connector costs along the order (plus the lead-in
/// from `start` when given).
double plan_cost(std::span<const std::vector<SweepCandidate>> table, std::span<const int> order,
                 std::span<const int> choices, const CostParams& params, std::optional<Point> start = std::nullopt);

/// Chosen candidates joined by straight connectors; connectors of zero length
/// are omitted and consecutive duplicate points collapsed.
Polyline stitch(std::span<const std::vector<SweepCandidate>> table, std::span<const int> order,
                std::span<const int> choices, std::vector<Segment>* connectors = nullptr);

GlobalPlan assemble_plan(std::span<const std::vector<SweepCandidate>> table, std::vector<int> order,
                         std::vector<int> choices, const CostParams& params,
                         std::optional<Point> start = std::nullopt);

struct ExactOptions {
    int max_partitions = 15;
    /// Adds the lead-in distance from this point to the first entry.
    std::optional<Point> start;
};

struct DPStats {
    std::size_t states = 0;       ///< reachable (S, i, j) states evaluated
    std::size_t transitions = 0;  ///< predecessor/successor relaxations
};

/// Exact joint minimizer of candidate choice and visit order (open tour) by
/// subset dynamic programming. Among equal-cost plans the lexicographically
/// smallest (partition, candidate) visit sequence wins. Throws
/// SolverLimitError above ExactOptions::max_partitions.
GlobalPlan held_karp(std::span<const std::vector<SweepCandidate>> table, const CostParams& params,
                     const ExactOptions& options = {}, DPStats* stats = nullptr);

struct GAConfig {
    explicit GAConfig(std::uint64_t seed_) : seed(seed_) {}

    std::uint64_t seed;
    double lambda_turns = 0.15;
    int population = 450;
    int generations = 350;
    double elite_fraction = 0.05;
    int tournament_size = 4;
    double p_mut_order = 0.30;
    double p_mut_choice = 0.40;
    double p_crossover = 0.9;
};

/// J(r) = sum L + sum D + lambda * sum T for a chromosome (order, choices).
double ga_fitness(std::span<const std::vector<SweepCandidate>> table, std::span<const int> order,
                  std::span<const int> choices, double lambda_turns);

GlobalPlan ga_route(std::span<const std::vector<SweepCandidate>> table, const GAConfig& config);

/// Greedy nearest-endpoint chaining of the undecomposed horizontal track set.
/// Each row run is a pseudo-partition with candidates 0 (left to right) and
/// 1 (right to left).
GlobalPlan nn_baseline(const CellRegion& region, const CostParams& params);

/// The row-run tracks nn_baseline chains, bottom-to-top then left-to-right.
std::vector<Segment> region_row_tracks(const CellRegion& region);

}  // namespace swath
