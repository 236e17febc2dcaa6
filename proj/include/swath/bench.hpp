#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swath/decomposer.hpp"
#include "swath/kinodynamics.hpp"
#include "swath/roi.hpp"
#include "swath/router.hpp"
#include "swath/sweeper.hpp"

namespace swath {

// ---- corpus ---------------------------------------------------------------

enum class Family { rect, u, l, comb, staircase, ring, blob, branched };

std::string to_string(Family family);
Family family_from_string(const std::string& name);
const std::vector<Family>& all_families();

/// Deterministic parametric polygon corpus. Polygon k uses family
/// families[k % families.size()]; sizes are multiples of `w` between 6w and 36w.
std::vector<PolygonROI> generate_corpus(std::uint64_t seed, std::span<const Family> families, int count,
                                        double w = 1.0);
std::vector<PolygonROI> generate_corpus(std::uint64_t seed, int count, double w = 1.0);

// ---- pipelines ------------------------------------------------------------

enum class Decomposer { ours, bcd, none };
enum class Optimizer { dp, ga, nn };

std::string to_string(Decomposer d);
std::string to_string(Optimizer o);

struct PipelineSpec {
    std::string name;
    Decomposer decomposer = Decomposer::ours;
    Optimizer optimizer = Optimizer::dp;
};

/// Throws InvalidSpecError unless `none` is paired with `nn` and vice versa.
void validate(const PipelineSpec& spec);

/// OURS, OURS-GA, BCD-DP, BCD-GA, NN.
const std::vector<PipelineSpec>& standard_pipelines();
PipelineSpec pipeline_by_name(const std::string& name);

struct PlannerConfig {
    FootprintSpec footprint = FootprintSpec::from_width(1.0);
    double alpha = 0.99;
    CostParams cost;
    MotionLimits motion;
    int exact_limit = 15;
    /// GA settings; the seed field is replaced by `seed` below.
    GAConfig ga{1};
    std::uint64_t seed = 1;
    /// Where coverage-failure diagnostics are dumped.
    std::filesystem::path diagnostics_root = std::filesystem::temp_directory_path() / "swath-diagnostics";
};

void validate(const PlannerConfig& config);

struct BenchmarkRecord {
    std::string polygon;
    std::string pipeline;
    double length = 0.0;    ///< stitched path length L, meters
    int turns = 0;          ///< turns K on the stitched path
    double time = 0.0;      ///< execution time T, seconds
    int partitions = 0;
    double plan_ms = 0.0;   ///< wall-clock planning time
    double coverage = 0.0;
    bool valid = false;
    std::string note;
};

struct PipelineResult {
    BenchmarkRecord record;
    GridSpec grid;
    CellRegion region;              ///< full rasterized region
    PartitionSet partitions;        ///< all components, ids global
    std::vector<CutLine> cuts;
    std::vector<GapBand> bands;
    CandidateTable candidates;
    GlobalPlan plan;
    TimingProfile timing;
};

/// Cross-pipeline path cost L + rho * K on the stitched path.
double path_cost(const BenchmarkRecord& record, const CostParams& params);

/// rasterize -> decompose/merge (or BCD) -> candidates -> route -> stitch ->
/// time -> coverage. Throws CoverageError after writing an SVG and partition
/// JSON under config.diagnostics_root when coverage falls below alpha.
PipelineResult run_pipeline(const PolygonROI& roi, const PipelineSpec& spec, const PlannerConfig& config);

/// The partition stage alone, for every connected component of `region`.
PartitionSet partition_region(const CellRegion& region, Decomposer decomposer,
                              DecompositionTrace* trace = nullptr);

// ---- metrics --------------------------------------------------------------

/// (m - m_min) / m_min. Throws ContractError if m_min <= 0 or m < m_min.
double overhead(double m, double m_min);

struct PipelineSummary {
    std::string pipeline;
    double mu_time = 0.0;
    double mu_length = 0.0;
    double mu_turns = 0.0;
    int wins = 0;
    int top3 = 0;
};

struct OverheadEntry {
    std::string polygon;
    std::string pipeline;
    std::optional<double> time;
    std::optional<double> length;
    std::optional<double> turns;
};

struct OverheadTable {
    std::vector<OverheadEntry> entries;  ///< polygon-major, pipelines in first-seen order
    std::vector<PipelineSummary> rows;   ///< sorted by mu_time ascending
    /// (polygon, metric) cells left out of the means because the best value is 0.
    int skipped = 0;
};

/// Throws IncompleteMatrixError unless every (polygon, pipeline) pair occurs
/// exactly once.
OverheadTable aggregate(std::span<const BenchmarkRecord> records);

/// Shortest round-trip decimal form.
std::string format_number(double value);

void write_records_csv(std::ostream& out, std::span<const BenchmarkRecord> records);
std::vector<BenchmarkRecord> read_records_csv(std::istream& in);

void write_summary_csv(std::ostream& out, const OverheadTable& table);
/// Fixed-width text table of percentages, for terminals.
std::string format_summary(const OverheadTable& table);

}  // namespace swath
