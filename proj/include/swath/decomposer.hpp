#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "swath/geometry.hpp"
#include "swath/roi.hpp"

namespace swath {

enum class Axis { horizontal, vertical };

std::string to_string(Axis axis);

/// One probe line through the middle of a grid row (horizontal) or column
/// (vertical), with the occupied spans it crosses.
struct ProbeLine {
    double coordinate = 0.0;
    std::int32_t index = 0;   ///< grid row or column
    double band_low = 0.0;    ///< grid line below/left of the probe
    double band_high = 0.0;   ///< grid line above/right of the probe
    std::vector<std::pair<double, double>> intervals;
};

struct AxisProbe {
    Axis axis = Axis::horizontal;
    std::vector<ProbeLine> lines;
};

/// Cross-section of the region around a probe line that crosses it more than once.
struct GapBand {
    Axis axis = Axis::horizontal;
    double low = 0.0;
    double high = 0.0;
    Box bounding_box;
};

struct GapReport {
    Axis axis = Axis::horizontal;
    double severity = 0.0;
    std::vector<GapBand> bands;
};

struct CutLine {
    Axis axis = Axis::horizontal;
    double coordinate = 0.0;       ///< meters, on a grid line
    std::int32_t grid_line = 0;    ///< row (horizontal cut) or column (vertical cut) line index
    double raw_coordinate = 0.0;   ///< unsnapped band midpoint
};

struct AxisSet {
    bool horizontal = false;
    bool vertical = false;

    bool empty() const { return !horizontal && !vertical; }
    bool contains(Axis a) const { return a == Axis::horizontal ? horizontal : vertical; }
    std::vector<Axis> list() const;
    friend bool operator==(const AxisSet&, const AxisSet&) = default;
};

struct Partition {
    int id = 0;
    CellRegion region;
    AxisSet feasible_axes;
    std::vector<int> neighbors;
};

struct PartitionSet {
    std::vector<Partition> partitions;
    CellRegion source_region;
};

AxisProbe axis_probe(const CellRegion& region, Axis axis);

/// Every probe line crosses the region in exactly one interval.
bool is_monotone(const AxisProbe& probe);

/// Axes along which the region is monotone; empty means it must be cut.
AxisSet feasibility(const CellRegion& region);

/// Sum of inter-interval gaps over all probe lines, plus the bands where they occur.
GapReport gap_severity(const AxisProbe& probe);

/// Cut through the middle of the union of gap bands on the axis with the
/// larger severity (horizontal on ties), snapped to the nearest grid line
/// strictly inside the region's bounding box, ties toward the lower line.
/// Throws CutError when the region has no interior grid line on that axis.
CutLine select_cut(const CellRegion& region, const GapReport& horizontal, const GapReport& vertical);

/// Cut on the grid line bounding the first gap band of the report.
CutLine fallback_cut(const CellRegion& region, const GapReport& report);

/// Cells strictly below/left of the cut, and the rest.
std::pair<CellRegion, CellRegion> split_region(const CellRegion& region, const CutLine& cut);

/// Orders parts by first cell, assigns ids, feasible axes and edge-sharing neighbors.
PartitionSet make_partition_set(const CellRegion& source, std::vector<CellRegion> parts);

struct DecompositionTrace {
    std::vector<CutLine> cuts;
    std::vector<GapBand> bands;
};

/// Recursive gap-severity-guided decomposition of a connected region into
/// uniaxially monotone partitions (before merging).
PartitionSet decompose(const CellRegion& region, DecompositionTrace* trace = nullptr);

/// Repeatedly merges the adjacent pair whose union is monotone along some axis,
/// largest combined size first, until no such pair remains.
PartitionSet merge_pass(const PartitionSet& parts);

/// Grid-native boustrophedon decomposition: cells open, close, split and merge
/// at connectivity events of a row-by-row sweep.
PartitionSet bcd_decompose(const CellRegion& region);

}  // namespace swath
