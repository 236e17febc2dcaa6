#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swath/geometry.hpp"

namespace swath {

/// Polygonal region of interest in meters. Outer ring counterclockwise,
/// holes clockwise; see make_roi().
struct PolygonROI {
    std::string id;
    Ring outer;
    std::vector<Ring> holes;
};

/// Builds a ROI, normalizing ring orientation, and checks that the outer ring
/// is simple, every hole is simple and strictly inside the outer ring, and
/// holes are pairwise disjoint. Throws InvalidSpecError otherwise.
PolygonROI make_roi(std::string id, Ring outer, std::vector<Ring> holes = {});
void validate_roi(const PolygonROI& roi);

/// Either a camera model (altitude + FOV half-angle) or a direct width.
struct FootprintSpec {
    std::optional<double> altitude;
    std::optional<double> half_angle;
    std::optional<double> width;

    static FootprintSpec from_width(double w) { return {std::nullopt, std::nullopt, w}; }
    static FootprintSpec from_camera(double altitude, double half_angle) {
        return {altitude, half_angle, std::nullopt};
    }
};

/// w = 2 h tan(phi/2), or the direct width.
double footprint_width(const FootprintSpec& spec);

struct Cell {
    std::int32_t col = 0;
    std::int32_t row = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell& a, const Cell& b) {
        if (auto c = a.row <=> b.row; c != 0) return c;
        return a.col <=> b.col;
    }
};

struct GridSpec {
    Point origin;
    double cell_size = 1.0;
    std::int32_t columns = 0;
    std::int32_t rows = 0;

    bool in_bounds(Cell c) const { return c.col >= 0 && c.row >= 0 && c.col < columns && c.row < rows; }
    Box cell_box(Cell c) const;
    Point cell_center(Cell c) const;
    Box bounds() const;
    double x_at(double col_line) const { return origin.x + col_line * cell_size; }
    double y_at(double row_line) const { return origin.y + row_line * cell_size; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Grid with cell size w whose origin is the ROI bounding-box minimum floored
/// to a multiple of w, just large enough to contain the outer ring.
GridSpec default_grid(const PolygonROI& roi, double w);

/// Inclusive cell index bounds.
struct CellBounds {
    std::int32_t min_col = 0;
    std::int32_t min_row = 0;
    std::int32_t max_col = -1;
    std::int32_t max_row = -1;

    std::int32_t width() const { return max_col - min_col + 1; }
    std::int32_t height() const { return max_row - min_row + 1; }
};

/// Immutable set of grid cells, sorted by (row, col).
class CellRegion {
public:
    CellRegion() = default;
    CellRegion(GridSpec grid, std::vector<Cell> cells, std::string component_id = {});

    const GridSpec& grid() const { return grid_; }
    std::span<const Cell> cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(Cell c) const;
    const CellBounds& bounds() const { return bounds_; }
    const std::string& component_id() const { return component_id_; }
    CellRegion with_id(std::string id) const;

    friend bool operator==(const CellRegion& a, const CellRegion& b) {
        return a.grid_ == b.grid_ && a.cells_ == b.cells_;
    }

private:
    GridSpec grid_;
    std::vector<Cell> cells_;
    CellBounds bounds_;
    std::string component_id_;
};

/// Dense occupancy over a region's bounding box, for neighbor queries.
class CellMask {
public:
    explicit CellMask(const CellRegion& region);

    bool test(std::int32_t col, std::int32_t row) const {
        if (col < b_.min_col || col > b_.max_col || row < b_.min_row || row > b_.max_row) return false;
        return bits_[index(col, row)] != 0;
    }
    const CellBounds& bounds() const { return b_; }

private:
    std::size_t index(std::int32_t col, std::int32_t row) const {
        return static_cast<std::size_t>(row - b_.min_row) * static_cast<std::size_t>(b_.width()) +
               static_cast<std::size_t>(col - b_.min_col);
    }
    CellBounds b_;
    std::vector<std::uint8_t> bits_;
};

struct RasterResult {
    CellRegion region;
    /// Retained cells that partially overlap a hole.
    std::vector<Cell> hole_boundary_cells;
};

/// Keeps every cell whose closed square meets the outer polygon with positive
/// area, minus cells lying entirely inside some hole. Throws EmptyRegionError
/// when nothing is retained.
RasterResult rasterize_with_diagnostics(const PolygonROI& roi, const GridSpec& grid);
CellRegion rasterize(const PolygonROI& roi, const GridSpec& grid);

/// Maximal 4-connected components ordered by their first (row, col) cell.
std::vector<CellRegion> connected_components(const CellRegion& region);

bool is_connected(const CellRegion& region);

/// Rectilinear boundary rings of a cell set in meters. Counterclockwise outer
/// rings, clockwise holes; diagonal contacts are kept apart.
struct RegionOutline {
    std::vector<Ring> outers;
    std::vector<Ring> holes;
};
RegionOutline trace_outline(const CellRegion& region);

struct CoverageParams {
    double alpha = 0.99;
    double footprint = 1.0;
};

/// Covered fraction of each region cell (in region order) under the union of
/// swaths swept by a w x w footprint along every polyline.
std::vector<double> coverage_fractions(const CellRegion& region, std::span<const Polyline> trajectories,
                                       double footprint);

/// Fraction of cells whose covered area fraction reaches alpha.
double coverage_ratio(const CellRegion& region, std::span<const Point> trajectory, const CoverageParams& params);
double coverage_ratio(const CellRegion& region, std::span<const Polyline> trajectories,
                      const CoverageParams& params);

inline constexpr double kCoverageSlack = 1e-9;

}  // namespace swath
