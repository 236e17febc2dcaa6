#include "swath/roi.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numbers>

#include "swath/errors.hpp"

namespace swath {

namespace {

bool finite_ring(const Ring& ring) {
    return std::all_of(ring.begin(), ring.end(),
                       [](Point p) { return std::isfinite(p.x) && std::isfinite(p.y); });
}

bool rings_touch(const Ring& a, const Ring& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (segments_intersect(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()])) return true;
    return false;
}

void check_simple(const Ring& ring, const std::string& what) {
    if (ring.size() < 3) throw InvalidSpecError(what + " needs at least 3 vertices");
    if (!finite_ring(ring)) throw InvalidSpecError(what + " has non-finite coordinates");
    if (ring_self_intersects(ring)) throw InvalidSpecError(what + " is not simple");
    if (signed_area(ring) == 0.0) throw InvalidSpecError(what + " has zero area");
}

}  // namespace

void validate_roi(const PolygonROI& roi) {
    const std::string tag = "polygon '" + roi.id + "'";
    check_simple(roi.outer, tag + " outer ring");
    if (signed_area(roi.outer) < 0) throw InvalidSpecError(tag + " outer ring must be counterclockwise");
    for (std::size_t h = 0; h < roi.holes.size(); ++h) {
        const Ring& hole = roi.holes[h];
        const std::string htag = tag + " hole " + std::to_string(h);
        check_simple(hole, htag);
        if (signed_area(hole) > 0) throw InvalidSpecError(htag + " must be clockwise");
        if (rings_touch(hole, roi.outer)) throw InvalidSpecError(htag + " touches the outer ring");
        if (!point_in_ring(hole.front(), roi.outer)) throw InvalidSpecError(htag + " lies outside the outer ring");
        for (std::size_t k = 0; k < h; ++k) {
            const Ring& other = roi.holes[k];
            if (rings_touch(hole, other) || point_in_ring(hole.front(), other) ||
                point_in_ring(other.front(), hole))
                throw InvalidSpecError(htag + " overlaps hole " + std::to_string(k));
        }
    }
}

PolygonROI make_roi(std::string id, Ring outer, std::vector<Ring> holes) {
    if (signed_area(outer) < 0) std::reverse(outer.begin(), outer.end());
    for (Ring& h : holes)
        if (signed_area(h) > 0) std::reverse(h.begin(), h.end());
    PolygonROI roi{std::move(id), std::move(outer), std::move(holes)};
    validate_roi(roi);
    return roi;
}

double footprint_width(const FootprintSpec& spec) {
    const bool camera = spec.altitude.has_value() || spec.half_angle.has_value();
    if (camera == spec.width.has_value())
        throw InvalidSpecError("footprint needs exactly one of {altitude + half_angle} or width");
    if (spec.width) {
        if (!(*spec.width > 0) || !std::isfinite(*spec.width))
            throw InvalidSpecError("footprint width must be positive");
        return *spec.width;
    }
    if (!spec.altitude || !spec.half_angle) throw InvalidSpecError("camera footprint needs altitude and half_angle");
    const double h = *spec.altitude;
    const double half = *spec.half_angle;
    if (!(h > 0) || !std::isfinite(h)) throw InvalidSpecError("altitude must be positive");
    if (!(half > 0) || !(half < std::numbers::pi / 2)) throw InvalidSpecError("half_angle must lie in (0, pi/2)");
    return 2.0 * h * std::tan(half);
}

Box GridSpec::cell_box(Cell c) const {
    return {x_at(c.col), y_at(c.row), x_at(c.col + 1), y_at(c.row + 1)};
}

Point GridSpec::cell_center(Cell c) const { return {x_at(c.col + 0.5), y_at(c.row + 0.5)}; }

Box GridSpec::bounds() const { return {origin.x, origin.y, x_at(columns), y_at(rows)}; }

GridSpec default_grid(const PolygonROI& roi, double w) {
    if (!(w > 0)) throw InvalidSpecError("cell size must be positive");
    const Box box = bounding_box(roi.outer);
    GridSpec g;
    g.cell_size = w;
    g.origin = {std::floor(box.min_x / w) * w, std::floor(box.min_y / w) * w};
    g.columns = std::max<std::int32_t>(1, static_cast<std::int32_t>(std::ceil((box.max_x - g.origin.x) / w)));
    g.rows = std::max<std::int32_t>(1, static_cast<std::int32_t>(std::ceil((box.max_y - g.origin.y) / w)));
    while (g.x_at(g.columns) < box.max_x) ++g.columns;
    while (g.y_at(g.rows) < box.max_y) ++g.rows;
    return g;
}

CellRegion::CellRegion(GridSpec grid, std::vector<Cell> cells, std::string component_id)
    : grid_(grid), cells_(std::move(cells)), component_id_(std::move(component_id)) {
    if (!(grid_.cell_size > 0)) throw InvalidSpecError("cell size must be positive");
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    for (const Cell& c : cells_) {
        if (!grid_.in_bounds(c))
            throw InvalidSpecError("cell (" + std::to_string(c.col) + "," + std::to_string(c.row) +
                                   ") outside grid");
    }
    if (!cells_.empty()) {
        bounds_ = {std::numeric_limits<std::int32_t>::max(), cells_.front().row,
                   std::numeric_limits<std::int32_t>::min(), cells_.back().row};
        for (const Cell& c : cells_) {
            bounds_.min_col = std::min(bounds_.min_col, c.col);
            bounds_.max_col = std::max(bounds_.max_col, c.col);
        }
    }
}

bool CellRegion::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

CellRegion CellRegion::with_id(std::string id) const {
    CellRegion copy = *this;
    copy.component_id_ = std::move(id);
    return copy;
}

CellMask::CellMask(const CellRegion& region) : b_(region.bounds()) {
    if (region.empty()) return;
    bits_.assign(static_cast<std::size_t>(b_.width()) * static_cast<std::size_t>(b_.height()), 0);
    for (const Cell& c : region.cells()) bits_[index(c.col, c.row)] = 1;
}

RasterResult rasterize_with_diagnostics(const PolygonROI& roi, const GridSpec& grid) {
    if (!(grid.cell_size > 0)) throw InvalidSpecError("cell size must be positive");
    const Box outer_box = bounding_box(roi.outer);
    const Box gb = grid.bounds();
    if (!gb.contains(outer_box)) throw InvalidSpecError("grid does not contain polygon '" + roi.id + "'");

    const double w = grid.cell_size;
    const double cell_area = w * w;
    const double eps = 1e-9 * cell_area;

    auto col_of = [&](double x) { return static_cast<std::int32_t>(std::floor((x - grid.origin.x) / w)); };
    auto row_of = [&](double y) { return static_cast<std::int32_t>(std::floor((y - grid.origin.y) / w)); };
    const std::int32_t c0 = std::max(0, col_of(outer_box.min_x) - 1);
    const std::int32_t c1 = std::min(grid.columns - 1, col_of(outer_box.max_x) + 1);
    const std::int32_t r0 = std::max(0, row_of(outer_box.min_y) - 1);
    const std::int32_t r1 = std::min(grid.rows - 1, row_of(outer_box.max_y) + 1);

    std::vector<Box> hole_boxes;
    for (const Ring& h : roi.holes) hole_boxes.push_back(bounding_box(h));

    std::vector<Cell> kept;
    std::vector<Cell> partial;
    for (std::int32_t r = r0; r <= r1; ++r) {
        for (std::int32_t c = c0; c <= c1; ++c) {
            const Cell cell{c, r};
            const Box cb = grid.cell_box(cell);
            if (cb.max_x <= outer_box.min_x || cb.min_x >= outer_box.max_x || cb.max_y <= outer_box.min_y ||
                cb.min_y >= outer_box.max_y)
                continue;
            if (std::abs(signed_area(clip_to_box(roi.outer, cb))) <= eps) continue;
            bool inside_hole = false;
            bool touches_hole = false;
            for (std::size_t h = 0; h < roi.holes.size() && !inside_hole; ++h) {
                const Box& hb = hole_boxes[h];
                if (cb.max_x <= hb.min_x || cb.min_x >= hb.max_x || cb.max_y <= hb.min_y || cb.min_y >= hb.max_y)
                    continue;
                const double a = std::abs(signed_area(clip_to_box(roi.holes[h], cb)));
                if (a >= cell_area - eps)
                    inside_hole = true;
                else if (a > eps)
                    touches_hole = true;
            }
            if (inside_hole) continue;
            kept.push_back(cell);
            if (touches_hole) partial.push_back(cell);
        }
    }
    if (kept.empty()) throw EmptyRegionError("polygon '" + roi.id + "' retains no cells");
    return {CellRegion(grid, std::move(kept), roi.id), std::move(partial)};
}

CellRegion rasterize(const PolygonROI& roi, const GridSpec& grid) {
    return rasterize_with_diagnostics(roi, grid).region;
}

std::vector<CellRegion> connected_components(const CellRegion& region) {
    std::vector<CellRegion> out;
    if (region.empty()) return out;
    const CellBounds b = region.bounds();
    const auto width = static_cast<std::size_t>(b.width());
    auto idx = [&](Cell c) {
        return static_cast<std::size_t>(c.row - b.min_row) * width + static_cast<std::size_t>(c.col - b.min_col);
    };
    // 0 = empty, 1 = unvisited, 2 = visited
    std::vector<std::uint8_t> state(width * static_cast<std::size_t>(b.height()), 0);
    for (const Cell& c : region.cells()) state[idx(c)] = 1;

    std::deque<Cell> queue;
    for (const Cell& seed : region.cells()) {
        if (state[idx(seed)] != 1) continue;
        std::vector<Cell> comp;
        state[idx(seed)] = 2;
        queue.push_back(seed);
        while (!queue.empty()) {
            const Cell c = queue.front();
            queue.pop_front();
            comp.push_back(c);
            const Cell nbrs[4] = {{c.col + 1, c.row}, {c.col - 1, c.row}, {c.col, c.row + 1}, {c.col, c.row - 1}};
            for (const Cell& n : nbrs) {
                if (n.col < b.min_col || n.col > b.max_col || n.row < b.min_row || n.row > b.max_row) continue;
                auto& s = state[idx(n)];
                if (s == 1) {
                    s = 2;
                    queue.push_back(n);
                }
            }
        }
        const std::string id = region.component_id().empty()
                                   ? "c" + std::to_string(out.size())
                                   : region.component_id() + "/c" + std::to_string(out.size());
        out.emplace_back(region.grid(), std::move(comp), id);
    }
    return out;
}

bool is_connected(const CellRegion& region) { return connected_components(region).size() <= 1; }

namespace {

struct Lattice {
    std::int32_t x;
    std::int32_t y;
    friend bool operator==(const Lattice&, const Lattice&) = default;
    friend auto operator<=>(const Lattice& a, const Lattice& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

struct DirEdge {
    Lattice from;
    Lattice to;
    bool used = false;
};

}  // namespace

RegionOutline trace_outline(const CellRegion& region) {
    RegionOutline out;
    if (region.empty()) return out;
    const CellMask mask(region);

    std::vector<DirEdge> edges;
    for (const Cell& c : region.cells()) {
        const std::int32_t x = c.col, y = c.row;
        if (!mask.test(x, y - 1)) edges.push_back({{x, y}, {x + 1, y}});
        if (!mask.test(x + 1, y)) edges.push_back({{x + 1, y}, {x + 1, y + 1}});
        if (!mask.test(x, y + 1)) edges.push_back({{x + 1, y + 1}, {x, y + 1}});
        if (!mask.test(x - 1, y)) edges.push_back({{x, y + 1}, {x, y}});
    }
    std::sort(edges.begin(), edges.end(), [](const DirEdge& a, const DirEdge& b) {
        if (a.from != b.from) return a.from < b.from;
        return a.to < b.to;
    });
    std::multimap<Lattice, std::size_t> outgoing;
    for (std::size_t i = 0; i < edges.size(); ++i) outgoing.emplace(edges[i].from, i);

    const GridSpec& g = region.grid();
    for (std::size_t start = 0; start < edges.size(); ++start) {
        if (edges[start].used) continue;
        std::vector<Lattice> loop;
        std::size_t cur = start;
        while (!edges[cur].used) {
            DirEdge& e = edges[cur];
            e.used = true;
            loop.push_back(e.from);
            const std::int32_t dx = e.to.x - e.from.x, dy = e.to.y - e.from.y;
            // Prefer left, then straight, then right: diagonal contacts stay separate.
            const std::int32_t prefs[3][2] = {{-dy, dx}, {dx, dy}, {dy, -dx}};
            std::size_t next = cur;
            const auto [lo, hi] = outgoing.equal_range(e.to);
            for (const auto& pref : prefs) {
                for (auto it = lo; it != hi; ++it) {
                    const DirEdge& cand = edges[it->second];
                    if (cand.used && it->second != start) continue;
                    if (cand.to.x - cand.from.x == pref[0] && cand.to.y - cand.from.y == pref[1]) {
                        next = it->second;
                        break;
                    }
                }
                if (next != cur) break;
            }
            if (next == cur || next == start) break;
            cur = next;
        }
        // Drop collinear vertices, then rotate to start at the lowest-leftmost vertex.
        std::vector<Lattice> simple;
        const std::size_t n = loop.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Lattice& p = loop[(i + n - 1) % n];
            const Lattice& q = loop[i];
            const Lattice& r = loop[(i + 1) % n];
            const long long turn = static_cast<long long>(q.x - p.x) * (r.y - q.y) -
                                   static_cast<long long>(q.y - p.y) * (r.x - q.x);
            const long long dot = static_cast<long long>(q.x - p.x) * (r.x - q.x) +
                                  static_cast<long long>(q.y - p.y) * (r.y - q.y);
            if (turn != 0 || dot < 0) simple.push_back(q);
        }
        std::rotate(simple.begin(), std::min_element(simple.begin(), simple.end()), simple.end());
        Ring ring;
        ring.reserve(simple.size());
        for (const Lattice& v : simple) ring.push_back({g.x_at(v.x), g.y_at(v.y)});
        if (signed_area(ring) > 0)
            out.outers.push_back(std::move(ring));
        else
            out.holes.push_back(std::move(ring));
    }
    return out;
}

}  // namespace swath
