#include "swath/roi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swath {

namespace {

struct Swath {
    Ring hull;
    Box box;
    bool axis_aligned = false;
};

Swath make_swath(Point a, Point b, double half) {
    Swath s;
    std::vector<Point> corners;
    corners.reserve(8);
    for (Point p : {a, b})
        for (double dx : {-half, half})
            for (double dy : {-half, half}) corners.push_back({p.x + dx, p.y + dy});
    s.hull = convex_hull(std::move(corners));
    s.box = bounding_box(s.hull);
    s.axis_aligned = (a.x == b.x) || (a.y == b.y);
    return s;
}

// Vertical extent of a convex ring at x, which must not be a vertex abscissa.
bool cross_section(const Ring& poly, double x, double& lo, double& hi) {
    lo = std::numeric_limits<double>::infinity();
    hi = -std::numeric_limits<double>::infinity();
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % n];
        if ((p.x < x) == (q.x < x)) continue;
        const double y = p.y + (x - p.x) * (q.y - p.y) / (q.x - p.x);
        lo = std::min(lo, y);
        hi = std::max(hi, y);
    }
    return hi > lo;
}

// Exact area of a union of convex polygons by vertical slabs. Slab
// boundaries include every vertex and every pairwise edge crossing, so the
// union's cross-section length is linear inside each slab.
double union_area(const std::vector<Ring>& polys) {
    std::vector<double> xs;
    for (const Ring& p : polys)
        for (const Point& v : p) xs.push_back(v.x);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            const Ring& a = polys[i];
            const Ring& b = polys[j];
            for (std::size_t ea = 0; ea < a.size(); ++ea) {
                const Point p = a[ea], r = a[(ea + 1) % a.size()] - a[ea];
                for (std::size_t eb = 0; eb < b.size(); ++eb) {
                    const Point q = b[eb], s = b[(eb + 1) % b.size()] - b[eb];
                    const double denom = cross(r, s);
                    if (denom == 0.0) continue;
                    const double t = cross(q - p, s) / denom;
                    const double u = cross(q - p, r) / denom;
                    if (t > 0 && t < 1 && u > 0 && u < 1) xs.push_back(p.x + t * r.x);
                }
            }
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    double area = 0.0;
    std::vector<std::pair<double, double>> spans;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        const double x0 = xs[k], x1 = xs[k + 1];
        if (!(x1 > x0)) continue;
        const double xm = 0.5 * (x0 + x1);
        spans.clear();
        for (const Ring& p : polys) {
            double lo, hi;
            if (cross_section(p, xm, lo, hi)) spans.emplace_back(lo, hi);
        }
        if (spans.empty()) continue;
        std::sort(spans.begin(), spans.end());
        double len = 0.0;
        double cur_lo = spans.front().first, cur_hi = spans.front().second;
        for (std::size_t i = 1; i < spans.size(); ++i) {
            if (spans[i].first > cur_hi) {
                len += cur_hi - cur_lo;
                cur_lo = spans[i].first;
                cur_hi = spans[i].second;
            } else {
                cur_hi = std::max(cur_hi, spans[i].second);
            }
        }
        len += cur_hi - cur_lo;
        area += (x1 - x0) * len;
    }
    return area;
}

}  // namespace

std::vector<double> coverage_fractions(const CellRegion& region, std::span<const Polyline> trajectories,
                                       double footprint) {
    std::vector<double> fractions(region.size(), 0.0);
    if (region.empty()) return fractions;
    const GridSpec& g = region.grid();
    const double w = g.cell_size;
    const double half = 0.5 * footprint;
    const double cell_area = w * w;
    const CellBounds b = region.bounds();

    // Cell -> index into region order.
    const auto width = static_cast<std::size_t>(b.width());
    std::vector<std::int64_t> slot(width * static_cast<std::size_t>(b.height()), -1);
    auto slot_of = [&](std::int32_t col, std::int32_t row) -> std::int64_t {
        if (col < b.min_col || col > b.max_col || row < b.min_row || row > b.max_row) return -1;
        return slot[static_cast<std::size_t>(row - b.min_row) * width + static_cast<std::size_t>(col - b.min_col)];
    };
    for (std::size_t i = 0; i < region.size(); ++i) {
        const Cell c = region.cells()[i];
        slot[static_cast<std::size_t>(c.row - b.min_row) * width + static_cast<std::size_t>(c.col - b.min_col)] =
            static_cast<std::int64_t>(i);
    }

    std::vector<Swath> swaths;
    for (const Polyline& line : trajectories) {
        if (line.empty()) continue;
        if (line.size() == 1) swaths.push_back(make_swath(line[0], line[0], half));
        for (std::size_t i = 1; i < line.size(); ++i) swaths.push_back(make_swath(line[i - 1], line[i], half));
    }

    std::vector<std::vector<std::uint32_t>> touching(region.size());
    auto col_floor = [&](double x) { return static_cast<std::int32_t>(std::floor((x - g.origin.x) / w)); };
    auto row_floor = [&](double y) { return static_cast<std::int32_t>(std::floor((y - g.origin.y) / w)); };
    for (std::uint32_t s = 0; s < swaths.size(); ++s) {
        const Swath& sw = swaths[s];
        const std::int32_t r0 = std::max(b.min_row, row_floor(sw.box.min_y));
        const std::int32_t r1 = std::min(b.max_row, row_floor(sw.box.max_y));
        for (std::int32_t r = r0; r <= r1; ++r) {
            double x_lo = sw.box.min_x, x_hi = sw.box.max_x;
            if (!sw.axis_aligned) {
                const Ring band = clip_to_box(sw.hull, {sw.box.min_x, g.y_at(r), sw.box.max_x, g.y_at(r + 1)});
                if (band.empty()) continue;
                const Box bb = bounding_box(band);
                x_lo = bb.min_x;
                x_hi = bb.max_x;
            }
            const std::int32_t c0 = std::max(b.min_col, col_floor(x_lo));
            const std::int32_t c1 = std::min(b.max_col, col_floor(x_hi));
            for (std::int32_t c = c0; c <= c1; ++c) {
                const std::int64_t k = slot_of(c, r);
                if (k >= 0) touching[static_cast<std::size_t>(k)].push_back(s);
            }
        }
    }

    std::vector<Ring> pieces;
    for (std::size_t i = 0; i < region.size(); ++i) {
        const Box cb = g.cell_box(region.cells()[i]);
        pieces.clear();
        bool full = false;
        for (std::uint32_t s : touching[i]) {
            const Swath& sw = swaths[s];
            if (sw.axis_aligned && sw.box.contains(cb)) {
                full = true;
                break;
            }
            Ring piece = clip_to_box(sw.hull, cb);
            const double a = std::abs(signed_area(piece));
            if (a <= 1e-15 * cell_area) continue;
            if (a >= cell_area * (1.0 - 1e-12)) {
                full = true;
                break;
            }
            pieces.push_back(convex_hull(std::move(piece)));
        }
        if (full) {
            fractions[i] = 1.0;
        } else if (!pieces.empty()) {
            fractions[i] = std::clamp(union_area(pieces) / cell_area, 0.0, 1.0);
        }
    }
    return fractions;
}

double coverage_ratio(const CellRegion& region, std::span<const Polyline> trajectories,
                      const CoverageParams& params) {
    if (region.empty()) return 1.0;
    const std::vector<double> f = coverage_fractions(region, trajectories, params.footprint);
    const auto covered = std::count_if(f.begin(), f.end(), [&](double v) { return v >= params.alpha - kCoverageSlack; });
    return static_cast<double>(covered) / static_cast<double>(region.size());
}

double coverage_ratio(const CellRegion& region, std::span<const Point> trajectory, const CoverageParams& params) {
    const Polyline line(trajectory.begin(), trajectory.end());
    return coverage_ratio(region, std::span<const Polyline>(&line, 1), params);
}

}  // namespace swath
