#include "swath/geometry.hpp"

#include <algorithm>
#include <limits>

namespace swath {

double signed_area(std::span<const Point> ring) {
    const std::size_t n = ring.size();
    if (n < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % n];
        twice += p.x * q.y - q.x * p.y;
    }
    return 0.5 * twice;
}

Box bounding_box(std::span<const Point> points) {
    Box box{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const Point& p : points) {
        box.min_x = std::min(box.min_x, p.x);
        box.min_y = std::min(box.min_y, p.y);
        box.max_x = std::max(box.max_x, p.x);
        box.max_y = std::max(box.max_y, p.y);
    }
    return box;
}

bool point_in_ring(Point p, std::span<const Point> ring) {
    bool inside = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = ring[i];
        const Point& b = ring[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) inside = !inside;
        }
    }
    return inside;
}

namespace {

int orientation(Point a, Point b, Point c) {
    const double v = cross(b - a, c - a);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

bool on_segment(Point a, Point b, Point p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Point p1, Point p2, Point q1, Point q2) {
    const int o1 = orientation(p1, p2, q1);
    const int o2 = orientation(p1, p2, q2);
    const int o3 = orientation(q1, q2, p1);
    const int o4 = orientation(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

bool ring_self_intersects(std::span<const Point> ring) {
    const std::size_t n = ring.size();
    if (n < 3) return true;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a1 = ring[i];
        const Point a2 = ring[(i + 1) % n];
        if (a1 == a2) return true;
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_intersect(a1, a2, ring[j], ring[(j + 1) % n])) return true;
        }
    }
    return false;
}

namespace {

// One Sutherland-Hodgman pass against the half-plane sign * (coord - bound) <= 0.
template <typename Inside, typename Intersect>
Ring clip_pass(const Ring& input, Inside inside, Intersect intersect) {
    Ring out;
    if (input.empty()) return out;
    out.reserve(input.size() + 4);
    Point prev = input.back();
    bool prev_in = inside(prev);
    for (const Point& cur : input) {
        const bool cur_in = inside(cur);
        if (cur_in) {
            if (!prev_in) out.push_back(intersect(prev, cur));
            out.push_back(cur);
        } else if (prev_in) {
            out.push_back(intersect(prev, cur));
        }
        prev = cur;
        prev_in = cur_in;
    }
    return out;
}

Point at_x(Point a, Point b, double x) {
    const double t = (x - a.x) / (b.x - a.x);
    return {x, a.y + t * (b.y - a.y)};
}

Point at_y(Point a, Point b, double y) {
    const double t = (y - a.y) / (b.y - a.y);
    return {a.x + t * (b.x - a.x), y};
}

}  // namespace

Ring clip_to_box(std::span<const Point> ring, const Box& box) {
    Ring r(ring.begin(), ring.end());
    r = clip_pass(
        r, [&](Point p) { return p.x >= box.min_x; },
        [&](Point a, Point b) { return at_x(a, b, box.min_x); });
    r = clip_pass(
        r, [&](Point p) { return p.x <= box.max_x; },
        [&](Point a, Point b) { return at_x(a, b, box.max_x); });
    r = clip_pass(
        r, [&](Point p) { return p.y >= box.min_y; },
        [&](Point a, Point b) { return at_y(a, b, box.min_y); });
    r = clip_pass(
        r, [&](Point p) { return p.y <= box.max_y; },
        [&](Point a, Point b) { return at_y(a, b, box.max_y); });
    return r;
}

Ring convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(),
              [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    Ring hull(2 * pts.size());
    std::size_t k = 0;
    for (const Point& p : pts) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        const Point& p = pts[i];
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    return hull;
}

double polyline_length(std::span<const Point> polyline) {
    double total = 0.0;
    for (std::size_t i = 1; i < polyline.size(); ++i) total += distance(polyline[i - 1], polyline[i]);
    return total;
}

std::vector<double> heading_changes(std::span<const Point> polyline) {
    std::vector<double> out;
    if (polyline.size() < 3) return out;
    out.reserve(polyline.size() - 2);
    for (std::size_t i = 1; i + 1 < polyline.size(); ++i) {
        const Point in = polyline[i] - polyline[i - 1];
        const Point outv = polyline[i + 1] - polyline[i];
        const double dot = in.x * outv.x + in.y * outv.y;
        out.push_back(std::atan2(std::abs(cross(in, outv)), dot));
    }
    return out;
}

int count_turns(std::span<const Point> polyline) {
    int turns = 0;
    for (double h : heading_changes(polyline))
        if (h > kTurnTolerance) ++turns;
    return turns;
}

}  // namespace swath
