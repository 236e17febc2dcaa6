#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace swath {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

/// Closed ring; the closing edge back to the first vertex is implicit.
using Ring = std::vector<Point>;
using Polyline = std::vector<Point>;

struct Box {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    bool contains(const Box& o) const {
        return o.min_x >= min_x && o.max_x <= max_x && o.min_y >= min_y && o.max_y <= max_y;
    }
};

struct Segment {
    Point a;
    Point b;
};

/// Signed shoelace area: positive for counterclockwise rings.
double signed_area(std::span<const Point> ring);

Box bounding_box(std::span<const Point> points);

/// Even-odd point in ring test; points exactly on the boundary are unspecified.
bool point_in_ring(Point p, std::span<const Point> ring);

/// True if any two non-adjacent edges of the ring touch or cross.
bool ring_self_intersects(std::span<const Point> ring);

bool segments_intersect(Point p1, Point p2, Point q1, Point q2);

/// Sutherland-Hodgman clip of an arbitrary ring against an axis-aligned box.
/// The result may contain degenerate zero-width spikes for concave input but
/// its area equals the exact intersection area.
Ring clip_to_box(std::span<const Point> ring, const Box& box);

/// Convex hull (counterclockwise, no collinear vertices) of a point set.
Ring convex_hull(std::vector<Point> points);

double polyline_length(std::span<const Point> polyline);

/// Absolute heading change at each interior vertex, in radians.
std::vector<double> heading_changes(std::span<const Point> polyline);

inline constexpr double kTurnTolerance = 1e-6;

/// Interior vertices whose heading change exceeds kTurnTolerance.
int count_turns(std::span<const Point> polyline);

}  // namespace swath
