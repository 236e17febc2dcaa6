#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "swath/bench.hpp"
#include "swath/errors.hpp"
#include "swath/random.hpp"

namespace swath {

namespace {

// Polygons are built in footprint units, then scaled and shifted.
using Shape = std::pair<Ring, std::vector<Ring>>;

Ring rect_ring(double x0, double y0, double x1, double y1) { return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}; }

// Non-overlapping [start, end] intervals inside [lo, hi] with widths and gaps
// of at least 2 units.
std::vector<std::pair<double, double>> spaced_intervals(Rng& rng, double lo, double hi, int wanted) {
    std::vector<std::pair<double, double>> out;
    double x = lo;
    for (int i = 0; i < wanted; ++i) {
        const double start = x + (i == 0 ? 0.0 : rng.range(2, 4));
        const double end = start + rng.range(2, 5);
        if (end > hi) break;
        out.emplace_back(start, end);
        x = end;
    }
    return out;
}

Shape make_rect(Rng& rng) {
    const int w = rng.range(6, 36), h = rng.range(6, 36);
    return {rect_ring(0, 0, w, h), {}};
}

Shape make_u(Rng& rng) {
    const int w = rng.range(9, 36), h = rng.range(8, 36);
    const int left = rng.range(2, w / 3), right = rng.range(2, w / 3);
    const int base = rng.range(2, h / 2);
    return {{{0, 0}, {double(w), 0}, {double(w), double(h)}, {double(w - right), double(h)},
             {double(w - right), double(base)}, {double(left), double(base)}, {double(left), double(h)}, {0, double(h)}},
            {}};
}

Shape make_l(Rng& rng) {
    const int w = rng.range(7, 36), h = rng.range(7, 36);
    const int leg = rng.range(2, w / 2), foot = rng.range(2, h / 2);
    return {{{0, 0}, {double(w), 0}, {double(w), double(foot)}, {double(leg), double(foot)}, {double(leg), double(h)},
             {0, double(h)}},
            {}};
}

// Upward teeth on a base bar; tooth i spans teeth[i] and reaches heights[i].
Ring comb_ring(double width, double base, const std::vector<std::pair<double, double>>& teeth,
               const std::vector<double>& heights) {
    Ring r{{0, 0}, {width, 0}};
    if (teeth.empty() || teeth.back().second < width) r.push_back({width, base});
    for (std::size_t k = teeth.size(); k-- > 0;) {
        const auto [s, e] = teeth[k];
        if (e < width) r.push_back({e, base});
        r.push_back({e, heights[k]});
        r.push_back({s, heights[k]});
        if (s > 0) r.push_back({s, base});
    }
    if (teeth.empty() || teeth.front().first > 0) r.push_back({0, base});
    return r;
}

Shape make_comb(Rng& rng) {
    const int base = rng.range(2, 5);
    auto teeth = spaced_intervals(rng, 0, 36, rng.range(2, 6));
    const double width = teeth.back().second;
    std::vector<double> heights;
    for (std::size_t k = 0; k < teeth.size(); ++k) heights.push_back(base + rng.range(4, 30));
    return {comb_ring(width, base, teeth, heights), {}};
}

Shape make_staircase(Rng& rng) {
    const int steps = rng.range(3, 6);
    std::vector<double> run, rise;
    double width = 0, height = 0;
    for (int i = 0; i < steps; ++i) {
        run.push_back(rng.range(2, 6));
        rise.push_back(rng.range(2, 6));
        width += run.back();
        height += rise.back();
    }
    Ring r{{0, 0}, {width, 0}};
    double x = width, y = 0;
    for (int i = 0; i < steps; ++i) {
        y += rise[static_cast<std::size_t>(i)];
        r.push_back({x, y});
        x -= run[static_cast<std::size_t>(i)];
        r.push_back({x, y});
    }
    return {r, {}};
}

Shape make_ring(Rng& rng) {
    const int w = rng.range(8, 36), h = rng.range(8, 36);
    const int x0 = rng.range(2, (w - 4) / 2), y0 = rng.range(2, (h - 4) / 2);
    const int x1 = rng.range(x0 + 2, w - 2), y1 = rng.range(y0 + 2, h - 2);
    Ring hole = rect_ring(x0, y0, x1, y1);
    std::reverse(hole.begin(), hole.end());
    return {rect_ring(0, 0, w, h), {hole}};
}

Shape make_blob(Rng& rng) {
    const int k = rng.range(10, 18);
    const double radius = rng.uniform(6.0, 18.0);
    Ring outer;
    double r_min = radius;
    const double step = 2.0 * std::numbers::pi / k;
    for (int i = 0; i < k; ++i) {
        const double r = radius * rng.uniform(0.65, 1.0);
        r_min = std::min(r_min, r);
        const double a = step * (i + rng.uniform(-0.3, 0.3));
        outer.push_back({radius + r * std::cos(a), radius + r * std::sin(a)});
    }
    // Every edge stays outside this disk, so holes placed inside it are interior.
    const double safe = r_min * std::cos(0.8 * step) - 1.0;
    std::vector<Ring> holes;
    std::vector<std::pair<Point, double>> placed;
    const int wanted = rng.range(1, 3);
    for (int attempt = 0; attempt < 60 && static_cast<int>(holes.size()) < wanted; ++attempt) {
        const double hr = rng.uniform(1.2, 2.5);
        if (safe - hr < 0) break;
        const double dist = rng.uniform(0.0, safe - hr);
        const double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const Point c{radius + dist * std::cos(ang), radius + dist * std::sin(ang)};
        const bool clear = std::all_of(placed.begin(), placed.end(), [&](const auto& p) {
            return distance(p.first, c) > p.second + hr + 1.5;
        });
        if (!clear) continue;
        placed.emplace_back(c, hr);
        const int sides = rng.range(4, 6);
        const double turn = rng.uniform(0.0, std::numbers::pi);
        Ring hole;
        for (int s = 0; s < sides; ++s) {
            const double a = turn + 2.0 * std::numbers::pi * s / sides;
            hole.push_back({c.x + hr * std::cos(a), c.y + hr * std::sin(a)});
        }
        holes.push_back(std::move(hole));
    }
    return {outer, holes};
}

Shape make_branched(Rng& rng) {
    const int length = rng.range(20, 36);
    const int thick = rng.range(2, 4);
    auto up = spaced_intervals(rng, 1, length - 1, rng.range(1, 4));
    auto down = spaced_intervals(rng, 1 + rng.range(0, 3), length - 1, rng.range(1, 4));
    Ring r{{0, 0}};
    for (const auto& [s, e] : down) {
        const double depth = rng.range(3, 12);
        r.push_back({s, 0});
        r.push_back({s, -depth});
        r.push_back({e, -depth});
        r.push_back({e, 0});
    }
    r.push_back({double(length), 0});
    r.push_back({double(length), double(thick)});
    for (std::size_t k = up.size(); k-- > 0;) {
        const double height = thick + rng.range(3, 12);
        r.push_back({up[k].second, double(thick)});
        r.push_back({up[k].second, height});
        r.push_back({up[k].first, height});
        r.push_back({up[k].first, double(thick)});
    }
    r.push_back({0, double(thick)});
    return {r, {}};
}

void rotate_shape(Shape& shape, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    auto rot = [&](Ring& ring) {
        for (Point& p : ring) p = {c * p.x - s * p.y, s * p.x + c * p.y};
    };
    rot(shape.first);
    for (Ring& h : shape.second) rot(h);
}

Shape make_shape(Family f, Rng& rng) {
    switch (f) {
        case Family::rect: return make_rect(rng);
        case Family::u: return make_u(rng);
        case Family::l: return make_l(rng);
        case Family::comb: return make_comb(rng);
        case Family::staircase: return make_staircase(rng);
        case Family::ring: return make_ring(rng);
        case Family::blob: return make_blob(rng);
        case Family::branched: return make_branched(rng);
    }
    throw InvalidSpecError("unknown polygon family");
}

}  // namespace

std::string to_string(Family family) {
    switch (family) {
        case Family::rect: return "rect";
        case Family::u: return "u";
        case Family::l: return "l";
        case Family::comb: return "comb";
        case Family::staircase: return "staircase";
        case Family::ring: return "ring";
        case Family::blob: return "blob";
        case Family::branched: return "branched";
    }
    return "?";
}

Family family_from_string(const std::string& name) {
    for (Family f : all_families())
        if (to_string(f) == name) return f;
    throw InvalidSpecError("unknown polygon family '" + name + "'");
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families{Family::rect,      Family::u,    Family::l,    Family::comb,
                                              Family::staircase, Family::ring, Family::blob, Family::branched};
    return families;
}

std::vector<PolygonROI> generate_corpus(std::uint64_t seed, std::span<const Family> families, int count, double w) {
    if (count < 1) throw InvalidSpecError("corpus count must be at least 1");
    if (families.empty()) throw InvalidSpecError("corpus needs at least one family");
    if (!(w > 0.0) || !std::isfinite(w)) throw InvalidSpecError("corpus cell size must be positive");

    std::vector<PolygonROI> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const Family family = families[static_cast<std::size_t>(k) % families.size()];
        Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(k));
        char id[64];
        std::snprintf(id, sizeof id, "%s-%03d", to_string(family).c_str(), k);
        for (int attempt = 0;; ++attempt) {
            Shape shape = make_shape(family, rng);
            // Some concave rectilinear shapes are tilted so their rasterized
            // boundary is jagged.
            const bool tiltable = family == Family::u || family == Family::l || family == Family::comb ||
                                  family == Family::branched;
            if (tiltable && rng.chance(0.3)) rotate_shape(shape, rng.uniform(-0.35, 0.35));
            const Point offset{rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)};
            auto place = [&](Ring ring) {
                for (Point& p : ring) p = {w * (p.x + offset.x), w * (p.y + offset.y)};
                return ring;
            };
            std::vector<Ring> holes;
            for (Ring& h : shape.second) holes.push_back(place(std::move(h)));
            try {
                out.push_back(make_roi(id, place(std::move(shape.first)), std::move(holes)));
                break;
            } catch (const InvalidSpecError&) {
                if (attempt >= 50) throw;
            }
        }
    }
    return out;
}

std::vector<PolygonROI> generate_corpus(std::uint64_t seed, int count, double w) {
    return generate_corpus(seed, all_families(), count, w);
}

}  // namespace swath
