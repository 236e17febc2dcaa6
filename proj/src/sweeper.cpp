#include "swath/sweeper.hpp"

#include <algorithm>

#include "swath/errors.hpp"

namespace swath {

std::string to_string(Corner corner) {
    switch (corner) {
        case Corner::BL: return "BL";
        case Corner::BR: return "BR";
        case Corner::TL: return "TL";
        case Corner::TR: return "TR";
    }
    return "?";
}

std::vector<Segment> track_layout(const Partition& partition, Axis orientation) {
    if (!partition.feasible_axes.contains(orientation))
        throw ContractError("partition " + std::to_string(partition.id) + " is not monotone along the " +
                            to_string(orientation) + " axis");
    std::vector<Segment> tracks;
    const AxisProbe probe = axis_probe(partition.region, orientation);
    for (const ProbeLine& line : probe.lines) {
        const auto [lo, hi] = line.intervals.front();
        if (orientation == Axis::horizontal)
            tracks.push_back({{lo, line.coordinate}, {hi, line.coordinate}});
        else
            tracks.push_back({{line.coordinate, lo}, {line.coordinate, hi}});
    }
    return tracks;
}

SweepCandidate make_candidate(int partition_id, Axis orientation, Corner corner, Polyline waypoints) {
    waypoints.erase(std::unique(waypoints.begin(), waypoints.end()), waypoints.end());
    SweepCandidate c;
    c.partition_id = partition_id;
    c.orientation = orientation;
    c.start_corner = corner;
    c.entry = waypoints.front();
    c.exit = waypoints.back();
    c.length = polyline_length(waypoints);
    c.turns = count_turns(waypoints);
    c.waypoints = std::move(waypoints);
    return c;
}

namespace {

SweepCandidate serpentine(const Partition& p, const std::vector<Segment>& tracks, Axis orientation, Corner corner) {
    // Horizontal tracks: bottom/top picks the first track, left/right the first direction.
    // Vertical tracks: left/right picks the first track, bottom/top the first direction.
    const bool bottom = corner == Corner::BL || corner == Corner::BR;
    const bool left = corner == Corner::BL || corner == Corner::TL;
    const bool ascending = orientation == Axis::horizontal ? bottom : left;
    bool forward = orientation == Axis::horizontal ? left : bottom;

    Polyline pts;
    pts.reserve(2 * tracks.size());
    const std::size_t n = tracks.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Segment& t = tracks[ascending ? k : n - 1 - k];
        if (forward) {
            pts.push_back(t.a);
            pts.push_back(t.b);
        } else {
            pts.push_back(t.b);
            pts.push_back(t.a);
        }
        forward = !forward;
    }
    return make_candidate(p.id, orientation, corner, std::move(pts));
}

}  // namespace

std::vector<SweepCandidate> candidates(const Partition& partition) {
    if (partition.feasible_axes.empty())
        throw ContractError("partition " + std::to_string(partition.id) + " is not uniaxially feasible");
    std::vector<SweepCandidate> out;
    if (partition.region.size() == 1) {
        const Point center = partition.region.grid().cell_center(partition.region.cells().front());
        out.push_back(make_candidate(partition.id, partition.feasible_axes.list().front(), Corner::BL, {center}));
        return out;
    }
    for (Axis axis : partition.feasible_axes.list()) {
        const std::vector<Segment> tracks = track_layout(partition, axis);
        for (Corner corner : {Corner::BL, Corner::BR, Corner::TL, Corner::TR}) {
            SweepCandidate c = serpentine(partition, tracks, axis, corner);
            const bool dup = std::any_of(out.begin(), out.end(),
                                         [&](const SweepCandidate& o) { return o.waypoints == c.waypoints; });
            if (!dup) out.push_back(std::move(c));
        }
    }
    return out;
}

SweepCandidate reversed(const SweepCandidate& candidate) {
    SweepCandidate r = candidate;
    std::reverse(r.waypoints.begin(), r.waypoints.end());
    std::swap(r.entry, r.exit);
    return r;
}

}  // namespace swath
