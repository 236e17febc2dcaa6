#pragma once

#include <string>
#include <vector>

#include "swath/decomposer.hpp"
#include "swath/geometry.hpp"

namespace swath {

enum class Corner { BL, BR, TL, TR };

std::string to_string(Corner corner);

/// One parallel-track traversal of a partition: the (entry, exit, length,
/// turns) tuple plus the waypoints that realize it.
struct SweepCandidate {
    int partition_id = 0;
    Axis orientation = Axis::horizontal;
    Corner start_corner = Corner::BL;
    Point entry;
    Point exit;
    double length = 0.0;
    int turns = 0;
    Polyline waypoints;
};

/// Track segments ordered bottom-to-top (horizontal) or left-to-right
/// (vertical); each runs from its low end to its high end along the band
/// center, spanning the partition's occupied interval in that band.
std::vector<Segment> track_layout(const Partition& partition, Axis orientation);

/// Serpentine candidates: four start corners per feasible axis, exact
/// duplicates removed. A single-cell partition yields one point candidate.
std::vector<SweepCandidate> candidates(const Partition& partition);

/// Builds the candidate tuple from a waypoint polyline.
SweepCandidate make_candidate(int partition_id, Axis orientation, Corner corner, Polyline waypoints);

SweepCandidate reversed(const SweepCandidate& candidate);

}  // namespace swath
