#pragma once

#include <limits>
#include <span>
#include <vector>

#include "swath/geometry.hpp"

namespace swath {

struct MotionLimits {
    double v_max = 5.0;   ///< m/s
    double a_max = 2.5;   ///< m/s^2
    double j_max = std::numeric_limits<double>::infinity();  ///< m/s^3; infinite selects the trapezoidal profile
};

/// Throws InvalidSpecError unless v and a are positive and finite and j is
/// positive (possibly infinite).
void validate(const MotionLimits& limits);

/// Minimum time to cover `d` meters starting and ending at rest under the
/// limits: trapezoidal velocity when jerk is unbounded, otherwise the
/// seven-phase jerk-limited S-curve.
double rest_to_rest_time(double d, const MotionLimits& limits);

struct TimingProfile {
    std::vector<double> segment_durations;  ///< one per straight piece between stops
    double total = 0.0;
    std::vector<std::size_t> stop_vertices;  ///< polyline indices where the vehicle halts to turn
};

/// Splits the path at every turning vertex and sums rest-to-rest times of the
/// straight pieces.
TimingProfile time_parameterize(std::span<const Point> path, const MotionLimits& limits);

}  // namespace swath
