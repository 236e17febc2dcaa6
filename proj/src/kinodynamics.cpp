#include "swath/kinodynamics.hpp"

#include <cmath>

#include "swath/errors.hpp"

namespace swath {

void validate(const MotionLimits& m) {
    if (!(m.v_max > 0.0) || !std::isfinite(m.v_max)) throw InvalidSpecError("v_max must be positive and finite");
    if (!(m.a_max > 0.0) || !std::isfinite(m.a_max)) throw InvalidSpecError("a_max must be positive and finite");
    if (!(m.j_max > 0.0)) throw InvalidSpecError("j_max must be positive");
}

double rest_to_rest_time(double d, const MotionLimits& m) {
    validate(m);
    if (!(d >= 0.0) || !std::isfinite(d)) throw ContractError("distance must be finite and non-negative");
    if (d == 0.0) return 0.0;
    const double v = m.v_max, a = m.a_max, j = m.j_max;

    if (std::isinf(j)) {
        if (d <= v * v / a) return 2.0 * std::sqrt(d / a);
        return d / v + v / a;
    }

    // Time to reach v_max from rest.
    const double t_acc = v <= a * a / j ? 2.0 * std::sqrt(v / j) : a / j + v / a;
    if (d >= v * t_acc) return t_acc + d / v;
    if (d <= 2.0 * a * a * a / (j * j)) return 4.0 * std::cbrt(d / (2.0 * j));
    const double v_peak = 0.5 * a * (-a / j + std::sqrt(a * a / (j * j) + 4.0 * d / a));
    return 2.0 * (a / j + v_peak / a);
}

TimingProfile time_parameterize(std::span<const Point> path, const MotionLimits& limits) {
    validate(limits);
    TimingProfile profile;
    if (path.size() < 2) return profile;
    const std::vector<double> turns = heading_changes(path);
    double run = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        run += distance(path[i - 1], path[i]);
        const bool last = i + 1 == path.size();
        if (last || turns[i - 1] > kTurnTolerance) {
            if (!last) profile.stop_vertices.push_back(i);
            const double t = rest_to_rest_time(run, limits);
            profile.segment_durations.push_back(t);
            profile.total += t;
            run = 0.0;
        }
    }
    return profile;
}

}  // namespace swath
