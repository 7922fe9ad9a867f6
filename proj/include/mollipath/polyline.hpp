#pragma once

#include <cstddef>
#include <vector>

namespace mollipath {

/// Piecewise-linear curve through waypoints P_0..P_p in R^n with unit
/// parameter per segment, t in [0,p], plus the affine extension to all of R
/// (first segment extended for t <= 1, last segment for t >= p-1).
///
/// Immutable after construction; evaluations are pure and thread-safe.
class Polyline {
public:
    explicit Polyline(std::vector<std::vector<double>> waypoints);

    std::size_t dimension() const { return dim_; }
    std::size_t segments() const { return waypoints_.size() - 1; }  // p
    std::size_t num_waypoints() const { return waypoints_.size(); }
    const std::vector<double>& waypoint(std::size_t i) const {
        return waypoints_[i];
    }
    /// Segment difference vector P~_r = P_r - P_{r-1}, r in 1..p.
    const std::vector<double>& delta(std::size_t r) const {
        return deltas_[r - 1];
    }

    /// The extension f_bar(t); total on R, continuous everywhere,
    /// exact at integer parameters.
    std::vector<double> eval(double t) const;

    /// Piecewise-constant derivative; right-hand slope at breakpoints.
    std::vector<double> derivative(double t) const;

    double length() const;
    double max_segment_length() const;
    double segment_length(std::size_t r) const;

private:
    std::vector<std::vector<double>> waypoints_;
    std::vector<std::vector<double>> deltas_;
    std::size_t dim_ = 0;
};

/// Builds a polyline through the given samples, linearly subdividing any
/// chord longer than target_spacing (pass 0 to keep samples as-is).
/// Feeds smooth analytic curves into the pipeline as dense polylines.
Polyline resample_curve(const std::vector<std::vector<double>>& samples,
                        double target_spacing);

}  // namespace mollipath
