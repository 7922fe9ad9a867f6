#pragma once

#include <array>
#include <vector>

namespace mollipath {

using Point2 = std::array<double, 2>;

/// Convex hull of a planar point set, counter-clockwise, no repeated
/// endpoint (monotone chain). Degenerate inputs (collinear sets) return
/// the extreme points.
std::vector<Point2> convex_hull_2d(std::vector<Point2> pts);

/// Distance from q to the hull: 0 if q lies inside or on the boundary,
/// otherwise the Euclidean distance to the nearest hull edge.
double hull_outside_distance(const std::vector<Point2>& hull, const Point2& q);

}  // namespace mollipath
