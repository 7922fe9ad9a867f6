#include "mollipath/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mollipath {

namespace {

double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double segment_distance(const Point2& a, const Point2& b, const Point2& q) {
    const double vx = b[0] - a[0], vy = b[1] - a[1];
    const double wx = q[0] - a[0], wy = q[1] - a[1];
    const double vv = vx * vx + vy * vy;
    double u = vv > 0.0 ? (wx * vx + wy * vy) / vv : 0.0;
    u = std::clamp(u, 0.0, 1.0);
    const double dx = q[0] - (a[0] + u * vx), dy = q[1] - (a[1] + u * vy);
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

std::vector<Point2> convex_hull_2d(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {  // upper
        while (k >= lo && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double hull_outside_distance(const std::vector<Point2>& hull, const Point2& q) {
    if (hull.empty()) return std::numeric_limits<double>::infinity();
    if (hull.size() == 1) {
        const double dx = q[0] - hull[0][0], dy = q[1] - hull[0][1];
        return std::sqrt(dx * dx + dy * dy);
    }
    if (hull.size() == 2) return segment_distance(hull[0], hull[1], q);
    bool inside = true;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        if (cross(a, b, q) < 0.0) {
            inside = false;
            break;
        }
    }
    if (inside) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i)
        best = std::min(best, segment_distance(hull[i],
                                               hull[(i + 1) % hull.size()], q));
    return best;
}

}  // namespace mollipath
