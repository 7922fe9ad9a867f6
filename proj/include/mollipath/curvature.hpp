#pragma once

#include <cstddef>
#include <vector>

#include "mollipath/kernel.hpp"
#include "mollipath/polyline.hpp"

namespace mollipath {

/// Parallelogram area |a ^ b| via the Gram identity
/// sqrt(max(0, |a|^2 |b|^2 - <a,b>^2)); dimension-agnostic.
double wedge_norm(const std::vector<double>& a, const std::vector<double>& b);

/// Geometric constants of one corner (adjacent segment vectors P~_1, P~_2).
struct CornerGeometry {
    std::vector<double> p_tilde_1;
    std::vector<double> p_tilde_2;
    double s_bar = 0.0;       // argmin_s |s P~_1 + (1-s) P~_2|
    double wedge = 0.0;       // |P~_2 ^ P~_1|
    double denom = 0.0;       // min_s |s P~_1 + (1-s) P~_2|

    static CornerGeometry from_segments(std::vector<double> p1,
                                        std::vector<double> p2);
    /// Corner at interior waypoint k (segments k and k+1), k in 1..p-1.
    static CornerGeometry from_polyline(const Polyline& pl, std::size_t k);
};

/// |kappa| = |d2 ^ d1| / |d1|^3. Throws on zero speed.
double curvature_from_derivatives(const std::vector<double>& d1,
                                  const std::vector<double>& d2);

/// Closed-form curvature of the directional mollification of a single
/// corner placed at t = 1:
///   |kappa(t)| = |2 phi_eps(t-1) + (t-1) phi_eps'(t-1)| * wedge / |F^'(t)|^3
/// with F^'(t) = P~_1 (A1 - (t-1) phi_eps(t-1)) + P~_2 (A2 + (t-1) phi_eps(t-1)),
/// A2 = Phi((t-1)/eps), A1 = 1 - A2. Zero outside the support window.
double exact_corner_curvature(const CornerGeometry& geom, const Kernel& k,
                              double eps, double t);

/// (1/eps^2) |phi'|_inf * wedge / denom^3.
double bound_directional(const CornerGeometry& geom, const Kernel& k,
                         double eps);

/// (|gamma| |phi'|_inf / eps^2 + |1-gamma| |phi|_inf / eps) * wedge / denom^3.
double bound_combined(const CornerGeometry& geom, const Kernel& k, double eps,
                      double gamma);

struct CornerSelection {
    std::size_t corner = 0;  // interior waypoint index
    CornerGeometry geom;
    double bound_at_selected = 0.0;
    double eps_k = 0.0;  // smallest eps meeting the budget at this corner
};

struct CurvatureReport {
    std::vector<CornerSelection> per_corner;
    double selected_eps = 0.0;
    double kappa_max = 0.0;
    bool clamped = false;  // hit the coincidence-window clamp (0.499)
    double sampled_max_curvature = 0.0;
    bool feasible = true;  // sampled curvature respects the budget
};

/// Per-corner inversion of the combined bound against the budget kappa_max;
/// selected_eps = max over corners, clamped to 0.499 so coincidence windows
/// stay open and corners never interact. The selection is then verified by
/// sampling the actual curvature (the per-corner bound assumes no corner
/// interaction).
CurvatureReport select_epsilon(const Polyline& pl, const Kernel& k,
                               double kappa_max, double gamma);

}  // namespace mollipath
