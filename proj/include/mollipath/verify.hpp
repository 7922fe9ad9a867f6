#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mollipath/kernel.hpp"
#include "mollipath/polyline.hpp"

namespace mollipath::verify {

struct CheckDetail {
    double parameter = 0.0;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
};

/// Machine-readable result of one executable property check.
/// worst_violation is a signed margin (-max error for equality-style
/// checks, the violation magnitude for existence-style checks);
/// passed <=> worst_violation >= -tolerance.
struct CheckReport {
    std::string check_id;
    bool passed = false;
    double worst_violation = 0.0;
    double tolerance = 0.0;
    std::vector<CheckDetail> details;
};

std::string to_json_line(const CheckReport& r);

/// Adaptive-Simpson evaluation of F_eps + gamma * D_eps and its first two
/// derivatives, integrating directly over the support window with analytic
/// kernel derivatives. Shares only the kernel point evaluations with the
/// closed-form path (no cdf/moment tables). Absolute tolerance ~1e-10.
/// Throws on non-convergence (test-infrastructure failure).
std::vector<double> quadrature_oracle(const Polyline& pl, const Kernel& k,
                                      double eps, double gamma, double t,
                                      int order);

CheckReport check_waypoint_preservation(const Polyline& pl, const Kernel& k,
                                        double eps);
CheckReport check_coincidence_windows(const Polyline& pl, const Kernel& k,
                                      double eps, double gamma);
CheckReport check_switching_smoothness(const Polyline& pl, const Kernel& k,
                                       double eps, double gamma_a,
                                       double gamma_b, std::size_t r);
CheckReport check_length_ordering(const Polyline& pl, const Kernel& k,
                                  double eps);
CheckReport check_counterexamples(const Kernel& k);
CheckReport check_corner_convexity(double y0, double y1, double y2,
                                   const Kernel& k, double eps);

/// Bundled example paths used by the verification suites and the CLI.
namespace corpus {
Polyline abs_path();                          // ((-1,1),(0,0),(1,1))
Polyline three_point_path();                  // generic planar corner pair
Polyline six_point_path();                    // 6-point zig-zag
Polyline gamma_family_path();                 // path for the gamma sweep
Polyline flower_path(std::size_t samples = 2000);  // (2+cos 2t)(cos t, sin t)
}  // namespace corpus

Polyline random_polyline(std::mt19937_64& rng, std::size_t segments,
                         std::size_t dim);

/// Runs a named suite over the bundled corpus. Suites: all, waypoints,
/// windows, lengths, curvature, counterexamples, convexity. Throws
/// std::invalid_argument on an unknown suite name. Deterministic for a
/// given seed.
std::vector<CheckReport> run_suite(const std::string& suite, const Kernel& k,
                                   std::uint64_t seed);

}  // namespace mollipath::verify
