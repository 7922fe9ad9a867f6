#pragma once

#include <cstddef>
#include <vector>

namespace mollipath {

/// Compactly supported, even, unit-integral bump kernel
///   phi(x) = c1 * exp(-1/(1-x^2)) on (-1,1), zero outside,
/// together with precomputed antiderivative tables
///   Phi(x) = int_{-1}^{x} phi(u) du   (cdf)
///   M(x)   = int_{-1}^{x} u phi(u) du (first-moment primitive)
/// and the sup norms of phi and phi'. All path evaluations reduce to
/// point lookups in these tables, so they are built once to the requested
/// quadrature tolerance and interpolated with cubic Hermite pieces whose
/// slopes are the exact analytic derivatives (phi and x*phi).
///
/// Immutable after construction; all evaluations are pure and thread-safe.
class Kernel {
public:
    /// Builds the bump kernel. Throws std::runtime_error if the
    /// normalization quadrature fails to converge within the iteration cap.
    static Kernel build_bump(double tolerance = 1e-12);

    /// phi(x); exactly 0 for |x| >= 1.
    double phi(double x) const;

    /// Analytic phi' (order 1) or phi'' (order 2); 0 outside the support.
    double phi_deriv(double x, int order) const;

    /// Scaled kernel phi_eps^(order)(x) = eps^(-1-order) * phi^(order)(x/eps),
    /// order in {0,1,2}.
    double scaled(double eps, double x, int order) const;

    /// Phi(x) clamped: 0 for x <= -1, Phi(1) (~1) for x >= 1.
    double cdf(double x) const;

    /// M(x) clamped: 0 for x <= -1, M(1) (~0) for x >= 1.
    double moment(double x) const;

    double normalization() const { return c1_; }
    double sup_phi() const { return sup_phi_; }
    double sup_phi_prime() const { return sup_phi_prime_; }
    double quadrature_tolerance() const { return tol_; }
    double support_radius() const { return 1.0; }
    bool is_even() const { return true; }

private:
    Kernel() = default;
    double interp(const std::vector<double>& vals,
                  const std::vector<double>& slopes, double x) const;

    double c1_ = 0.0;
    double sup_phi_ = 0.0;
    double sup_phi_prime_ = 0.0;
    double tol_ = 0.0;
    std::size_t n_ = 0;  // number of grid intervals on [-1,1]
    double h_ = 0.0;
    std::vector<double> cdf_vals_, cdf_slopes_;
    std::vector<double> mom_vals_, mom_slopes_;
};

}  // namespace mollipath
