#include "mollipath/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace mollipath {

namespace {

// Below this distance from the support boundary the true values of the bump
// and its derivatives are far below representable precision; returning 0
// avoids overflow in exp(-1/(1-x^2)).
constexpr double kBoundaryGuard = 1.0 - 1e-12;

double bump_raw(double x) {
    if (std::abs(x) >= kBoundaryGuard) return 0.0;
    return std::exp(-1.0 / (1.0 - x * x));
}

// 7-point Gauss-Legendre on [-1,1].
constexpr double kGlNode[7] = {
    0.0,
    -0.4058451513773972, 0.4058451513773972,
    -0.7415311855993945, 0.7415311855993945,
    -0.9491079123427585, 0.9491079123427585};
constexpr double kGlWeight[7] = {
    0.4179591836734694,
    0.3818300505051189, 0.3818300505051189,
    0.2797053914892766, 0.2797053914892766,
    0.1294849661688697, 0.1294849661688697};

double gauss7(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 7; ++i) acc += kGlWeight[i] * f(mid + half * kGlNode[i]);
    return acc * half;
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a,
                            double b, double fa, double fm, double fb,
                            double whole, double tol, int depth) {
    if (depth > 60)
        throw std::runtime_error(
            "kernel quadrature failed to converge within the iteration cap");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0);
}

// Maximizes |f| on [a,b] by golden-section search.
double golden_max_abs(const std::function<double(double)>& f, double a,
                      double b) {
    const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = std::abs(f(x1)), f2 = std::abs(f(x2));
    for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = std::abs(f(x2));
        } else {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = std::abs(f(x1));
        }
    }
    return std::max(f1, f2);
}

}  // namespace

Kernel Kernel::build_bump(double tolerance) {
    if (!(tolerance > 0.0))
        throw std::invalid_argument("kernel tolerance must be positive");
    Kernel k;
    k.tol_ = tolerance;

    const double integral = adaptive_simpson(bump_raw, -1.0, 1.0, tolerance);
    k.c1_ = 1.0 / integral;

    k.n_ = 4096;
    k.h_ = 2.0 / static_cast<double>(k.n_);
    k.cdf_vals_.resize(k.n_ + 1);
    k.mom_vals_.resize(k.n_ + 1);
    k.cdf_slopes_.resize(k.n_ + 1);
    k.mom_slopes_.resize(k.n_ + 1);

    const double c1 = k.c1_;
    auto phi_fn = [c1](double x) { return c1 * bump_raw(x); };
    auto xphi_fn = [c1](double x) { return x * c1 * bump_raw(x); };

    // Kahan-compensated accumulation of per-interval Gauss-Legendre panels.
    double cdf_acc = 0.0, cdf_comp = 0.0;
    double mom_acc = 0.0, mom_comp = 0.0;
    k.cdf_vals_[0] = 0.0;
    k.mom_vals_[0] = 0.0;
    for (std::size_t i = 0; i < k.n_; ++i) {
        const double a = -1.0 + static_cast<double>(i) * k.h_;
        const double b = a + k.h_;
        double y = gauss7(phi_fn, a, b) - cdf_comp;
        double t = cdf_acc + y;
        cdf_comp = (t - cdf_acc) - y;
        cdf_acc = t;
        k.cdf_vals_[i + 1] = cdf_acc;

        y = gauss7(xphi_fn, a, b) - mom_comp;
        t = mom_acc + y;
        mom_comp = (t - mom_acc) - y;
        mom_acc = t;
        k.mom_vals_[i + 1] = mom_acc;
    }

    // Hermite slopes are the exact integrand values; cdf slopes are limited
    // to three times the adjacent secants (Fritsch-Carlson) so the cdf
    // interpolant is monotone.
    for (std::size_t i = 0; i <= k.n_; ++i) {
        const double x = -1.0 + static_cast<double>(i) * k.h_;
        double m = phi_fn(x);
        const double dl =
            i > 0 ? (k.cdf_vals_[i] - k.cdf_vals_[i - 1]) / k.h_ : m;
        const double dr =
            i < k.n_ ? (k.cdf_vals_[i + 1] - k.cdf_vals_[i]) / k.h_ : m;
        m = std::min(m, 3.0 * std::min(dl, dr));
        k.cdf_slopes_[i] = std::max(0.0, m);
        k.mom_slopes_[i] = xphi_fn(x);
    }

    k.sup_phi_ = k.phi(0.0);

    // |phi'| is even; scan the positive half, then refine.
    auto dphi = [&k](double x) { return k.phi_deriv(x, 1); };
    double best_x = 0.0, best = 0.0;
    const int scan = 4000;
    for (int i = 0; i <= scan; ++i) {
        const double x = static_cast<double>(i) / scan;
        const double v = std::abs(dphi(x));
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    const double lo = std::max(0.0, best_x - 2.0 / scan);
    const double hi = std::min(1.0, best_x + 2.0 / scan);
    k.sup_phi_prime_ = golden_max_abs(dphi, lo, hi);

    return k;
}

double Kernel::phi(double x) const { return c1_ * bump_raw(x); }

double Kernel::phi_deriv(double x, int order) const {
    if (order != 1 && order != 2)
        throw std::invalid_argument("phi_deriv: order must be 1 or 2");
    if (std::abs(x) >= kBoundaryGuard) return 0.0;
    const double w = 1.0 - x * x;
    const double p = c1_ * std::exp(-1.0 / w);
    const double g1 = -2.0 * x / (w * w);
    if (order == 1) return p * g1;
    const double g2 = -2.0 / (w * w) - 8.0 * x * x / (w * w * w);
    return p * (g1 * g1 + g2);
}

double Kernel::scaled(double eps, double x, int order) const {
    if (!(eps > 0.0)) throw std::invalid_argument("scaled: eps must be positive");
    const double u = x / eps;
    const double v = order == 0 ? phi(u) : phi_deriv(u, order);
    return std::pow(eps, -1.0 - static_cast<double>(order)) * v;
}

double Kernel::interp(const std::vector<double>& vals,
                      const std::vector<double>& slopes, double x) const {
    const double pos = (x + 1.0) / h_;
    const std::size_t i =
        std::min(n_ - 1, static_cast<std::size_t>(std::max(0.0, pos)));
    const double xl = -1.0 + static_cast<double>(i) * h_;
    const double u = (x - xl) / h_;
    const double u2 = u * u, u3 = u2 * u;
    const double m0 = slopes[i] * h_, m1 = slopes[i + 1] * h_;
    // Incremental form: rounding noise scales with the interval increment
    // rather than the absolute table value, keeping the cdf monotone in
    // floating point, not just in exact arithmetic.
    return vals[i] + (3.0 * u2 - 2.0 * u3) * (vals[i + 1] - vals[i]) +
           (u3 - 2.0 * u2 + u) * m0 + (u3 - u2) * m1;
}

double Kernel::cdf(double x) const {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return cdf_vals_.back();
    return interp(cdf_vals_, cdf_slopes_, x);
}

double Kernel::moment(double x) const {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return mom_vals_.back();
    return interp(mom_vals_, mom_slopes_, x);
}

}  // namespace mollipath
