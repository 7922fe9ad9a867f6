#include "mollipath/mollify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mollipath/curvature.hpp"

namespace mollipath {

namespace {

void axpy(std::vector<double>& acc, double a, const std::vector<double>& x) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += a * x[i];
}

}  // namespace

// With the substitution u = (t - s)/eps the convolutions over the support
// window split at u_k = (t - k)/eps for the integer breakpoints k inside
// (t-eps, t+eps). On each subinterval the integrand is affine, so every
// order reduces to differences of Phi, M, phi and phi' at the subinterval
// ends:
//   F(t)   = sum_r [P_{r-1} + P~_r (t-r+1)] dPhi - eps P~_r dM
//   D(t)   = sum_r eps P~_r dM
//   F'(t)  = sum_r P~_r dPhi
//   D'(t)  = sum_r P~_r [u phi(u)]_a^b
//   F''(t) = sum_r P~_r (phi(b) - phi(a)) / eps
//   D''(t) = sum_r P~_r (phi(b) - phi(a) + b phi'(b) - a phi'(a)) / eps
EvalTerms eval_terms(const Polyline& pl, const Kernel& k, double eps, double t,
                     int order) {
    if (!(eps > 0.0)) throw std::invalid_argument("eval_terms: eps must be positive");
    if (order < 0 || order > 2)
        throw std::invalid_argument("eval_terms: order must be 0, 1 or 2");

    const std::size_t n = pl.dimension();
    const long p = static_cast<long>(pl.segments());

    // Integer breakpoints strictly inside the window, restricted to 1..p-1.
    const long k_lo = std::max(1L, static_cast<long>(std::floor(t - eps)) + 1);
    const long k_hi = std::min(p - 1, static_cast<long>(std::ceil(t + eps)) - 1);

    // Boundaries in u, descending from 1 to -1; the j-th subinterval maps
    // to segment k_lo + j (ascending s as u descends).
    std::vector<double> bounds;
    bounds.reserve(static_cast<std::size_t>(std::max(0L, k_hi - k_lo + 1)) + 2);
    bounds.push_back(1.0);
    for (long kk = k_lo; kk <= k_hi; ++kk)
        bounds.push_back((t - static_cast<double>(kk)) / eps);
    bounds.push_back(-1.0);

    long first_seg;
    if (k_hi >= k_lo) {
        first_seg = k_lo;
    } else {
        first_seg = std::clamp(static_cast<long>(std::floor(t)) + 1, 1L, p);
    }

    EvalTerms out;
    out.conventional.assign(n, 0.0);
    out.directional.assign(n, 0.0);

    for (std::size_t j = 0; j + 1 < bounds.size(); ++j) {
        const double b = bounds[j];
        const double a = bounds[j + 1];
        if (!(b > a)) continue;
        const long seg = std::clamp(first_seg + static_cast<long>(j), 1L, p);
        const auto& base = pl.waypoint(static_cast<std::size_t>(seg - 1));
        const auto& d = pl.delta(static_cast<std::size_t>(seg));
        switch (order) {
            case 0: {
                const double dPhi = k.cdf(b) - k.cdf(a);
                const double dM = k.moment(b) - k.moment(a);
                const double local = t - static_cast<double>(seg - 1);
                axpy(out.conventional, dPhi, base);
                axpy(out.conventional, local * dPhi - eps * dM, d);
                axpy(out.directional, eps * dM, d);
                break;
            }
            case 1: {
                const double dPhi = k.cdf(b) - k.cdf(a);
                axpy(out.conventional, dPhi, d);
                axpy(out.directional, b * k.phi(b) - a * k.phi(a), d);
                break;
            }
            case 2: {
                const double dphi = k.phi(b) - k.phi(a);
                axpy(out.conventional, dphi / eps, d);
                axpy(out.directional,
                     (dphi + b * k.phi_deriv(b, 1) - a * k.phi_deriv(a, 1)) / eps,
                     d);
                break;
            }
        }
    }
    return out;
}

std::vector<double> conventional_eval(const Polyline& pl, const Kernel& k,
                                      double eps, double t, int order) {
    return eval_terms(pl, k, eps, t, order).conventional;
}

std::vector<double> directional_term_eval(const Polyline& pl, const Kernel& k,
                                          double eps, double t, int order) {
    return eval_terms(pl, k, eps, t, order).directional;
}

std::vector<double> directional_eval(const Polyline& pl, const Kernel& k,
                                     double eps, double t, int order) {
    auto terms = eval_terms(pl, k, eps, t, order);
    axpy(terms.conventional, 1.0, terms.directional);
    return terms.conventional;
}

std::vector<double> combined_eval(const Polyline& pl, const Kernel& k,
                                  const SmoothingConfig& cfg, double t,
                                  int order) {
    auto terms = eval_terms(pl, k, cfg.eps, t, order);
    const double g = cfg.effective_gamma();
    if (g != 0.0) axpy(terms.conventional, g, terms.directional);
    return terms.conventional;
}

SampledPath sample(const Polyline& pl, const Kernel& k,
                   const SmoothingConfig& cfg, double t_start, double t_end,
                   std::size_t count) {
    if (count < 2) throw std::invalid_argument("sample: count must be >= 2");
    if (!(t_start < t_end))
        throw std::invalid_argument("sample: t_start must be < t_end");
    SampledPath sp;
    sp.parameters.reserve(count);
    sp.positions.reserve(count);
    sp.d1.reserve(count);
    sp.d2.reserve(count);
    sp.curvature.reserve(count);
    const double step = (t_end - t_start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double t =
            i + 1 == count ? t_end : t_start + step * static_cast<double>(i);
        sp.parameters.push_back(t);
        sp.positions.push_back(combined_eval(pl, k, cfg, t, 0));
        sp.d1.push_back(combined_eval(pl, k, cfg, t, 1));
        sp.d2.push_back(combined_eval(pl, k, cfg, t, 2));
        double speed = 0.0;
        for (double v : sp.d1.back()) speed += v * v;
        sp.curvature.push_back(
            speed > 0.0 ? curvature_from_derivatives(sp.d1.back(), sp.d2.back())
                        : 0.0);
    }
    return sp;
}

}  // namespace mollipath
