#include "mollipath/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mollipath/mollify.hpp"

namespace mollipath {

namespace {

constexpr double kEpsilonClamp = 0.499;
constexpr double kDefaultEpsilon = 0.1;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

double wedge_norm(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("wedge_norm: dimension mismatch");
    const double g = dot(a, a) * dot(b, b) - dot(a, b) * dot(a, b);
    return std::sqrt(std::max(0.0, g));
}

CornerGeometry CornerGeometry::from_segments(std::vector<double> p1,
                                             std::vector<double> p2) {
    if (p1.size() != p2.size())
        throw std::invalid_argument("CornerGeometry: dimension mismatch");
    CornerGeometry g;
    g.p_tilde_1 = std::move(p1);
    g.p_tilde_2 = std::move(p2);
    g.wedge = wedge_norm(g.p_tilde_2, g.p_tilde_1);
    std::vector<double> diff(g.p_tilde_1.size());
    for (std::size_t i = 0; i < diff.size(); ++i)
        diff[i] = g.p_tilde_2[i] - g.p_tilde_1[i];
    const double dd = dot(diff, diff);
    if (dd > 0.0) {
        g.s_bar = dot(diff, g.p_tilde_2) / dd;
    } else {
        g.s_bar = 0.5;  // equal segment vectors: every s gives the same point
    }
    std::vector<double> m(g.p_tilde_1.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = g.s_bar * g.p_tilde_1[i] + (1.0 - g.s_bar) * g.p_tilde_2[i];
    g.denom = norm2(m);
    return g;
}

CornerGeometry CornerGeometry::from_polyline(const Polyline& pl,
                                             std::size_t k) {
    if (k < 1 || k >= pl.segments())
        throw std::invalid_argument("CornerGeometry: corner index out of range");
    return from_segments(pl.delta(k), pl.delta(k + 1));
}

double curvature_from_derivatives(const std::vector<double>& d1,
                                  const std::vector<double>& d2) {
    const double speed = norm2(d1);
    if (speed == 0.0)
        throw std::domain_error("curvature undefined at zero speed");
    return wedge_norm(d2, d1) / (speed * speed * speed);
}

double exact_corner_curvature(const CornerGeometry& geom, const Kernel& k,
                              double eps, double t) {
    if (!(eps > 0.0))
        throw std::invalid_argument("exact_corner_curvature: eps must be positive");
    const double tau = t - 1.0;
    if (std::abs(tau) >= eps) return 0.0;
    const double phi_e = k.scaled(eps, tau, 0);
    const double dphi_e = k.scaled(eps, tau, 1);
    const double a2 = k.cdf(tau / eps);
    const double a1 = 1.0 - a2;
    std::vector<double> vel(geom.p_tilde_1.size());
    for (std::size_t i = 0; i < vel.size(); ++i)
        vel[i] = geom.p_tilde_1[i] * (a1 - tau * phi_e) +
                 geom.p_tilde_2[i] * (a2 + tau * phi_e);
    const double speed = norm2(vel);
    if (speed == 0.0)
        throw std::domain_error("curvature undefined at zero speed");
    return std::abs(2.0 * phi_e + tau * dphi_e) * geom.wedge /
           (speed * speed * speed);
}

double bound_directional(const CornerGeometry& geom, const Kernel& k,
                         double eps) {
    if (!(eps > 0.0))
        throw std::invalid_argument("bound_directional: eps must be positive");
    if (geom.denom == 0.0)
        throw std::domain_error("curvature bound unbounded: degenerate corner");
    const double d3 = geom.denom * geom.denom * geom.denom;
    return k.sup_phi_prime() / (eps * eps) * geom.wedge / d3;
}

double bound_combined(const CornerGeometry& geom, const Kernel& k, double eps,
                      double gamma) {
    if (!(eps > 0.0))
        throw std::invalid_argument("bound_combined: eps must be positive");
    if (geom.denom == 0.0)
        throw std::domain_error("curvature bound unbounded: degenerate corner");
    const double d3 = geom.denom * geom.denom * geom.denom;
    const double coef = std::abs(gamma) * k.sup_phi_prime() / (eps * eps) +
                        std::abs(1.0 - gamma) * k.sup_phi() / eps;
    return coef * geom.wedge / d3;
}

CurvatureReport select_epsilon(const Polyline& pl, const Kernel& k,
                               double kappa_max, double gamma) {
    if (!(kappa_max > 0.0))
        throw std::invalid_argument("select_epsilon: kappa_max must be positive");
    const std::size_t p = pl.segments();
    if (p < 2)
        throw std::invalid_argument("select_epsilon: polyline has no corner");
    for (std::size_t r = 1; r <= p; ++r)
        if (pl.segment_length(r) == 0.0)
            throw std::invalid_argument(
                "select_epsilon: zero-length segment adjacent to a corner");

    CurvatureReport rep;
    rep.kappa_max = kappa_max;
    const double a_coef = std::abs(gamma) * k.sup_phi_prime();
    const double b_coef = std::abs(1.0 - gamma) * k.sup_phi();

    double selected = 0.0;
    for (std::size_t c = 1; c < p; ++c) {
        CornerSelection sel;
        sel.corner = c;
        sel.geom = CornerGeometry::from_polyline(pl, c);
        if (sel.geom.wedge > 0.0) {
            // Solve a x^2 + b x = c_target for x = 1/eps (positive root).
            const double d3 =
                sel.geom.denom * sel.geom.denom * sel.geom.denom;
            const double target = kappa_max * d3 / sel.geom.wedge;
            double x;
            if (a_coef > 0.0) {
                x = (-b_coef +
                     std::sqrt(b_coef * b_coef + 4.0 * a_coef * target)) /
                    (2.0 * a_coef);
            } else if (b_coef > 0.0) {
                x = target / b_coef;
            } else {
                x = 0.0;  // gamma combination with zero coefficients
            }
            sel.eps_k = x > 0.0 ? 1.0 / x : 0.0;
        }
        selected = std::max(selected, sel.eps_k);
        rep.per_corner.push_back(std::move(sel));
    }

    if (selected == 0.0) selected = kDefaultEpsilon;  // all corners collinear
    if (selected > kEpsilonClamp) {
        selected = kEpsilonClamp;
        rep.clamped = true;
    }
    rep.selected_eps = selected;
    for (auto& sel : rep.per_corner)
        sel.bound_at_selected =
            sel.geom.wedge > 0.0
                ? bound_combined(sel.geom, k, selected, gamma)
                : 0.0;

    // Verification pass: the per-corner bound assumes no corner interaction,
    // so sample the actual curvature at the selected radius.
    SmoothingConfig cfg;
    cfg.method = Method::Combined;
    cfg.eps = selected;
    cfg.gamma = gamma;
    const std::size_t count = 200 * p + 1;
    const auto sp = sample(pl, k, cfg, 0.0, static_cast<double>(p), count);
    rep.sampled_max_curvature =
        *std::max_element(sp.curvature.begin(), sp.curvature.end());
    rep.feasible = rep.sampled_max_curvature <= kappa_max * (1.0 + 1e-9);
    return rep;
}

}  // namespace mollipath
