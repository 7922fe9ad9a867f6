#include "mollipath/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "mollipath/curvature.hpp"
#include "mollipath/geometry.hpp"
#include "mollipath/mollify.hpp"

namespace mollipath::verify {

namespace {

constexpr double kPi = 3.14159265358979323846;

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dist2(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a,
                            double b, double fa, double fm, double fb,
                            double whole, double tol, int depth) {
    if (depth > 48)
        throw std::runtime_error("quadrature oracle failed to converge");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double err = left + right - whole;
    // The tolerance is deliberately not halved on subdivision: for the
    // large-magnitude second-derivative integrands the halved target would
    // sink below the roundoff floor of the error estimate and never
    // terminate. The accumulated estimate stays well inside the comparison
    // tolerances used by the callers.
    if (std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol, depth + 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol, depth + 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0);
}

CheckReport make_report(std::string id, double max_err, double tol,
                        std::vector<CheckDetail> details = {}) {
    CheckReport r;
    r.check_id = std::move(id);
    r.tolerance = tol;
    r.worst_violation = -max_err;
    r.passed = r.worst_violation >= -tol;
    r.details = std::move(details);
    return r;
}

double chord_length(const Polyline& pl, const Kernel& k,
                    const SmoothingConfig& cfg, std::size_t count) {
    const double p = static_cast<double>(pl.segments());
    auto prev = combined_eval(pl, k, cfg, 0.0, 0);
    double acc = 0.0;
    for (std::size_t i = 1; i < count; ++i) {
        const double t = p * static_cast<double>(i) / static_cast<double>(count - 1);
        auto cur = combined_eval(pl, k, cfg, t, 0);
        acc += dist2(prev, cur);
        prev = std::move(cur);
    }
    return acc;
}

}  // namespace

std::string to_json_line(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    j["passed"] = r.passed;
    j["worst_violation"] = r.worst_violation;
    j["tolerance"] = r.tolerance;
    j["details"] = r.details.size();
    return j.dump();
}

std::vector<double> quadrature_oracle(const Polyline& pl, const Kernel& k,
                                      double eps, double gamma, double t,
                                      int order) {
    if (!(eps > 0.0))
        throw std::invalid_argument("quadrature_oracle: eps must be positive");
    if (order < 0 || order > 2)
        throw std::invalid_argument("quadrature_oracle: order must be 0..2");
    const std::size_t n = pl.dimension();
    const long p = static_cast<long>(pl.segments());

    auto fbar = [&](double s, std::size_t i) {
        long r = std::clamp(static_cast<long>(std::floor(s)) + 1, 1L, p);
        return pl.waypoint(static_cast<std::size_t>(r - 1))[i] +
               pl.delta(static_cast<std::size_t>(r))[i] *
                   (s - static_cast<double>(r - 1));
    };
    auto dfbar = [&](double s, std::size_t i) {
        long r = std::clamp(static_cast<long>(std::floor(s)) + 1, 1L, p);
        return pl.delta(static_cast<std::size_t>(r))[i];
    };
    // m-th derivative of x -> x * phi_eps(x).
    auto gm = [&](double x) {
        switch (order) {
            case 0: return x * k.scaled(eps, x, 0);
            case 1: return k.scaled(eps, x, 0) + x * k.scaled(eps, x, 1);
            default: return 2.0 * k.scaled(eps, x, 1) + x * k.scaled(eps, x, 2);
        }
    };

    // Split the support window at the interior integer breakpoints.
    std::vector<double> cuts{t - eps};
    const long lo = static_cast<long>(std::floor(t - eps)) + 1;
    const long hi = static_cast<long>(std::ceil(t + eps)) - 1;
    for (long c = std::max(1L, lo); c <= std::min(p - 1, hi); ++c)
        cuts.push_back(static_cast<double>(c));
    cuts.push_back(t + eps);
    std::sort(cuts.begin(), cuts.end());

    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        auto integrand = [&](double s) {
            double v = fbar(s, i) * k.scaled(eps, t - s, order);
            if (gamma != 0.0) v += gamma * dfbar(s, i) * gm(t - s);
            return v;
        };
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
            if (!(cuts[c + 1] > cuts[c])) continue;
            out[i] += adaptive_simpson(integrand, cuts[c], cuts[c + 1], 2.5e-11);
        }
    }
    return out;
}

CheckReport check_waypoint_preservation(const Polyline& pl, const Kernel& k,
                                        double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument(
            "check_waypoint_preservation: eps must be in (0,1)");
    const double tol = 1e-9;
    double max_err = 0.0;
    std::vector<CheckDetail> details;
    for (std::size_t c = 1; c < pl.segments(); ++c) {
        const double t = static_cast<double>(c);
        const auto v = directional_eval(pl, k, eps, t, 0);
        const double err = dist2(v, pl.waypoint(c));
        max_err = std::max(max_err, err);
        details.push_back({t, err, 0.0, tol});
    }
    return make_report("waypoint_preservation", max_err, tol,
                       std::move(details));
}

CheckReport check_coincidence_windows(const Polyline& pl, const Kernel& k,
                                      double eps, double gamma) {
    if (!(eps > 0.0 && eps < 0.5))
        throw std::invalid_argument(
            "check_coincidence_windows: eps must be in (0,1/2)");
    const double tol = 1e-9;
    SmoothingConfig cfg{eps, gamma, Method::Combined};
    double max_err = 0.0;
    for (std::size_t r = 1; r <= pl.segments(); ++r) {
        const double a = static_cast<double>(r - 1) + eps;
        const double b = static_cast<double>(r) - eps;
        for (int j = 0; j <= 100; ++j) {
            const double t = a + (b - a) * j / 100.0;
            const double err =
                dist2(combined_eval(pl, k, cfg, t, 0), pl.eval(t));
            max_err = std::max(max_err, err);
        }
    }
    return make_report("coincidence_windows", max_err, tol);
}

CheckReport check_switching_smoothness(const Polyline& pl, const Kernel& k,
                                       double eps, double gamma_a,
                                       double gamma_b, std::size_t r) {
    if (!(eps > 0.0 && eps < 0.5))
        throw std::invalid_argument(
            "check_switching_smoothness: eps must be in (0,1/2)");
    if (r < 1 || r > pl.segments())
        throw std::invalid_argument("check_switching_smoothness: bad segment");
    const double tol = 1e-6;
    const double m = static_cast<double>(r) - 0.5;  // midpoint of V_r
    const double h = std::min(1e-3, (0.5 - eps) / 8.0);
    SmoothingConfig ca{eps, gamma_a, Method::Combined};
    SmoothingConfig cb{eps, gamma_b, Method::Combined};
    const std::size_t n = pl.dimension();

    auto ga = [&](double t) { return combined_eval(pl, k, ca, t, 0); };
    auto gb = [&](double t) { return combined_eval(pl, k, cb, t, 0); };
    const auto a0 = ga(m), a1 = ga(m - h), a2 = ga(m - 2.0 * h),
               a3 = ga(m - 3.0 * h);
    const auto b0 = gb(m), b1 = gb(m + h), b2 = gb(m + 2.0 * h),
               b3 = gb(m + 3.0 * h);

    double jump0 = 0.0, jump1 = 0.0, jump2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        jump0 += (a0[i] - b0[i]) * (a0[i] - b0[i]);
        const double dl = (3.0 * a0[i] - 4.0 * a1[i] + a2[i]) / (2.0 * h);
        const double dr = (-3.0 * b0[i] + 4.0 * b1[i] - b2[i]) / (2.0 * h);
        jump1 += (dl - dr) * (dl - dr);
        const double sl =
            (2.0 * a0[i] - 5.0 * a1[i] + 4.0 * a2[i] - a3[i]) / (h * h);
        const double sr =
            (2.0 * b0[i] - 5.0 * b1[i] + 4.0 * b2[i] - b3[i]) / (h * h);
        jump2 += (sl - sr) * (sl - sr);
    }
    const double max_err =
        std::max({std::sqrt(jump0), std::sqrt(jump1), std::sqrt(jump2)});
    return make_report("switching_smoothness", max_err, tol);
}

CheckReport check_length_ordering(const Polyline& pl, const Kernel& k,
                                  double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("check_length_ordering: eps must be in (0,1)");
    const double tol = 1e-6;
    const std::size_t p = pl.segments();
    const std::size_t per =
        std::max<std::size_t>(1, (10000 + p - 1) / p);
    const std::size_t count = p * per + 1;  // grid hits every waypoint
    const double lf = pl.length();
    const double l_conv =
        chord_length(pl, k, {eps, 0.0, Method::Conventional}, count);
    const double l_dir =
        chord_length(pl, k, {eps, 1.0, Method::Directional}, count);
    const double max_err = std::max({l_conv - lf, lf - l_dir, 0.0});
    std::vector<CheckDetail> details{{0.0, l_conv, lf, tol},
                                     {1.0, l_dir, lf, tol}};
    return make_report("length_ordering", max_err, tol, std::move(details));
}

CheckReport check_counterexamples(const Kernel& k) {
    CheckReport rep;
    rep.check_id = "counterexamples";
    rep.tolerance = 0.0;

    const std::size_t waypoints = 2000;
    const Polyline flower = corpus::flower_path(waypoints);
    const double p = static_cast<double>(flower.segments());
    // Figure-scale eps lives on t in [0, 2*pi]; the polyline parameter
    // runs over [0, p].
    const double eps_big = 5.0 * p / (2.0 * kPi);
    const double eps_small = 1.25 * p / (2.0 * kPi);
    const double lf = flower.length();

    auto sample_dir = [&](double eps) {
        const std::size_t count = 5001;
        std::vector<Point2> pts;
        pts.reserve(count);
        double len = 0.0;
        std::vector<double> prev;
        for (std::size_t i = 0; i < count; ++i) {
            const double t = p * static_cast<double>(i) / (count - 1);
            auto v = directional_eval(flower, k, eps, t, 0);
            if (i > 0) len += dist2(prev, v);
            pts.push_back({v[0], v[1]});
            prev = std::move(v);
        }
        return std::pair(len, convex_hull_2d(std::move(pts)));
    };

    const auto [len_big, hull_big] = sample_dir(eps_big);
    const auto [len_small, hull_small] = sample_dir(eps_small);

    double worst_outside_big = 0.0, worst_outside_small = 0.0;
    for (std::size_t i = 0; i < flower.num_waypoints(); ++i) {
        const auto& w = flower.waypoint(i);
        const Point2 q{w[0], w[1]};
        worst_outside_big =
            std::max(worst_outside_big, hull_outside_distance(hull_big, q));
        worst_outside_small =
            std::max(worst_outside_small, hull_outside_distance(hull_small, q));
    }

    // Monotone slope-1/slope-30 kink; the directional mollification of it
    // is not monotone at eps = 0.5.
    const Polyline kink({{-1.0}, {0.0}, {30.0}});
    double min_slope = 0.0;
    {
        double prev = directional_eval(kink, k, 0.5, 0.0, 0)[0];
        const std::size_t count = 2001;
        const double h = 2.0 / (count - 1);
        for (std::size_t i = 1; i < count; ++i) {
            const double cur =
                directional_eval(kink, k, 0.5, i * h, 0)[0];
            min_slope = std::min(min_slope, (cur - prev) / h);
            prev = cur;
        }
    }

    // Positive margin = the expected behaviour was observed.
    const double m_len_big = lf - len_big;            // length shrinks
    const double m_hull_big = worst_outside_big - 1e-6;  // containment fails
    const double m_len_small = len_small - lf + 1e-6;    // ordering restored
    const double m_hull_small = 1e-9 - worst_outside_small;  // contained
    const double m_monotone = -min_slope - 1e-6;  // negative slope exists

    rep.details = {{5.0, len_big, lf, 0.0},
                   {5.0, worst_outside_big, 1e-6, 0.0},
                   {1.25, len_small, lf, 1e-6},
                   {1.25, worst_outside_small, 0.0, 1e-9},
                   {0.5, min_slope, 0.0, 1e-6}};
    rep.worst_violation = std::min(
        {m_len_big, m_hull_big, m_len_small, m_hull_small, m_monotone});
    rep.passed = rep.worst_violation >= -rep.tolerance;
    return rep;
}

CheckReport check_corner_convexity(double y0, double y1, double y2,
                                   const Kernel& k, double eps) {
    const Polyline g({{y0}, {y1}, {y2}});
    const double tol = 1e-8;
    std::vector<CheckDetail> details;

    const double d1 = directional_term_eval(g, k, eps, 1.0, 1)[0];
    double max_err = std::abs(d1);
    details.push_back({1.0, d1, 0.0, 1e-9});
    if (std::abs(d1) > 1e-9) max_err = std::max(max_err, std::abs(d1));

    const double d2 = directional_term_eval(g, k, eps, 1.0, 2)[0];
    const double expected = k.scaled(eps, 0.0, 0) * (y0 + y2 - 2.0 * y1);
    max_err = std::max(max_err, std::abs(d2 - expected));
    details.push_back({1.0, d2, expected, tol});

    const bool vshape = y0 > y1 && y2 > y1;
    const bool inverted = y0 < y1 && y2 < y1;
    if (vshape || inverted) {
        const double sign = vshape ? 1.0 : -1.0;
        double delta = eps / 2.0;
        bool found = false;
        for (int shrink = 0; shrink < 25 && !found; ++shrink, delta *= 0.5) {
            bool ok = true;
            const int grid = 40;
            const double h = 2.0 * delta / grid;
            for (int j = 0; j <= grid && ok; ++j) {
                const double t = 1.0 - delta + j * h;
                const double fm = directional_eval(g, k, eps, t - h, 0)[0];
                const double f0 = directional_eval(g, k, eps, t, 0)[0];
                const double fp = directional_eval(g, k, eps, t + h, 0)[0];
                if (sign * (fp - 2.0 * f0 + fm) < -1e-9 * h * h) ok = false;
                if (sign * (f0 - g.eval(t)[0]) > 1e-10) ok = false;
            }
            found = ok;
        }
        if (!found) max_err = std::max(max_err, 1.0);
        details.push_back({delta, found ? 1.0 : 0.0, 1.0, 0.0});
    }
    return make_report("corner_convexity", max_err, tol, std::move(details));
}

namespace corpus {

Polyline abs_path() { return Polyline({{-1, 1}, {0, 0}, {1, 1}}); }

Polyline three_point_path() { return Polyline({{0, 0}, {2, 1}, {3, 3}}); }

Polyline six_point_path() {
    return Polyline({{0, 0}, {1, 2}, {3, 3}, {4, 1}, {6, 0}, {7, 2}});
}

Polyline gamma_family_path() {
    return Polyline({{0, 0}, {2, 2}, {4, 1}, {5, 3}, {7, 2}, {8, 0}});
}

Polyline flower_path(std::size_t samples) {
    std::vector<std::vector<double>> pts;
    pts.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double t =
            2.0 * kPi * static_cast<double>(i) / static_cast<double>(samples - 1);
        const double r = 2.0 + std::cos(2.0 * t);
        pts.push_back({r * std::cos(t), r * std::sin(t)});
    }
    return Polyline(std::move(pts));
}

}  // namespace corpus

Polyline random_polyline(std::mt19937_64& rng, std::size_t segments,
                         std::size_t dim) {
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::vector<std::vector<double>> pts(segments + 1,
                                         std::vector<double>(dim));
    for (auto& p : pts)
        for (auto& x : p) x = coord(rng);
    return Polyline(std::move(pts));
}

std::vector<CheckReport> run_suite(const std::string& suite, const Kernel& k,
                                   std::uint64_t seed) {
    const bool all = suite == "all";
    std::vector<CheckReport> out;
    auto tag = [](CheckReport r, const std::string& suffix) {
        r.check_id += "/" + suffix;
        return r;
    };
    char buf[128];

    if (all || suite == "waypoints") {
        const struct {
            const char* name;
            Polyline pl;
        } paths[] = {{"abs", corpus::abs_path()},
                     {"six_point", corpus::six_point_path()}};
        for (const auto& pc : paths)
            for (double eps : {0.1, 0.3, 0.5, 0.9}) {
                std::snprintf(buf, sizeof buf, "%s/eps=%.2f", pc.name, eps);
                out.push_back(
                    tag(check_waypoint_preservation(pc.pl, k, eps), buf));
            }
    }
    if (all || suite == "windows") {
        const struct {
            const char* name;
            Polyline pl;
        } paths[] = {{"abs", corpus::abs_path()},
                     {"six_point", corpus::six_point_path()},
                     {"gamma_family", corpus::gamma_family_path()}};
        for (const auto& pc : paths)
            for (double eps : {0.1, 0.25, 0.4})
                for (double gamma : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
                    std::snprintf(buf, sizeof buf, "%s/eps=%.2f/gamma=%.1f",
                                  pc.name, eps, gamma);
                    out.push_back(tag(
                        check_coincidence_windows(pc.pl, k, eps, gamma), buf));
                }
        out.push_back(tag(check_switching_smoothness(
                              corpus::gamma_family_path(), k, 0.4, 0.0, 1.0, 3),
                          "gamma_family/0->1/r=3"));
        out.push_back(tag(check_switching_smoothness(
                              corpus::gamma_family_path(), k, 0.4, 1.0, -1.0, 2),
                          "gamma_family/1->-1/r=2"));
    }
    if (all || suite == "lengths") {
        const struct {
            const char* name;
            Polyline pl;
        } paths[] = {{"abs", corpus::abs_path()},
                     {"three_point", corpus::three_point_path()},
                     {"six_point", corpus::six_point_path()},
                     {"gamma_family", corpus::gamma_family_path()}};
        for (const auto& pc : paths)
            for (double eps : {0.1, 0.25, 0.48}) {
                std::snprintf(buf, sizeof buf, "%s/eps=%.2f", pc.name, eps);
                out.push_back(tag(check_length_ordering(pc.pl, k, eps), buf));
            }
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> epsd(0.02, 0.48);
        std::uniform_int_distribution<std::size_t> segd(2, 6), dimd(1, 3);
        for (int i = 0; i < 5; ++i) {
            const auto pl = random_polyline(rng, segd(rng), dimd(rng));
            const double eps = epsd(rng);
            std::snprintf(buf, sizeof buf, "random%d/eps=%.3f", i, eps);
            out.push_back(tag(check_length_ordering(pl, k, eps), buf));
        }
    }
    if (all || suite == "curvature") {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_real_distribution<double> coord(-2.0, 2.0);
        for (double eps : {0.1, 0.25, 0.5}) {
            double max_rel = 0.0;
            for (int i = 0; i < 20; ++i) {
                std::vector<std::vector<double>> pts(3, std::vector<double>(2));
                for (auto& q : pts)
                    for (auto& x : q) x = coord(rng);
                Polyline pl(pts);
                const auto geom = CornerGeometry::from_polyline(pl, 1);
                if (geom.denom < 1e-3) continue;
                const double bound = bound_directional(geom, k, eps);
                SmoothingConfig cfg{eps, 1.0, Method::Directional};
                for (int j = 0; j <= 400; ++j) {
                    const double t = 1.0 - eps + 2.0 * eps * j / 400.0;
                    const auto d1 = combined_eval(pl, k, cfg, t, 1);
                    const auto d2 = combined_eval(pl, k, cfg, t, 2);
                    if (norm2(d1) < 1e-9) continue;
                    const double kap = curvature_from_derivatives(d1, d2);
                    max_rel = std::max(max_rel, kap / bound - 1.0);
                }
            }
            std::snprintf(buf, sizeof buf, "bound/eps=%.2f", eps);
            out.push_back(tag(make_report("curvature", max_rel, 1e-6), buf));
        }
        // Exact corner formula vs derivative-based curvature.
        double max_rel = 0.0;
        for (int i = 0; i < 20; ++i) {
            std::vector<std::vector<double>> pts(3, std::vector<double>(2));
            for (auto& q : pts)
                for (auto& x : q) x = coord(rng);
            Polyline pl(pts);
            const auto geom = CornerGeometry::from_polyline(pl, 1);
            if (geom.denom < 1e-3) continue;
            for (int j = 0; j <= 100; ++j) {
                const double t = 0.6 + 0.8 * j / 100.0;
                const auto d1 = directional_eval(pl, k, 0.4, t, 1);
                if (norm2(d1) < 1e-6) continue;
                const auto d2 = directional_eval(pl, k, 0.4, t, 2);
                const double a = curvature_from_derivatives(d1, d2);
                const double b = exact_corner_curvature(geom, k, 0.4, t);
                const double denom = std::max(std::abs(a), 1e-12);
                max_rel = std::max(max_rel, std::abs(a - b) / denom);
            }
        }
        out.push_back(
            tag(make_report("curvature", max_rel, 1e-8), "exact_formula"));
    }
    if (all || suite == "counterexamples") {
        out.push_back(check_counterexamples(k));
    }
    if (all || suite == "convexity") {
        for (double eps : {0.25, 0.5})
            for (auto [y0, y1, y2] :
                 {std::tuple{1.0, 0.0, 1.0}, std::tuple{2.0, -1.0, 0.5},
                  std::tuple{-0.5, -2.0, 3.0}, std::tuple{0.0, 2.0, -1.0}}) {
                std::snprintf(buf, sizeof buf, "v=(%.1f,%.1f,%.1f)/eps=%.2f",
                              y0, y1, y2, eps);
                out.push_back(
                    tag(check_corner_convexity(y0, y1, y2, k, eps), buf));
            }
    }
    if (out.empty() && !all)
        throw std::invalid_argument("unknown verify suite: " + suite);
    return out;
}

}  // namespace mollipath::verify
