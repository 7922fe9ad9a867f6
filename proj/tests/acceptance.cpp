// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Every check compares library output against an independent
// reference (quadrature oracle, analytic identity, or documented inequality).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "mollipath/curvature.hpp"
#include "mollipath/geometry.hpp"
#include "mollipath/kernel.hpp"
#include "mollipath/mollify.hpp"
#include "mollipath/polyline.hpp"
#include "mollipath/verify.hpp"

using namespace mollipath;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& info) {
    std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id,
                name.c_str(), info.empty() ? "" : " — ", info.c_str());
    if (!ok) ++g_failures;
}

double dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

const Polyline kAbs({{-1, 1}, {0, 0}, {1, 1}});
const Polyline kSix({{0, 0}, {1, 2}, {3, 3}, {4, 1}, {6, 0}, {7, 2}});

void criterion1_oracle_equivalence(const Kernel& k) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(814);
    std::uniform_int_distribution<std::size_t> segd(1, 8), dimd(1, 4);
    std::uniform_real_distribution<double> ed(0.05, 2.0), gd(-2.0, 2.0);
    std::uniform_int_distribution<int> orderd(0, 2);
    double max_err = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto pl = verify::random_polyline(rng, segd(rng), dimd(rng));
        std::uniform_real_distribution<double> td(
            -0.5, static_cast<double>(pl.segments()) + 0.5);
        const double t = td(rng), eps = ed(rng), gamma = gd(rng);
        const int order = orderd(rng);
        SmoothingConfig cfg{eps, gamma, Method::Combined};
        const auto closed = combined_eval(pl, k, cfg, t, order);
        const auto ref = verify::quadrature_oracle(pl, k, eps, gamma, t, order);
        for (std::size_t i = 0; i < closed.size(); ++i)
            max_err = std::max(max_err, std::abs(closed[i] - ref[i]));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    report(1, "closed form vs quadrature oracle (200 random paths)",
           max_err <= 1e-8 && secs < 60.0,
           "max err " + fmt(max_err) + ", " + fmt(secs) + " s");
}

void criterion2_waypoints(const Kernel& k) {
    double max_err = 0.0;
    for (const Polyline* pl : {&kAbs, &kSix})
        for (double eps : {0.1, 0.3, 0.5, 0.9})
            for (std::size_t c = 1; c < pl->segments(); ++c)
                max_err = std::max(
                    max_err,
                    dist(directional_eval(*pl, k, eps, double(c), 0),
                         pl->waypoint(c)));
    report(2, "interior waypoint preservation", max_err <= 1e-9,
           "max err " + fmt(max_err));
}

void criterion3_windows(const Kernel& k) {
    double max_err = 0.0;
    for (const Polyline* pl : {&kAbs, &kSix})
        for (double eps : {0.1, 0.25, 0.4})
            for (double gamma : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
                SmoothingConfig cfg{eps, gamma, Method::Combined};
                for (std::size_t r = 1; r <= pl->segments(); ++r)
                    for (int j = 0; j <= 100; ++j) {
                        const double t =
                            (r - 1) + eps + (1.0 - 2.0 * eps) * j / 100.0;
                        max_err = std::max(
                            max_err,
                            dist(combined_eval(*pl, k, cfg, t, 0), pl->eval(t)));
                    }
            }
    report(3, "coincidence windows across the gamma family", max_err <= 1e-9,
           "max deviation " + fmt(max_err));
}

void criterion4_curvature_bound(const Kernel& k) {
    std::mt19937_64 rng(271828);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    double worst_rel = -1.0, worst_formula = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::vector<double>> pts(3, std::vector<double>(2));
        for (auto& q : pts)
            for (auto& x : q) x = coord(rng);
        const Polyline pl(pts);
        const auto geom = CornerGeometry::from_polyline(pl, 1);
        if (geom.denom < 1e-6) continue;
        for (double eps : {0.1, 0.25, 0.5}) {
            for (double gamma : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
                const double bound = bound_combined(geom, k, eps, gamma);
                SmoothingConfig cfg{eps, gamma, Method::Combined};
                for (int j = 0; j <= 200; ++j) {
                    const double t = 1.0 - eps + 2.0 * eps * j / 200.0;
                    const auto d1 = combined_eval(pl, k, cfg, t, 1);
                    if (std::hypot(d1[0], d1[1]) < 1e-9) continue;
                    const auto d2 = combined_eval(pl, k, cfg, t, 2);
                    const double kap = curvature_from_derivatives(d1, d2);
                    worst_rel = std::max(worst_rel, kap / bound - 1.0);
                }
            }
            // Exact corner formula vs derivative-based curvature.
            for (int j = 0; j <= 100; ++j) {
                const double t = 1.0 - eps + 2.0 * eps * j / 100.0;
                const auto d1 = directional_eval(pl, k, eps, t, 1);
                if (std::hypot(d1[0], d1[1]) <= 1e-6) continue;
                const auto d2 = directional_eval(pl, k, eps, t, 2);
                const double a = curvature_from_derivatives(d1, d2);
                const double b = exact_corner_curvature(geom, k, eps, t);
                worst_formula = std::max(
                    worst_formula, std::abs(a - b) / std::max(a, 1e-12));
            }
        }
    }
    report(4, "curvature bound and exact corner formula",
           worst_rel <= 1e-6 && worst_formula <= 1e-8,
           "bound slack " + fmt(worst_rel) + ", formula rel err " +
               fmt(worst_formula));
}

void criterion5_length_ordering(const Kernel& k) {
    std::mt19937_64 rng(5050);
    std::uniform_int_distribution<std::size_t> segd(2, 6), dimd(1, 3);
    std::uniform_real_distribution<double> ed(0.01, 0.49);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto pl = verify::random_polyline(rng, segd(rng), dimd(rng));
        const double eps = ed(rng);
        const auto rep = verify::check_length_ordering(pl, k, eps);
        worst = std::max(worst, -rep.worst_violation);
    }
    report(5, "length ordering F <= input <= F-hat (50 random paths)",
           worst <= 1e-6, "worst excess " + fmt(worst));
}

void criterion6_convergence(const Kernel& k) {
    std::mt19937_64 rng(606);
    const auto pl = verify::random_polyline(rng, 4, 2);
    const double p = static_cast<double>(pl.segments());
    const double cap = 2.0 * pl.max_segment_length();
    bool ok = true;
    std::string info;
    double prev = -1.0;
    for (double eps : {0.4, 0.2, 0.1, 0.05}) {
        double sup = 0.0;
        for (int i = 0; i <= 20000; ++i) {
            const double t = p * i / 20000.0;
            sup = std::max(sup, dist(directional_eval(pl, k, eps, t, 0),
                                     pl.eval(t)));
        }
        ok = ok && sup <= cap * eps;
        if (prev >= 0.0) ok = ok && sup <= 0.5 * prev * 1.01;
        info += fmt(sup) + " ";
        prev = sup;
    }
    report(6, "linear convergence with halving eps", ok, "sup errors " + info);
}

void criterion7_order_relations(const Kernel& k) {
    bool ok = true;
    double worst = 0.0;
    for (const auto& wp : {std::vector<std::vector<double>>{{3}, {1}, {0}, {1}},
                           std::vector<std::vector<double>>{{0}, {-1}, {1}}}) {
        const Polyline g(wp);
        const double p = static_cast<double>(g.segments());
        for (double eps : {0.2, 0.45})
            for (int i = 0; i <= 4000; ++i) {
                const double t = p * i / 4000.0;
                const double ref = g.eval(t)[0];
                worst = std::max(
                    worst, ref - conventional_eval(g, k, eps, t, 0)[0]);
                worst = std::max(
                    worst, directional_eval(g, k, eps, t, 0)[0] - ref);
            }
    }
    ok = worst <= 1e-10;
    // Conventional smoothing never leaves the waypoint hull.
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < kSix.num_waypoints(); ++i)
        pts.push_back({kSix.waypoint(i)[0], kSix.waypoint(i)[1]});
    const auto hull = convex_hull_2d(pts);
    double hull_worst = 0.0;
    for (double eps : {0.3, 0.9})
        for (int i = 0; i <= 4000; ++i) {
            const double t = 5.0 * i / 4000.0;
            const auto v = conventional_eval(kSix, k, eps, t, 0);
            hull_worst =
                std::max(hull_worst, hull_outside_distance(hull, {v[0], v[1]}));
        }
    ok = ok && hull_worst <= 1e-9;
    report(7, "order relations and hull containment", ok,
           "convex excess " + fmt(worst) + ", hull excess " + fmt(hull_worst));
}

void criterion8_corner_identities(const Kernel& k) {
    std::mt19937_64 rng(888);
    std::uniform_real_distribution<double> yd(0.1, 3.0), bd(-2.0, 2.0);
    double worst1 = 0.0, worst2 = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const double y1 = bd(rng);
        const double y0 = y1 + yd(rng), y2 = y1 + yd(rng);  // V-shape
        const Polyline g({{y0}, {y1}, {y2}});
        for (double eps : {0.25, 0.5}) {
            worst1 = std::max(
                worst1, std::abs(directional_term_eval(g, k, eps, 1.0, 1)[0]));
            const double d2 = directional_term_eval(g, k, eps, 1.0, 2)[0];
            const double expect = k.scaled(eps, 0.0, 0) * (y0 + y2 - 2.0 * y1);
            worst2 = std::max(worst2, std::abs(d2 - expect));
        }
    }
    report(8, "corner derivative identities (20 random V-shapes)",
           worst1 <= 1e-9 && worst2 <= 1e-8,
           "D' err " + fmt(worst1) + ", D'' err " + fmt(worst2));
}

void criterion9_counterexamples(const Kernel& k) {
    const auto rep = verify::check_counterexamples(k);
    report(9, "counterexample reproduction (flower curve, steep kink)",
           rep.passed, "worst margin " + fmt(rep.worst_violation));
}

void criterion10_select_epsilon(const Kernel& k) {
    const auto geom = CornerGeometry::from_polyline(kAbs, 1);
    const double budget = bound_directional(geom, k, 0.5);
    const auto rep = select_epsilon(kAbs, k, budget, 1.0);
    const bool ok = std::abs(rep.selected_eps - 0.5) <= 0.005 && rep.feasible &&
                    rep.sampled_max_curvature <= budget * (1.0 + 1e-9);
    report(10, "epsilon selection inverts the corner budget", ok,
           "selected " + fmt(rep.selected_eps) + ", sampled max " +
               fmt(rep.sampled_max_curvature) + " vs budget " + fmt(budget));
}

}  // namespace

int main() {
    const auto k = Kernel::build_bump();
    criterion1_oracle_equivalence(k);
    criterion2_waypoints(k);
    criterion3_windows(k);
    criterion4_curvature_bound(k);
    criterion5_length_ordering(k);
    criterion6_convergence(k);
    criterion7_order_relations(k);
    criterion8_corner_identities(k);
    criterion9_counterexamples(k);
    criterion10_select_epsilon(k);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
