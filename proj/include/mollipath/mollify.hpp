#pragma once

#include <cstddef>
#include <vector>

#include "mollipath/kernel.hpp"
#include "mollipath/polyline.hpp"

namespace mollipath {

enum class Method { Conventional, Directional, Combined };

struct SmoothingConfig {
    double eps = 0.25;        // mollifier support radius
    double gamma = 1.0;       // family weight (0 conventional, 1 directional)
    Method method = Method::Directional;

    /// Effective family weight for this config.
    double effective_gamma() const {
        switch (method) {
            case Method::Conventional: return 0.0;
            case Method::Directional: return 1.0;
            default: return gamma;
        }
    }
};

/// Closed-form values of the conventional mollification F_eps and the
/// directional derivative term D_eps at parameter t, both of the requested
/// derivative order (0, 1 or 2). Every smoothing variant is a combination
/// of these two vectors. Evaluation touches only the kernel primitives
/// (cdf, moment, phi, phi') at the <= p+1 breakpoints inside the support
/// window, so cost is O(segments in window).
struct EvalTerms {
    std::vector<double> conventional;  // F_eps^(order)(t)
    std::vector<double> directional;   // D_eps^(order)(t)
};

EvalTerms eval_terms(const Polyline& pl, const Kernel& k, double eps, double t,
                     int order);

std::vector<double> conventional_eval(const Polyline& pl, const Kernel& k,
                                      double eps, double t, int order);
std::vector<double> directional_term_eval(const Polyline& pl, const Kernel& k,
                                          double eps, double t, int order);
/// F_hat = F + D.
std::vector<double> directional_eval(const Polyline& pl, const Kernel& k,
                                     double eps, double t, int order);
/// G^gamma = F + gamma * D.
std::vector<double> combined_eval(const Polyline& pl, const Kernel& k,
                                  const SmoothingConfig& cfg, double t,
                                  int order);

struct SampledPath {
    std::vector<double> parameters;
    std::vector<std::vector<double>> positions;
    std::vector<std::vector<double>> d1;
    std::vector<std::vector<double>> d2;
    std::vector<double> curvature;  // 0 where the speed vanishes
};

/// Uniform-grid evaluation of position, first/second derivative and
/// curvature over [t_start, t_end]. Deterministic.
SampledPath sample(const Polyline& pl, const Kernel& k,
                   const SmoothingConfig& cfg, double t_start, double t_end,
                   std::size_t count);

}  // namespace mollipath
