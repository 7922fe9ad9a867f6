#include "mollipath/polyline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mollipath {

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

Polyline::Polyline(std::vector<std::vector<double>> waypoints)
    : waypoints_(std::move(waypoints)) {
    if (waypoints_.size() < 2)
        throw std::invalid_argument("polyline needs at least 2 waypoints");
    dim_ = waypoints_.front().size();
    if (dim_ == 0) throw std::invalid_argument("polyline dimension must be >= 1");
    for (const auto& w : waypoints_)
        if (w.size() != dim_)
            throw std::invalid_argument("polyline waypoints have mixed dimensions");
    deltas_.reserve(waypoints_.size() - 1);
    for (std::size_t r = 1; r < waypoints_.size(); ++r) {
        std::vector<double> d(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            d[i] = waypoints_[r][i] - waypoints_[r - 1][i];
        deltas_.push_back(std::move(d));
    }
}

std::vector<double> Polyline::eval(double t) const {
    const auto p = static_cast<long>(segments());
    long r = static_cast<long>(std::floor(t)) + 1;
    r = std::clamp(r, 1L, p);
    const auto& base = waypoints_[static_cast<std::size_t>(r - 1)];
    const auto& d = deltas_[static_cast<std::size_t>(r - 1)];
    const double local = t - static_cast<double>(r - 1);
    std::vector<double> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = base[i] + d[i] * local;
    return out;
}

std::vector<double> Polyline::derivative(double t) const {
    const auto p = static_cast<long>(segments());
    long r = static_cast<long>(std::floor(t)) + 1;
    r = std::clamp(r, 1L, p);
    return deltas_[static_cast<std::size_t>(r - 1)];
}

double Polyline::length() const {
    double acc = 0.0;
    for (const auto& d : deltas_) acc += norm2(d);
    return acc;
}

double Polyline::segment_length(std::size_t r) const {
    return norm2(deltas_[r - 1]);
}

double Polyline::max_segment_length() const {
    double m = 0.0;
    for (const auto& d : deltas_) m = std::max(m, norm2(d));
    return m;
}

Polyline resample_curve(const std::vector<std::vector<double>>& samples,
                        double target_spacing) {
    if (samples.size() < 2)
        throw std::invalid_argument("resample_curve needs at least 2 samples");
    if (target_spacing <= 0.0) return Polyline(samples);
    std::vector<std::vector<double>> out;
    out.push_back(samples.front());
    const std::size_t dim = samples.front().size();
    for (std::size_t r = 1; r < samples.size(); ++r) {
        const auto& a = samples[r - 1];
        const auto& b = samples[r];
        if (a.size() != dim || b.size() != dim)
            throw std::invalid_argument("resample_curve samples have mixed dimensions");
        double len = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            len += (b[i] - a[i]) * (b[i] - a[i]);
        len = std::sqrt(len);
        const auto pieces =
            std::max<std::size_t>(1, static_cast<std::size_t>(
                                         std::ceil(len / target_spacing)));
        for (std::size_t j = 1; j <= pieces; ++j) {
            const double u = static_cast<double>(j) / static_cast<double>(pieces);
            std::vector<double> q(dim);
            for (std::size_t i = 0; i < dim; ++i)
                q[i] = a[i] + (b[i] - a[i]) * u;
            out.push_back(std::move(q));
        }
    }
    return Polyline(std::move(out));
}

}  // namespace mollipath
