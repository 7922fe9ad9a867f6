#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "mollipath/mollify.hpp"
#include "mollipath/polyline.hpp"

namespace mollipath::io {

/// Malformed or unreadable input (distinct from invalid parameter values).
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All run parameters, serialized verbatim into every output file header so
/// identical arguments reproduce byte-identical files.
struct RunManifest {
    std::string command;
    std::string input_path;
    std::string output_path;
    std::string method;
    double eps = 0.0;
    double gamma = 1.0;
    std::size_t samples = 0;
    double kernel_tol = 0.0;
    std::uint64_t seed = 0;
    std::string version = "mollipath 1.0.0";

    std::string to_json() const;
    /// The manifest as '#'-prefixed CSV comment lines.
    std::string csv_header() const;
};

/// 17 significant digits: round-trip exact for doubles.
std::string format_double(double v);

/// Reads waypoints from a JSON object {"dimension": n, "waypoints": [[..],..]}
/// or from CSV with one waypoint per row (no header, or header x0..x{n-1}).
/// The format is detected from the content. Throws io_error on anything
/// malformed.
Polyline load_waypoints(const std::string& path);
Polyline parse_waypoints(const std::string& text);

/// Waypoints as CSV with an x0..x{n-1} header (parses back to the identical
/// polyline).
std::string waypoints_to_csv(const Polyline& pl);

/// Sampled trajectory as CSV: manifest comment lines, then
/// t,x0..x{n-1},d1_0..d1_{n-1},d2_0..d2_{n-1},kappa.
void write_samples_csv(std::ostream& os, const RunManifest& manifest,
                       const SampledPath& sp);

}  // namespace mollipath::io
