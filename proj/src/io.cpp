#include "mollipath/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mollipath::io {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(trim(field));
    return out;
}

Polyline parse_json_waypoints(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("invalid JSON input: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dimension") || !j.contains("waypoints"))
        throw io_error(
            "JSON input must be {\"dimension\": n, \"waypoints\": [[..],..]}");
    if (!j["dimension"].is_number_integer() || !j["waypoints"].is_array())
        throw io_error("JSON input: bad field types");
    const auto n = j["dimension"].get<long long>();
    if (n < 1) throw io_error("JSON input: dimension must be >= 1");
    std::vector<std::vector<double>> pts;
    for (const auto& row : j["waypoints"]) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw io_error("JSON input: waypoint dimension mismatch");
        std::vector<double> p;
        for (const auto& v : row) {
            if (!v.is_number()) throw io_error("JSON input: non-numeric coordinate");
            p.push_back(v.get<double>());
        }
        pts.push_back(std::move(p));
    }
    if (pts.size() < 2) throw io_error("input needs at least 2 waypoints");
    return Polyline(std::move(pts));
}

Polyline parse_csv_waypoints(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    std::vector<std::vector<double>> pts;
    bool first = true;
    while (std::getline(ss, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto fields = split_csv(t);
        if (first && !fields.empty() && fields[0] == "x0") {
            // Header row x0..x{n-1}; validated only by shape later.
            first = false;
            continue;
        }
        first = false;
        std::vector<double> p;
        for (const auto& f : fields) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(f, &used);
            } catch (const std::exception&) {
                throw io_error("CSV input: non-numeric field '" + f + "'");
            }
            if (used != f.size())
                throw io_error("CSV input: trailing junk in field '" + f + "'");
            p.push_back(v);
        }
        if (!pts.empty() && p.size() != pts.front().size())
            throw io_error("CSV input: inconsistent column count");
        pts.push_back(std::move(p));
    }
    if (pts.size() < 2) throw io_error("input needs at least 2 waypoints");
    return Polyline(std::move(pts));
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["input"] = input_path;
    j["output"] = output_path;
    j["method"] = method;
    j["epsilon"] = eps;
    j["gamma"] = gamma;
    j["samples"] = samples;
    j["kernel_tol"] = kernel_tol;
    j["seed"] = seed;
    j["version"] = version;
    return j.dump();
}

std::string RunManifest::csv_header() const {
    return "# " + to_json() + "\n";
}

Polyline parse_waypoints(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_json_waypoints(text);
        break;
    }
    return parse_csv_waypoints(text);
}

Polyline load_waypoints(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_waypoints(ss.str());
}

std::string waypoints_to_csv(const Polyline& pl) {
    std::string out;
    for (std::size_t i = 0; i < pl.dimension(); ++i) {
        if (i) out += ',';
        out += "x" + std::to_string(i);
    }
    out += '\n';
    for (std::size_t w = 0; w < pl.num_waypoints(); ++w) {
        const auto& p = pl.waypoint(w);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += ',';
            out += format_double(p[i]);
        }
        out += '\n';
    }
    return out;
}

void write_samples_csv(std::ostream& os, const RunManifest& manifest,
                       const SampledPath& sp) {
    os << manifest.csv_header();
    const std::size_t n = sp.positions.empty() ? 0 : sp.positions[0].size();
    os << "t";
    for (std::size_t i = 0; i < n; ++i) os << ",x" << i;
    for (std::size_t i = 0; i < n; ++i) os << ",d1_" << i;
    for (std::size_t i = 0; i < n; ++i) os << ",d2_" << i;
    os << ",kappa\n";
    for (std::size_t j = 0; j < sp.parameters.size(); ++j) {
        os << format_double(sp.parameters[j]);
        for (double v : sp.positions[j]) os << ',' << format_double(v);
        for (double v : sp.d1[j]) os << ',' << format_double(v);
        for (double v : sp.d2[j]) os << ',' << format_double(v);
        os << ',' << format_double(sp.curvature[j]) << '\n';
    }
}

}  // namespace mollipath::io
