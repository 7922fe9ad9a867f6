#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mollipath/curvature.hpp"
#include "mollipath/io.hpp"
#include "mollipath/kernel.hpp"
#include "mollipath/mollify.hpp"
#include "mollipath/polyline.hpp"
#include "mollipath/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBadParams = 3;
constexpr int kExitInfeasible = 4;

struct Options {
    std::string input;
    std::string output;
    std::string method = "directional";
    double epsilon = 0.25;
    double gamma = 1.0;
    std::size_t samples = 1000;
    double kappa_max = 0.0;
    double kernel_tol = 1e-12;
    std::string suite = "all";
    std::vector<double> extend;
    bool echo_input = false;
};

/// Opens the requested output ("" or "-" means stdout).
class OutputStream {
public:
    explicit OutputStream(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw mollipath::io::io_error("cannot open output file: " + path);
        }
    }
    std::ostream& get() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

mollipath::Method parse_method(const std::string& name) {
    if (name == "conventional") return mollipath::Method::Conventional;
    if (name == "directional") return mollipath::Method::Directional;
    if (name == "combined") return mollipath::Method::Combined;
    throw std::invalid_argument("unknown method: " + name);
}

std::uint64_t env_seed() {
    if (const char* s = std::getenv("MOLLIPATH_SEED"))
        return std::strtoull(s, nullptr, 10);
    return 20250101ULL;
}

mollipath::io::RunManifest make_manifest(const std::string& command,
                                         const Options& opt) {
    mollipath::io::RunManifest m;
    m.command = command;
    m.input_path = opt.input;
    m.output_path = opt.output;
    m.method = opt.method;
    m.eps = opt.epsilon;
    m.gamma = opt.gamma;
    m.samples = opt.samples;
    m.kernel_tol = opt.kernel_tol;
    m.seed = env_seed();
    return m;
}

void warn_epsilon(double eps) {
    if (eps >= 1.0)
        std::cerr << "warning: epsilon >= 1, waypoint preservation is not "
                     "guaranteed\n";
    if (eps >= 0.5)
        std::cerr << "warning: epsilon >= 0.5, coincidence windows are empty\n";
}

int cmd_smooth(const Options& opt) {
    const auto pl = mollipath::io::load_waypoints(opt.input);
    OutputStream out(opt.output);
    if (opt.echo_input) {
        out.get() << mollipath::io::waypoints_to_csv(pl);
        return kExitOk;
    }
    warn_epsilon(opt.epsilon);
    mollipath::SmoothingConfig cfg;
    cfg.eps = opt.epsilon;
    cfg.gamma = opt.gamma;
    cfg.method = parse_method(opt.method);
    double t0 = 0.0, t1 = static_cast<double>(pl.segments());
    if (opt.extend.size() == 2) {
        t0 = opt.extend[0];
        t1 = opt.extend[1];
        if (!(t1 > t0)) throw std::invalid_argument("--extend needs a < b");
    }
    const auto k = mollipath::Kernel::build_bump(opt.kernel_tol);
    const auto sp = mollipath::sample(pl, k, cfg, t0, t1, opt.samples);
    mollipath::io::write_samples_csv(out.get(), make_manifest("smooth", opt), sp);
    return kExitOk;
}

int cmd_curvature(const Options& opt) {
    const auto pl = mollipath::io::load_waypoints(opt.input);
    warn_epsilon(opt.epsilon);
    mollipath::SmoothingConfig cfg;
    cfg.eps = opt.epsilon;
    cfg.gamma = opt.gamma;
    cfg.method = parse_method(opt.method);
    const auto k = mollipath::Kernel::build_bump(opt.kernel_tol);

    double bound = 0.0;
    for (std::size_t c = 1; c < pl.segments(); ++c) {
        const auto geom = mollipath::CornerGeometry::from_polyline(pl, c);
        if (geom.wedge == 0.0) continue;  // straight corner: no curvature
        bound = std::max(bound, mollipath::bound_combined(
                                    geom, k, cfg.eps, cfg.effective_gamma()));
    }
    const auto sp = mollipath::sample(pl, k, cfg, 0.0,
                                      static_cast<double>(pl.segments()),
                                      opt.samples);
    OutputStream out(opt.output);
    out.get() << make_manifest("curvature", opt).csv_header();
    out.get() << "t,kappa,bound\n";
    for (std::size_t j = 0; j < sp.parameters.size(); ++j)
        out.get() << mollipath::io::format_double(sp.parameters[j]) << ','
                  << mollipath::io::format_double(sp.curvature[j]) << ','
                  << mollipath::io::format_double(bound) << '\n';
    return kExitOk;
}

int cmd_select_epsilon(const Options& opt) {
    const auto pl = mollipath::io::load_waypoints(opt.input);
    const auto k = mollipath::Kernel::build_bump(opt.kernel_tol);
    const auto rep = mollipath::select_epsilon(pl, k, opt.kappa_max, opt.gamma);

    nlohmann::ordered_json j;
    j["manifest"] = nlohmann::ordered_json::parse(
        make_manifest("select-epsilon", opt).to_json());
    j["kappa_max"] = rep.kappa_max;
    j["selected_eps"] = rep.selected_eps;
    j["clamped"] = rep.clamped;
    j["sampled_max_curvature"] = rep.sampled_max_curvature;
    j["feasible"] = rep.feasible;
    j["per_corner"] = nlohmann::ordered_json::array();
    for (const auto& sel : rep.per_corner) {
        nlohmann::ordered_json c;
        c["corner"] = sel.corner;
        c["eps_k"] = sel.eps_k;
        c["bound_at_selected"] = sel.bound_at_selected;
        c["wedge"] = sel.geom.wedge;
        c["denom"] = sel.geom.denom;
        c["s_bar"] = sel.geom.s_bar;
        j["per_corner"].push_back(std::move(c));
    }
    OutputStream out(opt.output);
    out.get() << j.dump(2) << '\n';
    if (rep.clamped && !rep.feasible) return kExitInfeasible;
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    const auto k = mollipath::Kernel::build_bump(opt.kernel_tol);
    const auto reports = mollipath::verify::run_suite(opt.suite, k, env_seed());
    OutputStream out(opt.output);
    bool all_passed = true;
    for (const auto& r : reports) {
        out.get() << mollipath::verify::to_json_line(r) << '\n';
        all_passed = all_passed && r.passed;
    }
    return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smooth waypoint paths by mollification"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("--input", opt.input, "waypoint file (JSON or CSV)")
                ->required();
        sub->add_option("--output", opt.output, "output file (default stdout)");
        sub->add_option("--kernel-tol", opt.kernel_tol,
                        "kernel table tolerance")
            ->check(CLI::PositiveNumber);
    };

    auto* smooth = app.add_subcommand("smooth", "sample a smoothed path");
    add_common(smooth, true);
    smooth->add_option("--method", opt.method, "smoothing variant")
        ->check(CLI::IsMember({"conventional", "directional", "combined"}));
    smooth->add_option("--epsilon", opt.epsilon, "support radius")
        ->check(CLI::PositiveNumber);
    smooth->add_option("--gamma", opt.gamma, "family weight (combined)");
    smooth->add_option("--samples", opt.samples, "sample count")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
    smooth->add_option("--extend", opt.extend,
                       "sample the affine extension over [a,b]")
        ->expected(2);
    smooth->add_flag("--echo-input", opt.echo_input,
                     "re-emit the parsed waypoints as CSV and exit");

    auto* curv = app.add_subcommand("curvature", "sample curvature and bound");
    add_common(curv, true);
    curv->add_option("--method", opt.method, "smoothing variant")
        ->check(CLI::IsMember({"conventional", "directional", "combined"}));
    curv->add_option("--epsilon", opt.epsilon, "support radius")
        ->check(CLI::PositiveNumber);
    curv->add_option("--gamma", opt.gamma, "family weight (combined)");
    curv->add_option("--samples", opt.samples, "sample count")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));

    auto* sel = app.add_subcommand("select-epsilon",
                                   "choose eps for a curvature budget");
    add_common(sel, true);
    sel->add_option("--kappa-max", opt.kappa_max, "curvature budget")
        ->required()
        ->check(CLI::PositiveNumber);
    sel->add_option("--gamma", opt.gamma, "family weight");

    auto* ver = app.add_subcommand("verify", "run property-check suites");
    add_common(ver, false);
    ver->add_option("--suite", opt.suite,
                    "all|waypoints|windows|lengths|curvature|counterexamples|"
                    "convexity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadParams;
    }

    try {
        if (smooth->parsed()) return cmd_smooth(opt);
        if (curv->parsed()) return cmd_curvature(opt);
        if (sel->parsed()) return cmd_select_epsilon(opt);
        return cmd_verify(opt);
    } catch (const mollipath::io::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadParams;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitBadParams;
    }
}
