#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "elastica/bounds.hpp"
#include "elastica/competitor.hpp"
#include "elastica/energy.hpp"
#include "elastica/errors.hpp"
#include "elastica/io.hpp"
#include "elastica/optimizer.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

int read_thread_cap() {
    const char* env = std::getenv("ELASTICA_THREADS");
    if (!env) return 1;
    const int n = std::atoi(env);
    return n >= 1 ? n : 1;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        elastica::write_text_file(out_path, content);
}

struct CommonFlags {
    double p = 1.0;
    double lambda = 1.0;
    std::uint32_t seed = 42;
    int quad_n = 256;
    int quad_radial = 64;
    std::string out;
    std::string timestamp;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--p", f.p, "distance exponent (>= 1)");
    cmd->add_option("--lambda", f.lambda, "elastica weight (> 0)");
    cmd->add_option("--seed", f.seed, "seed for any randomized component");
    cmd->add_option("--quad-n", f.quad_n, "angular quadrature panels");
    cmd->add_option("--quad-radial", f.quad_radial, "radial Gauss-Legendre nodes");
    cmd->add_option("--out", f.out, "output file (default stdout)");
    cmd->add_option("--timestamp", f.timestamp,
                    "pin the manifest timestamp (for reproducible outputs)");
}

elastica::RunManifest make_manifest(const std::string& command,
                                    std::vector<std::string> inputs,
                                    const CommonFlags& f,
                                    nlohmann::json extra = {}) {
    elastica::RunManifest m;
    m.command = command;
    m.input_paths = std::move(inputs);
    m.seed = f.seed;
    m.timestamp = f.timestamp;
    m.config_echo = {{"p", f.p},
                     {"lambda", f.lambda},
                     {"quad_n", f.quad_n},
                     {"quad_radial", f.quad_radial},
                     {"threads", read_thread_cap()}};
    for (auto& [k, v] : extra.items()) m.config_echo[k] = v;
    return m;
}

void require_params(const CommonFlags& f) {
    if (f.p < 1.0) throw CLI::ValidationError("--p must be >= 1");
    if (f.lambda <= 0.0) throw CLI::ValidationError("--lambda must be > 0");
}

std::vector<double> parse_eps_list(const std::string& spec) {
    std::vector<double> out;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        size_t pos = 0;
        const double v = std::stod(token, &pos);
        if (pos != token.size() || !(v > 0.0))
            throw CLI::ValidationError("--eps-list entries must be positive numbers");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("--eps-list is empty");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Average-distance + elastica energy toolkit for convex planar shapes"};
    app.require_subcommand(1);

    // --- eval ---
    auto* eval = app.add_subcommand("eval", "evaluate the energy of a shape");
    std::string eval_shape_path;
    CommonFlags eval_flags;
    eval->add_option("shape", eval_shape_path, "shape JSON file")->required();
    add_common(eval, eval_flags);

    // --- optimize ---
    auto* optimize = app.add_subcommand("optimize", "minimize the energy");
    CommonFlags opt_flags;
    std::string opt_init, opt_trace_out, opt_shape_out, opt_method = "projected-gradient";
    int opt_max_iters = 200, opt_k_max = 8;
    double opt_step_init = 0.05, opt_tol_grad = 1e-3, opt_tol_energy = 1e-7;
    optimize->add_option("--init", opt_init, "initial shape JSON (default: optimal disk)");
    optimize->add_option("--max-iters", opt_max_iters, "iteration cap");
    optimize->add_option("--k-max", opt_k_max, "Fourier truncation of iterates");
    optimize->add_option("--step-init", opt_step_init, "initial step size");
    optimize->add_option("--tol-grad", opt_tol_grad, "gradient-norm stopping tolerance");
    optimize->add_option("--tol-energy", opt_tol_energy, "energy-decrease stopping tolerance");
    optimize->add_option("--method", opt_method, "projected-gradient | simplex-search");
    optimize->add_option("--trace-out", opt_trace_out, "write per-iteration CSV here");
    optimize->add_option("--shape-out", opt_shape_out, "write final shape JSON here");
    add_common(optimize, opt_flags);

    // --- bounds ---
    auto* bounds = app.add_subcommand("bounds", "verify the geometric inequalities");
    std::string bounds_shape_path;
    CommonFlags bounds_flags;
    bool bounds_json = false;
    bounds->add_option("shape", bounds_shape_path, "shape JSON file")->required();
    bounds->add_flag("--json", bounds_json, "emit JSON instead of the text table");
    add_common(bounds, bounds_flags);

    // --- competitor ---
    auto* competitor = app.add_subcommand("competitor", "run the boundary-deformation sweep");
    std::string comp_shape_path, comp_eps_spec = "0.02,0.01,0.005,0.0025", comp_svg;
    CommonFlags comp_flags;
    int comp_samples = 65536;
    competitor->add_option("shape", comp_shape_path, "shape JSON file")->required();
    competitor->add_option("--eps-list", comp_eps_spec, "comma-separated eps values");
    competitor->add_option("--svg", comp_svg, "write an overlay SVG of both boundaries");
    competitor->add_option("--samples", comp_samples, "boundary samples for the sweep");
    add_common(competitor, comp_flags);

    // --- plot ---
    auto* plot = app.add_subcommand("plot", "render shapes or traces as SVG");
    std::vector<std::string> plot_shapes;
    std::string plot_trace, plot_svg;
    plot->add_option("--shape", plot_shapes, "shape JSON file (repeatable, overlaid)");
    plot->add_option("--trace", plot_trace, "optimizer trace CSV");
    plot->add_option("--svg", plot_svg, "output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) {
            require_params(eval_flags);
            const elastica::ConvexShape shape = elastica::read_shape(eval_shape_path);
            elastica::QuadratureConfig q;
            q.n_theta = eval_flags.quad_n;
            q.n_radial = eval_flags.quad_radial;
            q.seed = eval_flags.seed;
            const elastica::EnergyBreakdown e =
                elastica::total_energy(shape, eval_flags.p, eval_flags.lambda, q);
            const auto manifest = make_manifest("eval", {eval_shape_path}, eval_flags);
            emit(elastica::energy_to_json(e, manifest).dump(2) + "\n", eval_flags.out);
            return kExitOk;
        }

        if (optimize->parsed()) {
            require_params(opt_flags);
            elastica::OptimizerConfig cfg;
            cfg.p = opt_flags.p;
            cfg.lambda = opt_flags.lambda;
            cfg.k_max = opt_k_max;
            cfg.max_iters = opt_max_iters;
            cfg.step_init = opt_step_init;
            cfg.tol_grad = opt_tol_grad;
            cfg.tol_energy = opt_tol_energy;
            cfg.seed = opt_flags.seed;
            cfg.quadrature.n_theta = std::min(opt_flags.quad_n, 128);
            cfg.quadrature.n_radial = std::min(opt_flags.quad_radial, 32);
            cfg.quadrature.seed = opt_flags.seed;
            if (opt_method == "simplex-search")
                cfg.method = elastica::OptimizerConfig::Method::SimplexSearch;
            else if (opt_method != "projected-gradient")
                throw CLI::ValidationError("--method must be projected-gradient or simplex-search");

            elastica::ConvexShape init =
                opt_init.empty()
                    ? elastica::make_disk(elastica::optimal_disk_radius(cfg.p, cfg.lambda))
                    : elastica::read_shape(opt_init);
            const elastica::OptimizationTrace trace = elastica::minimize(cfg, init);

            const auto manifest = make_manifest(
                "optimize", opt_init.empty() ? std::vector<std::string>{} : std::vector<std::string>{opt_init},
                opt_flags,
                {{"max_iters", opt_max_iters}, {"k_max", opt_k_max}, {"method", opt_method}});
            nlohmann::json j;
            j["converged"] = trace.converged;
            j["stop_reason"] = trace.stop_reason;
            j["iterations"] = trace.rows.empty() ? 0 : trace.rows.back().iter;
            j["final_energy"] = trace.rows.empty() ? 0.0 : trace.rows.back().energy;
            j["final_shape"] = elastica::shape_to_json(trace.final_shape);
            j["manifest"] = manifest.to_json();
            emit(j.dump(2) + "\n", opt_flags.out);
            if (!opt_trace_out.empty())
                elastica::write_text_file(opt_trace_out, elastica::trace_to_csv(trace));
            if (!opt_shape_out.empty())
                elastica::write_text_file(
                    opt_shape_out, elastica::shape_to_json(trace.final_shape).dump(2) + "\n");
            return kExitOk;
        }

        if (bounds->parsed()) {
            require_params(bounds_flags);
            const elastica::ConvexShape shape = elastica::read_shape(bounds_shape_path);
            elastica::QuadratureConfig q;
            q.n_theta = bounds_flags.quad_n;
            q.n_radial = bounds_flags.quad_radial;
            const elastica::BoundsReport report = elastica::verify_bounds(
                shape, bounds_flags.p, bounds_flags.lambda, q, bounds_shape_path);
            const auto manifest = make_manifest("bounds", {bounds_shape_path}, bounds_flags);
            if (bounds_json)
                emit(elastica::bounds_to_json(report, manifest).dump(2) + "\n", bounds_flags.out);
            else
                emit(elastica::bounds_to_table(report), bounds_flags.out);
            return report.all_satisfied() ? kExitOk : kExitDomain;
        }

        if (competitor->parsed()) {
            require_params(comp_flags);
            const std::vector<double> eps_list = parse_eps_list(comp_eps_spec);
            const elastica::ConvexShape shape = elastica::read_shape(comp_shape_path);
            const elastica::BoundaryCurve curve =
                elastica::boundary_from_shape(shape, comp_samples);

            // Per-eps feasibility first, so oversized eps values are reported
            // as rows instead of aborting the sweep.
            std::vector<double> good;
            nlohmann::json failed = nlohmann::json::array();
            for (double eps : eps_list) {
                try {
                    auto [frame, framed] = elastica::canonical_frame(curve, 0.0, eps);
                    (void)frame;
                    elastica::build_competitor(framed, eps, comp_flags.p, comp_flags.lambda);
                    good.push_back(eps);
                } catch (const elastica::EpsilonTooLarge& ex) {
                    failed.push_back({{"eps", eps}, {"error", "EpsilonTooLarge"},
                                      {"detail", ex.what()}});
                }
            }
            const auto manifest = make_manifest(
                "competitor", {comp_shape_path}, comp_flags,
                {{"eps_list", eps_list}, {"samples", comp_samples}});
            nlohmann::json j;
            if (good.size() >= 4) {
                const elastica::SweepReport report = elastica::verify_energy_inequalities(
                    curve, good, comp_flags.p, comp_flags.lambda);
                j = elastica::competitor_to_json(report, manifest);
                if (!comp_svg.empty() && !report.rows.empty()) {
                    elastica::write_text_file(
                        comp_svg,
                        elastica::shape_svg({curve, report.rows.front().competitor_curve},
                                            {"original", "competitor"}));
                }
            } else {
                j["rows"] = nlohmann::json::array();
                j["manifest"] = manifest.to_json();
                j["error"] = "fewer than 4 feasible eps values; sweep fit skipped";
            }
            j["failed_rows"] = failed;
            emit(j.dump(2) + "\n", comp_flags.out);
            return kExitOk;
        }

        if (plot->parsed()) {
            if (plot_shapes.empty() && plot_trace.empty())
                throw CLI::ValidationError("plot needs --shape and/or --trace");
            if (!plot_trace.empty()) {
                const std::string csv = elastica::read_text_file(plot_trace);
                std::vector<elastica::TraceRow> rows;
                std::istringstream in(csv);
                std::string line;
                std::getline(in, line);  // header
                while (std::getline(in, line)) {
                    if (line.empty()) continue;
                    elastica::TraceRow r;
                    std::istringstream ls(line);
                    std::string cell;
                    std::getline(ls, cell, ',');
                    r.iter = std::stoi(cell);
                    std::getline(ls, cell, ',');
                    r.energy = std::stod(cell);
                    rows.push_back(r);
                }
                elastica::write_text_file(plot_svg, elastica::trace_svg(rows));
            } else {
                std::vector<elastica::BoundaryCurve> curves;
                std::vector<std::string> labels;
                for (const auto& path : plot_shapes) {
                    curves.push_back(
                        elastica::boundary_from_shape(elastica::read_shape(path), 1024));
                    labels.push_back(path);
                }
                elastica::write_text_file(plot_svg, elastica::shape_svg(curves, labels));
            }
            return kExitOk;
        }
    } catch (const CLI::ValidationError& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const elastica::DomainError& ex) {
        std::cerr << "domain error: " << ex.what() << "\n";
        return kExitDomain;
    } catch (const nlohmann::json::exception& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const std::exception& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
