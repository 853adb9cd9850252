#include "elastica/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "elastica/errors.hpp"

namespace elastica {

namespace {
constexpr double kPi = std::numbers::pi;

double energy_of_vector(const std::vector<double>& x, double p, double lambda,
                        const QuadratureConfig& q) {
    const ConvexShape shape = unpack_coefficients(x);
    if (min_curvature_radius(shape) < conv_floor(shape) || shape.a0 <= 0.0)
        return std::numeric_limits<double>::infinity();
    return total_energy(shape, p, lambda, q).total;
}
}  // namespace

std::vector<double> pack_coefficients(const ConvexShape& shape, int k_max) {
    if (k_max < 1) throw OutOfRange("pack_coefficients: k_max must be >= 1");
    std::vector<double> x(static_cast<size_t>(2 * k_max + 1), 0.0);
    x[0] = shape.a0;
    const int kc = static_cast<int>(shape.cos_coeffs.size());
    const int ks = static_cast<int>(shape.sin_coeffs.size());
    for (int k = 1; k <= k_max; ++k) {
        if (k <= kc) x[static_cast<size_t>(k)] = shape.cos_coeffs[static_cast<size_t>(k - 1)];
        if (k <= ks) x[static_cast<size_t>(k_max + k)] = shape.sin_coeffs[static_cast<size_t>(k - 1)];
    }
    return x;
}

ConvexShape unpack_coefficients(const std::vector<double>& x) {
    if (x.size() < 3 || x.size() % 2 == 0)
        throw OutOfRange("unpack_coefficients: size must be odd and >= 3");
    const int k_max = static_cast<int>((x.size() - 1) / 2);
    ConvexShape shape;
    shape.a0 = x[0];
    shape.cos_coeffs.assign(x.begin() + 1, x.begin() + 1 + k_max);
    shape.sin_coeffs.assign(x.begin() + 1 + k_max, x.end());
    return shape;
}

std::vector<double> gradient(const ConvexShape& shape, double p, double lambda,
                             const QuadratureConfig& q) {
    const int k_max = std::max<int>(1, static_cast<int>(
        std::max(shape.cos_coeffs.size(), shape.sin_coeffs.size())));
    std::vector<double> x = pack_coefficients(shape, k_max);
    const double h = 1e-5 * shape.a0;
    std::vector<double> g(x.size(), 0.0);
    for (size_t i = 0; i < x.size(); ++i) {
        const double saved = x[i];
        x[i] = saved + h;
        const double e_plus = energy_of_vector(x, p, lambda, q);
        x[i] = saved - h;
        const double e_minus = energy_of_vector(x, p, lambda, q);
        x[i] = saved;
        if (!std::isfinite(e_plus) || !std::isfinite(e_minus))
            throw ConvexityViolation("gradient: finite-difference probe left the convex cone");
        g[i] = (e_plus - e_minus) / (2.0 * h);
    }
    return g;
}

ConvexShape project_convex(const std::vector<double>& raw_coefficients) {
    ConvexShape shape = unpack_coefficients(raw_coefficients);
    if (!(shape.a0 > 0.0))
        throw ProjectionFailed("project_convex: mean support radius must be positive");
    const double floor = conv_floor(shape);
    constexpr int kMaxDampings = 200;
    constexpr double kDamp = 0.9;
    for (int m = 0; m < kMaxDampings; ++m) {
        if (min_curvature_radius(shape) >= floor) {
            return shape.centered();
        }
        for (auto& c : shape.cos_coeffs) c *= kDamp;
        for (auto& c : shape.sin_coeffs) c *= kDamp;
    }
    throw ProjectionFailed("project_convex: damping did not restore convexity");
}

namespace {

TraceRow make_row(int iter, const ConvexShape& shape, double p, double lambda,
                  const QuadratureConfig& q, double grad_norm) {
    const EnergyBreakdown e = total_energy(shape, p, lambda, q);
    TraceRow row;
    row.iter = iter;
    row.energy = e.total;
    row.avg_term = e.avg_distance_term;
    row.elastica_term = e.elastica_term;
    row.grad_norm = grad_norm;
    row.min_curvature_radius = min_curvature_radius(shape);
    return row;
}

double shape_diameter(const ConvexShape& shape) {
    return diameter(boundary_from_shape(shape, 512));
}

OptimizationTrace run_projected_gradient(const OptimizerConfig& cfg, ConvexShape shape) {
    OptimizationTrace trace;
    const double diam_floor = 4.0 * kPi * cfg.lambda / (2.0 * (1.0 + kPi * cfg.lambda));
    double energy = total_energy(shape, cfg.p, cfg.lambda, cfg.quadrature).total;
    double step = cfg.step_init;
    constexpr double kArmijoC = 1e-4;
    constexpr double kShrink = 0.5;
    constexpr int kMaxBacktracks = 30;

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        std::vector<double> g;
        try {
            g = gradient(shape, cfg.p, cfg.lambda, cfg.quadrature);
        } catch (const ConvexityViolation&) {
            // Pull the iterate strictly inside the cone and retry once.
            std::vector<double> x = pack_coefficients(
                shape, static_cast<int>(shape.cos_coeffs.size()));
            for (size_t i = 1; i < x.size(); ++i) x[i] *= 0.9;
            shape = project_convex(x);
            g = gradient(shape, cfg.p, cfg.lambda, cfg.quadrature);
        }
        double g_norm = 0.0;
        for (double v : g) g_norm += v * v;
        g_norm = std::sqrt(g_norm);
        trace.rows.push_back(make_row(iter, shape, cfg.p, cfg.lambda, cfg.quadrature, g_norm));
        trace.rows.back().energy = energy;

        if (g_norm <= cfg.tol_grad) {
            trace.converged = true;
            trace.stop_reason = "gradient norm below tolerance";
            break;
        }

        const int k_max = static_cast<int>(g.size() - 1) / 2;
        const std::vector<double> x0 = pack_coefficients(shape, k_max);
        bool accepted = false;
        double trial_step = step;
        for (int bt = 0; bt < kMaxBacktracks; ++bt) {
            std::vector<double> x = x0;
            for (size_t i = 0; i < x.size(); ++i) x[i] -= trial_step * g[i];
            ConvexShape candidate;
            try {
                candidate = project_convex(x);
            } catch (const ProjectionFailed&) {
                trial_step *= kShrink;
                continue;
            }
            if (shape_diameter(candidate) < diam_floor) {
                trial_step *= kShrink;
                continue;
            }
            const double cand_energy =
                total_energy(candidate, cfg.p, cfg.lambda, cfg.quadrature).total;
            if (cand_energy <= energy - kArmijoC * trial_step * g_norm * g_norm) {
                const double drop = energy - cand_energy;
                shape = candidate;
                energy = cand_energy;
                step = std::min(trial_step * 2.0, cfg.step_init);
                accepted = true;
                if (drop <= cfg.tol_energy) {
                    trace.converged = true;
                    trace.stop_reason = "energy decrease below tolerance";
                }
                break;
            }
            trial_step *= kShrink;
        }
        if (!accepted) {
            trace.converged = true;
            trace.stop_reason = "line search stalled at a stationary point";
            break;
        }
        if (trace.converged) break;
    }
    if (!trace.converged && trace.stop_reason.empty())
        trace.stop_reason = "iteration limit reached";
    trace.final_shape = shape;
    const double last_grad = trace.rows.empty() ? 0.0 : trace.rows.back().grad_norm;
    trace.rows.push_back(make_row(static_cast<int>(trace.rows.size()), shape, cfg.p,
                                  cfg.lambda, cfg.quadrature, last_grad));
    trace.rows.back().energy = energy;
    return trace;
}

OptimizationTrace run_simplex_search(const OptimizerConfig& cfg, const ConvexShape& initial) {
    OptimizationTrace trace;
    const int k_max = std::max<int>(1, static_cast<int>(initial.cos_coeffs.size()));
    const int dim = 2 * k_max + 1;
    const double diam_floor = 4.0 * kPi * cfg.lambda / (2.0 * (1.0 + kPi * cfg.lambda));

    auto feasible_energy = [&](const std::vector<double>& x) -> double {
        ConvexShape s;
        try {
            s = project_convex(x);
        } catch (const ProjectionFailed&) {
            return std::numeric_limits<double>::infinity();
        }
        if (shape_diameter(s) < diam_floor) return std::numeric_limits<double>::infinity();
        return total_energy(s, cfg.p, cfg.lambda, cfg.quadrature).total;
    };

    std::vector<std::vector<double>> simplex;
    std::vector<double> values;
    const std::vector<double> x0 = pack_coefficients(initial, k_max);
    simplex.push_back(x0);
    values.push_back(feasible_energy(x0));
    for (int i = 0; i < dim; ++i) {
        std::vector<double> x = x0;
        x[static_cast<size_t>(i)] += (i == 0) ? 0.05 * initial.a0 : 0.02 * initial.a0;
        simplex.push_back(x);
        values.push_back(feasible_energy(x));
    }

    constexpr double kAlpha = 1.0, kGamma = 2.0, kRho = 0.5, kSigma = 0.5;
    auto order = [&] {
        std::vector<size_t> idx(simplex.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> v2;
        for (size_t i : idx) {
            s2.push_back(simplex[i]);
            v2.push_back(values[i]);
        }
        simplex = std::move(s2);
        values = std::move(v2);
    };

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        order();
        {
            const ConvexShape best = project_convex(simplex[0]);
            TraceRow row = make_row(iter, best, cfg.p, cfg.lambda, cfg.quadrature, 0.0);
            row.energy = values[0];
            trace.rows.push_back(row);
        }
        if (values.back() - values.front() <= cfg.tol_energy) {
            trace.converged = true;
            trace.stop_reason = "simplex spread below tolerance";
            break;
        }
        std::vector<double> centroid(static_cast<size_t>(dim), 0.0);
        for (size_t i = 0; i + 1 < simplex.size(); ++i)
            for (int j = 0; j < dim; ++j)
                centroid[static_cast<size_t>(j)] += simplex[i][static_cast<size_t>(j)] / dim;
        auto affine = [&](double t) {
            std::vector<double> x(static_cast<size_t>(dim));
            for (int j = 0; j < dim; ++j)
                x[static_cast<size_t>(j)] = centroid[static_cast<size_t>(j)] +
                    t * (centroid[static_cast<size_t>(j)] - simplex.back()[static_cast<size_t>(j)]);
            return x;
        };
        const std::vector<double> xr = affine(kAlpha);
        const double fr = feasible_energy(xr);
        if (fr < values.front()) {
            const std::vector<double> xe = affine(kGamma);
            const double fe = feasible_energy(xe);
            if (fe < fr) {
                simplex.back() = xe;
                values.back() = fe;
            } else {
                simplex.back() = xr;
                values.back() = fr;
            }
        } else if (fr < values[values.size() - 2]) {
            simplex.back() = xr;
            values.back() = fr;
        } else {
            const std::vector<double> xc = affine(-kRho);
            const double fc = feasible_energy(xc);
            if (fc < values.back()) {
                simplex.back() = xc;
                values.back() = fc;
            } else {
                for (size_t i = 1; i < simplex.size(); ++i) {
                    for (int j = 0; j < dim; ++j)
                        simplex[i][static_cast<size_t>(j)] =
                            simplex[0][static_cast<size_t>(j)] +
                            kSigma * (simplex[i][static_cast<size_t>(j)] -
                                      simplex[0][static_cast<size_t>(j)]);
                    values[i] = feasible_energy(simplex[i]);
                }
            }
        }
    }
    order();
    if (!trace.converged) trace.stop_reason = "iteration limit reached";
    trace.final_shape = project_convex(simplex[0]);
    TraceRow row = make_row(static_cast<int>(trace.rows.size()), trace.final_shape, cfg.p,
                            cfg.lambda, cfg.quadrature, 0.0);
    row.energy = values[0];
    trace.rows.push_back(row);
    return trace;
}

}  // namespace

OptimizationTrace minimize(const OptimizerConfig& config, const ConvexShape& initial) {
    validate_shape(initial);
    const int k_max = std::max(config.k_max, 1);
    ConvexShape shape = initial;
    shape.cos_coeffs.resize(static_cast<size_t>(k_max), 0.0);
    shape.sin_coeffs.resize(static_cast<size_t>(k_max), 0.0);
    shape = shape.centered();

    if (config.method == OptimizerConfig::Method::SimplexSearch)
        return run_simplex_search(config, shape);
    return run_projected_gradient(config, shape);
}

}  // namespace elastica
