#pragma once

#include <string>
#include <vector>

#include "elastica/energy.hpp"

namespace elastica {

struct OptimizerConfig {
    double p = 1.0;
    double lambda = 1.0;
    int k_max = 16;  // Fourier truncation of the iterates
    int max_iters = 200;
    double step_init = 0.1;
    double tol_grad = 1e-3;
    double tol_energy = 1e-7;
    enum class Method { ProjectedGradient, SimplexSearch };
    Method method = Method::ProjectedGradient;
    std::uint32_t seed = 42;
    QuadratureConfig quadrature{128, 32, 1'000'000, 42};
};

struct TraceRow {
    int iter = 0;
    double energy = 0.0;
    double avg_term = 0.0;
    double elastica_term = 0.0;
    double grad_norm = 0.0;
    double min_curvature_radius = 0.0;
};

struct OptimizationTrace {
    std::vector<TraceRow> rows;
    ConvexShape final_shape;
    bool converged = false;
    std::string stop_reason;
};

// Coefficient layout used by the optimizer: [a0, a_1..a_K, b_1..b_K].
std::vector<double> pack_coefficients(const ConvexShape& shape, int k_max);
ConvexShape unpack_coefficients(const std::vector<double>& x);

// Central finite differences of total_energy per coefficient.
std::vector<double> gradient(const ConvexShape& shape, double p, double lambda,
                             const QuadratureConfig& q);

// Damps harmonics k >= 2 geometrically until h + h'' clears the convexity
// floor; idempotent on feasible input.  Centers the result.
ConvexShape project_convex(const std::vector<double>& raw_coefficients);

OptimizationTrace minimize(const OptimizerConfig& config, const ConvexShape& initial);

}  // namespace elastica
