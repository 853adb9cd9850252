#pragma once

#include <string>
#include <vector>

#include "elastica/energy.hpp"
#include "elastica/metrics.hpp"

namespace elastica {

// Explicit constants of the diameter / regularity estimates.
double constant_C1(double p, double lambda);
double constant_C2(double p, double lambda);
double constant_C(double p, double lambda);

struct BoundsReport {
    std::vector<GeometricCheck> entries;
    std::vector<std::string> skipped;  // name: reason
    std::string shape_id;
    double p = 1.0;
    double lambda = 1.0;
    double energy = 0.0;

    bool all_satisfied() const {
        for (const auto& e : entries)
            if (!e.satisfied) return false;
        return true;
    }
};

// Evaluates every inequality that holds for all admissible shapes:
//   diam >= 4 pi lambda / E                  (diam-low)
//   area >= pi lambda^2 / (2 E^2)            (a-low)
//   diam <= (p+1)(p+2)(24/lambda)^{p+1} E^{p+2}   (diam-high)
//   perimeter <= pi diam
//   total turning = 2 pi
// plus, when E <= 2(1 + pi lambda), the minimizing-sequence corollaries
// diam-l / a-l / diam-h (otherwise skipped with a reason).
BoundsReport verify_bounds(const ConvexShape& shape, double p, double lambda,
                           const QuadratureConfig& q = {}, const std::string& shape_id = "");

// Empirical Lipschitz constant of the tangent field (max |kappa| for a
// smooth curve, up to discretization).
double lipschitz_tangent_estimate(const BoundaryCurve& curve);

}  // namespace elastica
