#pragma once

#include <array>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/energy.hpp"

namespace elastica {

// Rigid motion + parameter shift mapping a probed pair (t1, t2 = t1 + eps)
// into the canonical pose: gamma(0) on {x >= 0, y = 0}, gamma(eps) on
// {y >= 0, x = 0}, gamma'(0) = (0, 1).
struct CanonicalFrame {
    Rot2 rotation;
    Vec2 translation;
    double t1_shift = 0.0;
};

std::pair<CanonicalFrame, BoundaryCurve> canonical_frame(const BoundaryCurve& curve,
                                                         double t1, double t2);

struct TangentTimes {
    double t_minus = 0.0;  // gamma'(t) = (-1, 0)
    double t_bot = 0.0;    // gamma'(t) = (0, -1)
    double t_plus = 0.0;   // gamma'(t) = (+1, 0)
};

// Crossing times of the canonical tangent directions (ccw turning).
TangentTimes find_tangent_times(const BoundaryCurve& canonical);

// Piecewise rotation field used to graft the boundary bump back smoothly on
// [t_minus, t_plus]: a unit-speed rotation from (0,1) to (-1,0) on the first
// branch, then a damped rotation whose second component carries a squared
// ramp so the field vanishes at t_plus.
Vec2 vector_field_v(double s, double t_minus, double t_bot, double t_plus);

struct VNormReport {
    double sup_d1 = 0.0, bound_d1 = 0.0;
    double sup_d2 = 0.0, bound_d2 = 0.0;
    bool satisfied = false;
};

// Samples |v'| and |v''| by finite differences away from t_bot and compares
// against the closed-form bounds 4(1/lambda + pi) and 16(1/lambda + pi)^2.
// Requires the branch gaps to clear the 1/(1/lambda + pi) floor.
VNormReport v_norm_check(double t_minus, double t_bot, double t_plus,
                         double lambda, double energy);

struct CompetitorResult {
    double eps = 0.0;
    double M = 0.0;  // |gamma'(t2) - gamma'(t1)| / eps
    double t_minus = 0.0, t_bot = 0.0, t_plus = 0.0;
    BoundaryCurve competitor_curve;
    double delta_avg = 0.0;       // avg term, competitor minus original
    double delta_elastica = 0.0;  // elastica, competitor minus original
    double f_bound_rhs = 0.0;
    double k_bound_rhs = 0.0;
    double hausdorff_gap = 0.0;
    // competitor minus original per construction piece:
    // [0] homothety, [1] translation, [2] grafted field, [3] x-stretch
    std::array<double, 4> piece_deltas{};
    double piece1_original = 0.0;  // original elastica over [0, eps]
    double energy_original = 0.0;
    double sample_spacing = 0.0;
};

// Four-piece deformation of a canonical curve: x2 homothety on [0, eps],
// vertical translation on [eps, t_minus], grafted vector field on
// [t_minus, t_plus], horizontal stretch on [t_plus, L].
CompetitorResult build_competitor(const BoundaryCurve& canonical, double eps,
                                  double p = 1.0, double lambda = 1.0);

struct SweepChecks {
    bool hausdorff_ok = false;
    bool f_ok = false;
    bool translation_ok = false;
    bool homothety_ok = false;
    bool stretch_ok = false;
    bool k_fit_ok = false;

    bool all_ok() const {
        return hausdorff_ok && f_ok && translation_ok && homothety_ok && stretch_ok && k_fit_ok;
    }
};

struct SweepReport {
    std::vector<CompetitorResult> rows;  // one per eps, descending
    double fitted_linear = 0.0;          // a in dK ~ a eps + b eps^{3/2}
    double fitted_three_half = 0.0;      // b
    double k_limit = 0.0;                // C2 - M^2/2
    SweepChecks checks;
};

// Builds the competitor over a decreasing eps list and verifies the energy
// comparison machinery: per-eps Hausdorff gap and avg-term inequality,
// exact translation invariance, the homothety curvature gap, the stretch
// piece decay, and the fitted linear coefficient of the elastica delta.
SweepReport verify_energy_inequalities(const BoundaryCurve& canonical,
                                       std::vector<double> eps_list,
                                       double p, double lambda);

}  // namespace elastica
