#include "elastica/bounds.hpp"

#include <cmath>
#include <numbers>

namespace elastica {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Bound comparisons mix exact constants with quadrature values; allow a
// relative slack of 1e-6 plus a quadrature-error budget.
constexpr double kSlack = 1e-6 + 1e-3;

GeometricCheck make_check(std::string name, double lhs, double rhs, bool at_least,
                          std::string citation) {
    GeometricCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    const double tol = kSlack * std::max(std::abs(lhs), std::abs(rhs));
    c.satisfied = at_least ? (lhs >= rhs - tol) : (lhs <= rhs + tol);
    c.citation = std::move(citation);
    return c;
}
}  // namespace

double constant_C1(double p, double lambda) {
    return (p + 1.0) * (p + 2.0) * std::pow(24.0 / lambda, p + 1.0) *
           std::pow(2.0 * (1.0 + kPi * lambda), p + 2.0);
}

double constant_C2(double p, double lambda) {
    const double c1 = constant_C1(p, lambda);
    const double s = 1.0 / lambda + kPi;
    return 32.0 * s * s + 32.0 * std::sqrt(2.0 * c1 * kPi) * std::pow(s, 2.5);
}

double constant_C(double p, double lambda) {
    const double c1 = constant_C1(p, lambda);
    const double c2 = constant_C2(p, lambda);
    return std::sqrt(p / lambda * std::pow(c1 + 1.0, p - 1.0) * kPi * c1 * c1 + 2.0 * c2);
}

BoundsReport verify_bounds(const ConvexShape& shape, double p, double lambda,
                           const QuadratureConfig& q, const std::string& shape_id) {
    BoundsReport report;
    report.shape_id = shape_id;
    report.p = p;
    report.lambda = lambda;

    const EnergyBreakdown e = total_energy(shape, p, lambda, q);
    report.energy = e.total;
    const BoundaryCurve curve = boundary_from_shape(shape, 2048);
    const double diam = diameter(curve);
    const double ar = area(curve);
    const double perim = perimeter(curve);

    report.entries.push_back(make_check(
        "diam-low", diam, 4.0 * kPi * lambda / e.total, true,
        "diameter bounded below by 4 pi lambda / E"));
    report.entries.push_back(make_check(
        "a-low", ar, kPi * lambda * lambda / (2.0 * e.total * e.total), true,
        "area bounded below by pi lambda^2 / (2 E^2)"));
    report.entries.push_back(make_check(
        "diam-high", diam,
        (p + 1.0) * (p + 2.0) * std::pow(24.0 / lambda, p + 1.0) * std::pow(e.total, p + 2.0),
        false, "diameter bounded above by (p+1)(p+2)(24/lambda)^{p+1} E^{p+2}"));
    report.entries.push_back(make_check(
        "perimeter-diameter", perim, kPi * diam, false,
        "perimeter of a convex body at most pi times its diameter"));
    {
        GeometricCheck c;
        c.name = "total-turning";
        c.lhs = total_turning(curve);
        c.rhs = kTwoPi;
        c.satisfied = std::abs(c.lhs - c.rhs) <= 1e-3;
        c.citation = "closed convex curve with winding number one";
        report.entries.push_back(c);
    }

    // Minimizing-sequence corollaries apply only in the low-energy regime.
    const double energy_ceiling = 2.0 * (1.0 + kPi * lambda);
    if (e.total <= energy_ceiling) {
        report.entries.push_back(make_check(
            "diam-l", diam, 2.0 * kPi * lambda / (1.0 + kPi * lambda), true,
            "minimizing-sequence diameter floor"));
        report.entries.push_back(make_check(
            "a-l", ar, kPi * lambda * lambda / (8.0 * std::pow(1.0 + kPi * lambda, 2.0)), true,
            "minimizing-sequence area floor"));
        report.entries.push_back(make_check(
            "diam-h", diam, constant_C1(p, lambda), false,
            "minimizing-sequence diameter ceiling C1"));
    } else {
        report.skipped.push_back("diam-l/a-l/diam-h: energy exceeds 2(1 + pi lambda), corollaries not applicable");
    }
    return report;
}

double lipschitz_tangent_estimate(const BoundaryCurve& curve) {
    const int n = curve.sample_count();
    const double step = curve.total_length / n;
    double sup = 0.0;
    for (int i = 0; i < n; ++i)
        sup = std::max(sup, (curve.tangents[i + 1] - curve.tangents[i]).norm() / step);
    return sup;
}

}  // namespace elastica
