#pragma once

#include <random>
#include <vector>

#include "elastica/vec2.hpp"

namespace elastica {

// Compact convex planar body represented by a truncated Fourier expansion of
// its support function
//
//   h(theta) = a0 + sum_k  cos_coeffs[k-1] * cos(k theta)
//                 + sum_k  sin_coeffs[k-1] * sin(k theta).
//
// The body is { x : <x, u(theta)> <= h(theta) for all theta }.  Strict
// convexity is the pointwise condition h + h'' >= delta_conv > 0, where
// h + h'' is the radius of curvature of the boundary.
struct ConvexShape {
    double a0 = 1.0;
    std::vector<double> cos_coeffs;  // k = 1, 2, ...
    std::vector<double> sin_coeffs;  // same length as cos_coeffs

    double support(double theta) const;       // h(theta)
    double support_d1(double theta) const;    // h'(theta)
    double support_d2(double theta) const;    // h''(theta)
    // h, h', h'' in one pass (single sin/cos, angle-addition recurrence).
    void support_jet(double theta, double& h, double& d1, double& d2) const;
    double curvature_radius(double theta) const { return support(theta) + support_d2(theta); }

    // Boundary point with outward normal u(theta):
    //   gamma(theta) = h u(theta) + h' u_perp(theta).
    Vec2 boundary_point(double theta) const;

    int order() const { return static_cast<int>(cos_coeffs.size()); }

    ConvexShape scaled(double s) const;
    ConvexShape rotated(double angle) const;
    // Moves the Steiner point (a1, b1) to the origin.
    ConvexShape centered() const;
    Vec2 steiner_point() const;
};

// Grid density used for convexity / containment / distance scans.
inline constexpr int kDefaultGrid = 4096;

double conv_floor(const ConvexShape& shape);  // delta_conv = 1e-8 * a0

// Minimum of h + h'' (resp. h) over a uniform theta-grid.
double min_curvature_radius(const ConvexShape& shape, int grid = kDefaultGrid);
double min_support(const ConvexShape& shape, int grid = kDefaultGrid);

// Throws ConvexityViolation / DegenerateShape when invariants fail.
void validate_shape(const ConvexShape& shape, int grid = kDefaultGrid);
bool is_valid_shape(const ConvexShape& shape, int grid = kDefaultGrid);

// True when <x, u(theta)> <= h(theta) on the grid (with a small slack).
bool contains(const ConvexShape& shape, Vec2 x, int grid = kDefaultGrid);

// dist(x, boundary) for an interior point, via min_theta (h - <x,u>) with
// golden-section refinement around the grid minimum.  Throws PointOutside.
double distance_to_boundary(const ConvexShape& shape, Vec2 x, int grid = kDefaultGrid);

ConvexShape make_disk(double radius);

// Random admissible shape: unit-scale disk plus decaying harmonics k >= 2,
// damped until strictly convex.  Steiner-centered.
ConvexShape random_shape(std::mt19937& rng, int k_max = 6, double amplitude = 0.12);

}  // namespace elastica
