#pragma once

#include <cstdint>
#include <span>

#include "elastica/curve.hpp"
#include "elastica/shape.hpp"

namespace elastica {

struct QuadratureConfig {
    int n_theta = 256;        // polar rays
    int n_radial = 64;        // Gauss-Legendre nodes per ray
    long mc_samples = 1'000'000;
    std::uint32_t seed = 42;
};

// Two-term energy: integral of dist^p over the body plus lambda times the
// integrated squared curvature of its boundary.
struct EnergyBreakdown {
    double p = 1.0;
    double lambda = 1.0;
    double avg_distance_term = 0.0;
    double elastica_term = 0.0;
    double total = 0.0;
};

// Integrated squared curvature: in support coordinates ds = (h + h'') dtheta
// and kappa = 1/(h + h''), so the integral is int dtheta / (h + h'').
double elastica_term(const ConvexShape& shape, int grid = kDefaultGrid);

// Polar quadrature of int dist^p over the body, anchored at the centroid.
double average_distance_term(const ConvexShape& shape, double p, const QuadratureConfig& q = {});

// Rejection-sampling oracle for the same integral (deterministic per seed).
double average_distance_term_mc(const ConvexShape& shape, double p, const QuadratureConfig& q = {});

EnergyBreakdown total_energy(const ConvexShape& shape, double p, double lambda,
                             const QuadratureConfig& q = {});

// Closed-form disk oracle: 2 pi R^{p+2} / ((p+1)(p+2)) + 2 pi lambda / R.
double disk_energy(double radius, double p, double lambda);

// Unique minimizer of disk_energy over R: (lambda (p+1))^{1/(p+3)}.
double optimal_disk_radius(double p, double lambda);

// Average-distance integral of the region bounded by a convex ccw polygon
// (interior distance = min over edge supporting lines).  Used for competitor
// domains, which are not support-function shapes.
double average_distance_term_polygon(std::span<const Vec2> vertices, double p,
                                     int n_theta = 128, int n_radial = 32);

}  // namespace elastica
