#pragma once

#include <span>
#include <vector>

#include "elastica/shape.hpp"
#include "elastica/vec2.hpp"

namespace elastica {

// Closed convex boundary curve, sampled uniformly in arc length, oriented
// counterclockwise.  points.front() == points.back(); tangents are unit
// vectors; curvature_samples are the signed curvatures (positive by
// convexity) at the matching sample points.
struct BoundaryCurve {
    std::vector<Vec2> points;                 // n + 1, closed
    std::vector<double> cumulative_arclength; // n + 1, nondecreasing, [0, L]
    std::vector<Vec2> tangents;               // n + 1, unit
    std::vector<double> curvature_samples;    // n + 1
    double total_length = 0.0;                // H^1 of the boundary

    int sample_count() const { return static_cast<int>(points.size()) - 1; }

    // Point / unit tangent at arc length t, linear interpolation between
    // samples (t taken mod total_length).
    Vec2 point_at(double t) const;
    Vec2 tangent_at(double t) const;

    BoundaryCurve transformed(Rot2 rot, Vec2 translation) const;
    // Re-bases the parameterization so arc length t0 becomes t = 0.
    BoundaryCurve rebased(double t0) const;
};

void validate_curve(const BoundaryCurve& curve);

// Support-function boundary map: gamma(theta) = h u + h' u_perp, resampled
// to uniform arc-length spacing; curvature 1/(h + h'') at the matching theta.
BoundaryCurve boundary_from_shape(const ConvexShape& shape, int n = 1024);

// Resamples an arbitrary closed convex polyline (ccw) to a uniform
// arc-length BoundaryCurve with discrete tangents/curvatures.
BoundaryCurve curve_from_polyline(std::span<const Vec2> polyline, int n);

double diameter(const BoundaryCurve& curve);   // rotating calipers
double area(const BoundaryCurve& curve);       // shoelace
double perimeter(const BoundaryCurve& curve);  // chord-length sum
double total_turning(const BoundaryCurve& curve);
double hausdorff_distance(const BoundaryCurve& c1, const BoundaryCurve& c2);

// Integrated squared curvature of a polyline piece from its edge vectors:
// sum over interior junctions of (turning angle)^2 / (mean adjacent edge
// length).  The piece is treated as open; endpoints carry no turning.
double elastica_of_edges(std::span<const Vec2> edges);

// Same for a closed polyline given its vertices (first != last expected).
double elastica_of_closed_polyline(std::span<const Vec2> vertices);

}  // namespace elastica
