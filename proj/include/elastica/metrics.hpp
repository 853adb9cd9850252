#pragma once

#include <string>

#include "elastica/curve.hpp"
#include "elastica/shape.hpp"

namespace elastica {

struct ShapeMetricReport {
    double hausdorff = 0.0;
    double symmetric_difference_area = 0.0;
};

// Single inequality evaluation (also reused by the bounds module).
struct GeometricCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
    std::string citation;
};

// Fast point-membership table for a convex shape: boundary radius about an
// interior anchor, binned in angle.  Used for grid-counting areas.
struct PolarTable {
    Vec2 anchor;
    std::vector<double> radius;  // bins over [0, 2pi)
    double max_radius = 0.0;

    static PolarTable from_shape(const ConvexShape& shape, int bins = 1024, int support_grid = 512);
    bool contains_point(Vec2 p) const;
};

// Largest r with anchor + r*dir inside the shape, via the support function.
double ray_extent(const ConvexShape& shape, Vec2 anchor, Vec2 dir, int grid = 512);

Vec2 shape_centroid(const ConvexShape& shape);

// H^2(s1 triangle s2) by grid counting over a common bounding box.
double symmetric_difference_area(const ConvexShape& s1, const ConvexShape& s2, int grid_cells = 512);

ShapeMetricReport shape_metrics(const ConvexShape& s1, const ConvexShape& s2);

// Containment-verified perimeter comparison (inner inside outer required,
// checked as support dominance after common centering).
GeometricCheck check_perimeter_monotonicity(const ConvexShape& inner, const ConvexShape& outer);

// H^2(Omega_eps \ Omega) <= 2 delta H^1(boundary of Omega_eps) with
// delta = d_H of the boundaries.
GeometricCheck check_tubular_bound(const ConvexShape& s_eps, const ConvexShape& s);

}  // namespace elastica
