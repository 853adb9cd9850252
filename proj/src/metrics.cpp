#include "elastica/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "elastica/errors.hpp"

namespace elastica {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double ray_extent(const ConvexShape& shape, Vec2 anchor, Vec2 dir, int grid) {
    // r(dir) = min over supporting lines of (h - <anchor,u>) / <dir,u>.
    double best = std::numeric_limits<double>::infinity();
    int best_i = -1;
    for (int i = 0; i < grid; ++i) {
        const double theta = kTwoPi * i / grid;
        const Vec2 u = unit_dir(theta);
        const double denom = dot(dir, u);
        if (denom <= 1e-12) continue;
        const double r = (shape.support(theta) - dot(anchor, u)) / denom;
        if (r < best) { best = r; best_i = i; }
    }
    if (best_i < 0 || !(best > 0.0))
        throw PointOutside("ray anchor outside the shape");
    // Parabolic-free local refinement: ternary search over the bracket.
    const double step = kTwoPi / grid;
    double lo = (best_i - 1) * step, hi = (best_i + 1) * step;
    const auto f = [&](double theta) {
        const Vec2 u = unit_dir(theta);
        const double denom = dot(dir, u);
        return denom > 1e-12 ? (shape.support(theta) - dot(anchor, u)) / denom
                             : std::numeric_limits<double>::infinity();
    };
    for (int it = 0; it < 60; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (f(m1) < f(m2)) hi = m2; else lo = m1;
    }
    return std::min(best, f(0.5 * (lo + hi)));
}

Vec2 shape_centroid(const ConvexShape& shape) {
    const BoundaryCurve c = boundary_from_shape(shape, 512);
    double a = 0.0;
    Vec2 acc{0.0, 0.0};
    for (int i = 0; i < c.sample_count(); ++i) {
        const double w = cross(c.points[i], c.points[i + 1]);
        a += w;
        acc += w * (c.points[i] + c.points[i + 1]);
    }
    return (1.0 / (3.0 * a)) * acc;
}

PolarTable PolarTable::from_shape(const ConvexShape& shape, int bins, int support_grid) {
    PolarTable t;
    t.anchor = shape_centroid(shape);
    t.radius.resize(bins);
    for (int b = 0; b < bins; ++b) {
        const double phi = kTwoPi * b / bins;
        t.radius[b] = ray_extent(shape, t.anchor, unit_dir(phi), support_grid);
        t.max_radius = std::max(t.max_radius, t.radius[b]);
    }
    return t;
}

bool PolarTable::contains_point(Vec2 p) const {
    const Vec2 d = p - anchor;
    const double r = d.norm();
    if (r == 0.0) return true;
    const int bins = static_cast<int>(radius.size());
    double phi = std::atan2(d.y, d.x);
    if (phi < 0.0) phi += kTwoPi;
    const double pos = phi / kTwoPi * bins;
    const int b = static_cast<int>(pos) % bins;
    const double w = pos - std::floor(pos);
    const double rb = radius[b] + w * (radius[(b + 1) % bins] - radius[b]);
    return r <= rb;
}

double symmetric_difference_area(const ConvexShape& s1, const ConvexShape& s2, int grid_cells) {
    const PolarTable t1 = PolarTable::from_shape(s1);
    const PolarTable t2 = PolarTable::from_shape(s2);

    const double r1 = t1.max_radius, r2 = t2.max_radius;
    const double xmin = std::min(t1.anchor.x - r1, t2.anchor.x - r2);
    const double xmax = std::max(t1.anchor.x + r1, t2.anchor.x + r2);
    const double ymin = std::min(t1.anchor.y - r1, t2.anchor.y - r2);
    const double ymax = std::max(t1.anchor.y + r1, t2.anchor.y + r2);

    const double hx = (xmax - xmin) / grid_cells;
    const double hy = (ymax - ymin) / grid_cells;
    long long count = 0;
    for (int i = 0; i < grid_cells; ++i) {
        const double x = xmin + (i + 0.5) * hx;
        for (int j = 0; j < grid_cells; ++j) {
            const Vec2 p{x, ymin + (j + 0.5) * hy};
            if (t1.contains_point(p) != t2.contains_point(p)) ++count;
        }
    }
    return static_cast<double>(count) * hx * hy;
}

ShapeMetricReport shape_metrics(const ConvexShape& s1, const ConvexShape& s2) {
    ShapeMetricReport r;
    r.symmetric_difference_area = symmetric_difference_area(s1, s2);
    r.hausdorff = hausdorff_distance(boundary_from_shape(s1, 1024), boundary_from_shape(s2, 1024));
    return r;
}

GeometricCheck check_perimeter_monotonicity(const ConvexShape& inner, const ConvexShape& outer) {
    const ConvexShape in = inner.centered();
    const ConvexShape out = outer.centered();
    const double slack = 1e-9 * std::max(1.0, out.a0);
    for (int i = 0; i < kDefaultGrid; ++i) {
        const double theta = kTwoPi * i / kDefaultGrid;
        if (in.support(theta) > out.support(theta) + slack)
            throw ContainmentUnverified("inner shape not dominated by outer support function");
    }
    GeometricCheck c;
    c.name = "perimeter-monotonicity";
    c.lhs = perimeter(boundary_from_shape(in, 2048));
    c.rhs = perimeter(boundary_from_shape(out, 2048));
    c.satisfied = c.lhs <= c.rhs + 1e-6 * std::max(1.0, c.rhs);
    c.citation = "perimeters of nested convex bodies are ordered";
    return c;
}

GeometricCheck check_tubular_bound(const ConvexShape& s_eps, const ConvexShape& s) {
    const BoundaryCurve c_eps = boundary_from_shape(s_eps, 1024);
    const BoundaryCurve c = boundary_from_shape(s, 1024);
    const double delta = hausdorff_distance(c_eps, c);

    // lhs: area of Omega_eps \ Omega by grid counting.
    const PolarTable t_eps = PolarTable::from_shape(s_eps);
    const PolarTable t = PolarTable::from_shape(s);
    const double r1 = t_eps.max_radius, r2 = t.max_radius;
    const double xmin = std::min(t_eps.anchor.x - r1, t.anchor.x - r2);
    const double xmax = std::max(t_eps.anchor.x + r1, t.anchor.x + r2);
    const double ymin = std::min(t_eps.anchor.y - r1, t.anchor.y - r2);
    const double ymax = std::max(t_eps.anchor.y + r1, t.anchor.y + r2);
    const int n = 512;
    const double hx = (xmax - xmin) / n, hy = (ymax - ymin) / n;
    long long count = 0;
    for (int i = 0; i < n; ++i) {
        const double x = xmin + (i + 0.5) * hx;
        for (int j = 0; j < n; ++j) {
            const Vec2 p{x, ymin + (j + 0.5) * hy};
            if (t_eps.contains_point(p) && !t.contains_point(p)) ++count;
        }
    }
    GeometricCheck out;
    out.name = "tubular-neighborhood";
    out.lhs = static_cast<double>(count) * hx * hy;
    out.rhs = 2.0 * delta * perimeter(c_eps);
    out.satisfied = out.lhs <= out.rhs * 1.01 + 1e-9;
    out.citation = "difference area bounded by boundary tube of width d_H";
    return out;
}

}  // namespace elastica
