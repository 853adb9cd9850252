#include "elastica/shape.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "elastica/errors.hpp"

namespace elastica {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Golden-section minimization of f over [a, b].
template <typename F>
double golden_min(F&& f, double a, double b, double tol) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return std::min(fc, fd);
}
}  // namespace

void ConvexShape::support_jet(double theta, double& h, double& d1, double& d2) const {
    h = a0;
    d1 = 0.0;
    d2 = 0.0;
    const double c1 = std::cos(theta), s1 = std::sin(theta);
    double ck = 1.0, sk = 0.0;  // cos(k theta), sin(k theta) via recurrence
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
        const double c = ck * c1 - sk * s1;
        const double s = sk * c1 + ck * s1;
        ck = c;
        sk = s;
        const double kk = static_cast<double>(k + 1);
        const double even = cos_coeffs[k] * c + sin_coeffs[k] * s;
        h += even;
        d1 += kk * (-cos_coeffs[k] * s + sin_coeffs[k] * c);
        d2 -= kk * kk * even;
    }
}

double ConvexShape::support(double theta) const {
    double h, d1, d2;
    support_jet(theta, h, d1, d2);
    return h;
}

double ConvexShape::support_d1(double theta) const {
    double h, d1, d2;
    support_jet(theta, h, d1, d2);
    return d1;
}

double ConvexShape::support_d2(double theta) const {
    double h, d1, d2;
    support_jet(theta, h, d1, d2);
    return d2;
}

Vec2 ConvexShape::boundary_point(double theta) const {
    const Vec2 u = unit_dir(theta);
    return support(theta) * u + support_d1(theta) * perp(u);
}

ConvexShape ConvexShape::scaled(double s) const {
    ConvexShape out = *this;
    out.a0 *= s;
    for (auto& c : out.cos_coeffs) c *= s;
    for (auto& c : out.sin_coeffs) c *= s;
    return out;
}

ConvexShape ConvexShape::rotated(double angle) const {
    // h_rot(theta) = h(theta - angle).
    ConvexShape out = *this;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
        const double kk = static_cast<double>(k + 1);
        const double c = std::cos(kk * angle), s = std::sin(kk * angle);
        out.cos_coeffs[k] = cos_coeffs[k] * c - sin_coeffs[k] * s;
        out.sin_coeffs[k] = cos_coeffs[k] * s + sin_coeffs[k] * c;
    }
    return out;
}

Vec2 ConvexShape::steiner_point() const {
    if (cos_coeffs.empty()) return {0.0, 0.0};
    return {cos_coeffs[0], sin_coeffs[0]};
}

ConvexShape ConvexShape::centered() const {
    ConvexShape out = *this;
    if (!out.cos_coeffs.empty()) {
        out.cos_coeffs[0] = 0.0;
        out.sin_coeffs[0] = 0.0;
    }
    return out;
}

double conv_floor(const ConvexShape& shape) { return 1e-8 * shape.a0; }

double min_curvature_radius(const ConvexShape& shape, int grid) {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i)
        m = std::min(m, shape.curvature_radius(kTwoPi * i / grid));
    return m;
}

double min_support(const ConvexShape& shape, int grid) {
    const ConvexShape c = shape.centered();
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i)
        m = std::min(m, c.support(kTwoPi * i / grid));
    return m;
}

void validate_shape(const ConvexShape& shape, int grid) {
    if (shape.cos_coeffs.size() != shape.sin_coeffs.size())
        throw DegenerateShape("coefficient lists have unequal length");
    if (!(shape.a0 > 0.0))
        throw DegenerateShape("mean support value must be positive");
    if (min_support(shape, grid) <= 0.0)
        throw DegenerateShape("support function not positive after centering");
    if (min_curvature_radius(shape, grid) < conv_floor(shape))
        throw ConvexityViolation("curvature radius h + h'' below convexity floor");
}

bool is_valid_shape(const ConvexShape& shape, int grid) {
    try {
        validate_shape(shape, grid);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

bool contains(const ConvexShape& shape, Vec2 x, int grid) {
    const double slack = 1e-12 * std::max(1.0, shape.a0);
    for (int i = 0; i < grid; ++i) {
        const double theta = kTwoPi * i / grid;
        if (dot(x, unit_dir(theta)) > shape.support(theta) + slack) return false;
    }
    return true;
}

double distance_to_boundary(const ConvexShape& shape, Vec2 x, int grid) {
    // g(theta) = h(theta) - <x, u(theta)> is the distance to the supporting
    // line with normal u(theta); for x inside a convex body the distance to
    // the boundary is min_theta g(theta).
    const auto g = [&](double theta) { return shape.support(theta) - dot(x, unit_dir(theta)); };

    int best = 0;
    double gmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        const double v = g(kTwoPi * i / grid);
        if (v < gmin) { gmin = v; best = i; }
    }
    if (gmin < -1e-12 * std::max(1.0, shape.a0))
        throw PointOutside("point lies outside the shape");

    const double step = kTwoPi / grid;
    const double lo = (best - 1) * step, hi = (best + 1) * step;
    const double refined = golden_min(g, lo, hi, 1e-10 * std::max(1.0, 2.0 * shape.a0));
    return std::max(0.0, std::min(gmin, refined));
}

ConvexShape make_disk(double radius) {
    if (!(radius > 0.0)) throw NonpositiveRadius("disk radius must be positive");
    return ConvexShape{radius, {}, {}};
}

ConvexShape random_shape(std::mt19937& rng, int k_max, double amplitude) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::uniform_real_distribution<double> base(0.8, 1.4);
    ConvexShape s;
    s.a0 = base(rng);
    s.cos_coeffs.assign(k_max, 0.0);
    s.sin_coeffs.assign(k_max, 0.0);
    for (int k = 2; k <= k_max; ++k) {
        const double decay = amplitude * s.a0 / (static_cast<double>(k) * k * k);
        s.cos_coeffs[k - 1] = decay * unif(rng);
        s.sin_coeffs[k - 1] = decay * unif(rng);
    }
    // Damp harmonics until strictly convex (generous margin over the floor).
    for (int iter = 0; iter < 64 && min_curvature_radius(s) < 0.05 * s.a0; ++iter) {
        for (int k = 2; k <= k_max; ++k) {
            s.cos_coeffs[k - 1] *= 0.7;
            s.sin_coeffs[k - 1] *= 0.7;
        }
    }
    return s;
}

}  // namespace elastica
