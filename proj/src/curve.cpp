#include "elastica/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "elastica/errors.hpp"

namespace elastica {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_param(double t, double length) {
    t = std::fmod(t, length);
    if (t < 0.0) t += length;
    return t;
}

// Index of the sample interval containing arc length t, plus the local
// interpolation weight.  Assumes uniform spacing.
std::pair<int, double> locate(const BoundaryCurve& c, double t) {
    const int n = c.sample_count();
    const double tt = wrap_param(t, c.total_length);
    const double step = c.total_length / n;
    int i = static_cast<int>(tt / step);
    i = std::clamp(i, 0, n - 1);
    const double w = (tt - i * step) / step;
    return {i, w};
}

double signed_angle(Vec2 a, Vec2 b) { return std::atan2(cross(a, b), dot(a, b)); }
}  // namespace

Vec2 BoundaryCurve::point_at(double t) const {
    const auto [i, w] = locate(*this, t);
    return points[i] + w * (points[i + 1] - points[i]);
}

Vec2 BoundaryCurve::tangent_at(double t) const {
    const auto [i, w] = locate(*this, t);
    Vec2 v = tangents[i] + w * (tangents[i + 1] - tangents[i]);
    const double n = v.norm();
    return n > 0.0 ? (1.0 / n) * v : tangents[i];
}

BoundaryCurve BoundaryCurve::transformed(Rot2 rot, Vec2 translation) const {
    BoundaryCurve out = *this;
    for (auto& p : out.points) p = rot.apply(p) + translation;
    for (auto& t : out.tangents) t = rot.apply(t);
    return out;
}

BoundaryCurve BoundaryCurve::rebased(double t0) const {
    const int n = sample_count();
    const double step = total_length / n;
    const int shift = static_cast<int>(std::lround(wrap_param(t0, total_length) / step)) % n;
    BoundaryCurve out;
    out.total_length = total_length;
    out.points.reserve(n + 1);
    out.tangents.reserve(n + 1);
    out.curvature_samples.reserve(n + 1);
    out.cumulative_arclength.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        const int j = (i + shift) % n;
        out.points.push_back(points[j]);
        out.tangents.push_back(tangents[j]);
        out.curvature_samples.push_back(curvature_samples[j]);
        out.cumulative_arclength.push_back(i * step);
    }
    out.points.back() = out.points.front();
    out.tangents.back() = out.tangents.front();
    out.curvature_samples.back() = out.curvature_samples.front();
    return out;
}

void validate_curve(const BoundaryCurve& curve) {
    const int n = curve.sample_count();
    if (n < 16) throw DegenerateShape("curve has too few samples");
    const double scale = std::max(1.0, curve.total_length);
    if ((curve.points.front() - curve.points.back()).norm() > 1e-9 * scale)
        throw DegenerateShape("curve is not closed");
    for (const auto& t : curve.tangents)
        if (std::abs(t.norm() - 1.0) > 1e-9)
            throw DegenerateShape("tangent is not unit length");
    const double tol = 1e-9 * scale * scale;
    for (int i = 0; i < n; ++i) {
        const Vec2 e0 = curve.points[(i + 1) % n] - curve.points[i];
        const Vec2 e1 = curve.points[(i + 2) % n] - curve.points[(i + 1) % n];
        if (cross(e0, e1) < -tol)
            throw ConvexityViolation("boundary polyline is not convex ccw");
    }
    if (std::abs(total_turning(curve) - kTwoPi) > 1e-3)
        throw DegenerateShape("total turning differs from 2*pi");
}

BoundaryCurve boundary_from_shape(const ConvexShape& shape, int n) {
    if (n < 16) throw DegenerateShape("need at least 16 boundary samples");
    validate_shape(shape);

    // Fine theta grid -> chordal arc length, then invert s(theta).
    const int m = std::max(4 * n, 8192);
    std::vector<double> theta(m + 1), s(m + 1, 0.0);
    std::vector<Vec2> pts(m + 1);
    for (int i = 0; i <= m; ++i) {
        theta[i] = kTwoPi * i / m;
        pts[i] = shape.boundary_point(theta[i]);
        if (i > 0) s[i] = s[i - 1] + (pts[i] - pts[i - 1]).norm();
    }
    const double length = s[m];

    BoundaryCurve curve;
    curve.total_length = length;
    curve.points.reserve(n + 1);
    curve.tangents.reserve(n + 1);
    curve.curvature_samples.reserve(n + 1);
    curve.cumulative_arclength.reserve(n + 1);

    int j = 0;
    for (int i = 0; i <= n; ++i) {
        const double si = length * i / n;
        while (j < m - 1 && s[j + 1] < si) ++j;
        const double ds = s[j + 1] - s[j];
        const double w = ds > 0.0 ? (si - s[j]) / ds : 0.0;
        const double th = theta[j] + w * (theta[j + 1] - theta[j]);
        const Vec2 u = unit_dir(th);
        curve.points.push_back(shape.boundary_point(th));
        curve.tangents.push_back(perp(u));  // gamma'(theta) = (h + h'') u_perp
        curve.curvature_samples.push_back(1.0 / shape.curvature_radius(th));
        curve.cumulative_arclength.push_back(si);
    }
    curve.points.back() = curve.points.front();
    curve.tangents.back() = curve.tangents.front();
    curve.curvature_samples.back() = curve.curvature_samples.front();
    return curve;
}

BoundaryCurve curve_from_polyline(std::span<const Vec2> polyline, int n) {
    std::vector<Vec2> pts(polyline.begin(), polyline.end());
    if (pts.size() >= 2 && (pts.front() - pts.back()).norm() < 1e-12) pts.pop_back();
    const int m = static_cast<int>(pts.size());
    if (m < 3) throw DegenerateShape("polyline needs at least 3 vertices");

    std::vector<double> s(m + 1, 0.0);
    for (int i = 0; i < m; ++i)
        s[i + 1] = s[i] + (pts[(i + 1) % m] - pts[i]).norm();
    const double length = s[m];
    if (!(length > 0.0)) throw DegenerateShape("degenerate polyline");

    BoundaryCurve curve;
    curve.total_length = length;
    curve.points.reserve(n + 1);
    curve.cumulative_arclength.reserve(n + 1);
    int j = 0;
    for (int i = 0; i <= n; ++i) {
        const double si = length * i / n;
        while (j < m - 1 && s[j + 1] < si) ++j;
        const double ds = s[j + 1] - s[j];
        const double w = ds > 0.0 ? (si - s[j]) / ds : 0.0;
        curve.points.push_back(pts[j] + w * (pts[(j + 1) % m] - pts[j]));
        curve.cumulative_arclength.push_back(si);
    }
    curve.points.back() = curve.points.front();

    // Discrete tangents (central) and curvature (turning angle per length).
    const int nn = curve.sample_count();
    curve.tangents.assign(nn + 1, Vec2{});
    curve.curvature_samples.assign(nn + 1, 0.0);
    for (int i = 0; i < nn; ++i) {
        const Vec2 prev = curve.points[(i + nn - 1) % nn];
        const Vec2 next = curve.points[(i + 1) % nn];
        const Vec2 e0 = curve.points[i] - prev;
        const Vec2 e1 = next - curve.points[i];
        Vec2 t = e0 + e1;
        const double tn = t.norm();
        curve.tangents[i] = tn > 0.0 ? (1.0 / tn) * t : Vec2{1.0, 0.0};
        const double w2 = 0.5 * (e0.norm() + e1.norm());
        curve.curvature_samples[i] = w2 > 0.0 ? signed_angle(e0, e1) / w2 : 0.0;
    }
    curve.tangents.back() = curve.tangents.front();
    curve.curvature_samples.back() = curve.curvature_samples.front();
    return curve;
}

double diameter(const BoundaryCurve& curve) {
    const int n = curve.sample_count();
    const auto& p = curve.points;
    // Rotating calipers over the (convex, ccw) sample polygon.
    double best = 0.0;
    int j = 1;
    for (int i = 0; i < n; ++i) {
        const Vec2 edge = p[(i + 1) % n] - p[i];
        while (cross(edge, p[(j + 1) % n] - p[j % n]) > 0.0) j = (j + 1) % n;
        best = std::max({best, (p[i] - p[j]).norm(), (p[(i + 1) % n] - p[j]).norm()});
    }
    return best;
}

double area(const BoundaryCurve& curve) {
    const int n = curve.sample_count();
    double a = 0.0;
    for (int i = 0; i < n; ++i)
        a += cross(curve.points[i], curve.points[i + 1]);
    return 0.5 * a;
}

double perimeter(const BoundaryCurve& curve) {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < curve.points.size(); ++i)
        len += (curve.points[i + 1] - curve.points[i]).norm();
    return len;
}

double total_turning(const BoundaryCurve& curve) {
    const int n = curve.sample_count();
    double turn = 0.0;
    for (int i = 0; i < n; ++i) {
        const Vec2 e0 = curve.points[(i + 1) % n] - curve.points[i];
        const Vec2 e1 = curve.points[(i + 2) % n] - curve.points[(i + 1) % n];
        turn += signed_angle(e0, e1);
    }
    return turn;
}

double hausdorff_distance(const BoundaryCurve& c1, const BoundaryCurve& c2) {
    const auto directed = [](const BoundaryCurve& a, const BoundaryCurve& b) {
        double sup = 0.0;
        for (std::size_t i = 0; i + 1 < a.points.size(); ++i) {
            double inf = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j + 1 < b.points.size(); ++j)
                inf = std::min(inf, (a.points[i] - b.points[j]).squared_norm());
            sup = std::max(sup, inf);
        }
        return std::sqrt(sup);
    };
    return std::max(directed(c1, c2), directed(c2, c1));
}

double elastica_of_edges(std::span<const Vec2> edges) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double w = 0.5 * (edges[i].norm() + edges[i + 1].norm());
        if (w <= 0.0) continue;
        const double ang = signed_angle(edges[i], edges[i + 1]);
        acc += ang * ang / w;
    }
    return acc;
}

double elastica_of_closed_polyline(std::span<const Vec2> vertices) {
    const std::size_t n = vertices.size();
    std::vector<Vec2> edges(n);
    for (std::size_t i = 0; i < n; ++i)
        edges[i] = vertices[(i + 1) % n] - vertices[i];
    edges.push_back(edges.front());  // wrap so every junction is interior
    return elastica_of_edges(edges);
}

}  // namespace elastica
