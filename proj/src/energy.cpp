#include "elastica/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "elastica/errors.hpp"
#include "elastica/metrics.hpp"

namespace elastica {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;

// Gauss-Legendre nodes/weights on [-1, 1], Newton iteration on P_n roots.
struct GaussLegendre {
    std::vector<double> nodes, weights;

    explicit GaussLegendre(int n) {
        nodes.resize(n);
        weights.resize(n);
        for (int i = 0; i < n; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

const GaussLegendre& gl_cache(int n) {
    static std::vector<std::pair<int, GaussLegendre>> cache;
    for (auto& [k, g] : cache)
        if (k == n) return g;
    cache.emplace_back(n, GaussLegendre(n));
    return cache.back().second;
}

// Precomputed support samples for repeated distance queries against one
// shape.  The grid minimum brackets the true minimizer; a safeguarded
// Newton iteration on g(theta) = h - <x,u> polishes it.
class DistanceField {
public:
    DistanceField(const ConvexShape& shape, int grid) : shape_(shape), grid_(grid) {
        h_.resize(grid);
        u_.resize(grid);
        for (int i = 0; i < grid; ++i) {
            const double theta = kTwoPi * i / grid;
            h_[i] = shape.support(theta);
            u_[i] = unit_dir(theta);
        }
    }

    double distance(Vec2 x) const {
        int best = 0;
        double gmin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < grid_; ++i) {
            const double g = h_[i] - dot(x, u_[i]);
            if (g < gmin) { gmin = g; best = i; }
        }
        const double step = kTwoPi / grid_;
        double lo = (best - 1) * step, hi = (best + 1) * step;
        double theta = best * step;
        for (int it = 0; it < 12; ++it) {
            const Vec2 u = unit_dir(theta);
            double h, h1, h2;
            shape_.support_jet(theta, h, h1, h2);
            const double g1 = h1 - dot(x, perp(u));
            const double g2 = h2 + dot(x, u);
            if (g1 > 0.0) hi = theta; else lo = theta;
            double next = g2 > 0.0 ? theta - g1 / g2 : 0.5 * (lo + hi);
            if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
            if (std::abs(next - theta) < 1e-13) { theta = next; break; }
            theta = next;
        }
        const double refined = shape_.support(theta) - dot(x, unit_dir(theta));
        return std::max(0.0, std::min(gmin, refined));
    }

private:
    const ConvexShape& shape_;
    int grid_;
    std::vector<double> h_;
    std::vector<Vec2> u_;
};
}  // namespace

double elastica_term(const ConvexShape& shape, int grid) {
    validate_shape(shape);
    double acc = 0.0;
    for (int i = 0; i < grid; ++i) {
        double h, h1, h2;
        shape.support_jet(kTwoPi * i / grid, h, h1, h2);
        acc += 1.0 / (h + h2);
    }
    return acc * kTwoPi / grid;
}

double average_distance_term(const ConvexShape& shape, double p, const QuadratureConfig& q) {
    if (!(p >= 1.0)) throw std::invalid_argument("exponent p must be >= 1");
    if (q.n_theta < 8) throw QuadratureUnderflow("need at least 8 quadrature rays");
    validate_shape(shape);

    const Vec2 anchor = shape_centroid(shape);
    const DistanceField field(shape, 256);
    const GaussLegendre& gl = gl_cache(q.n_radial);

    // Polar radius of the boundary about the centroid, tabulated once and
    // linearly interpolated per ray.  The integrand vanishes at the boundary,
    // so interpolation error in the outer limit enters only at second order.
    const int m = 1024;
    std::vector<double> alpha(m + 1), rho(m + 1);
    for (int i = 0; i < m; ++i) {
        const double theta = kTwoPi * i / m;
        double h, h1, h2;
        shape.support_jet(theta, h, h1, h2);
        const Vec2 u = unit_dir(theta);
        const Vec2 d = h * u + h1 * perp(u) - anchor;
        alpha[i] = std::atan2(d.y, d.x);
        rho[i] = d.norm();
    }
    for (int i = 1; i < m; ++i)
        while (alpha[i] < alpha[i - 1]) alpha[i] += kTwoPi;
    alpha[m] = alpha[0] + kTwoPi;
    rho[m] = rho[0];
    const auto polar_extent = [&](double phi) {
        while (phi < alpha[0]) phi += kTwoPi;
        while (phi >= alpha[m]) phi -= kTwoPi;
        const auto it = std::upper_bound(alpha.begin(), alpha.end(), phi);
        const size_t i = static_cast<size_t>(it - alpha.begin());
        const double w = (phi - alpha[i - 1]) / (alpha[i] - alpha[i - 1]);
        return (1.0 - w) * rho[i - 1] + w * rho[i];
    };

    const auto dist_pow = [p](double d) {
        if (p == 1.0) return d;
        if (p == 2.0) return d * d;
        return std::pow(d, p);
    };
    double acc = 0.0;
    for (int j = 0; j < q.n_theta; ++j) {
        const double phi = kTwoPi * (j + 0.5) / q.n_theta;
        const Vec2 dir = unit_dir(phi);
        const double extent = polar_extent(phi);
        double ray = 0.0;
        for (int k = 0; k < q.n_radial; ++k) {
            const double r = 0.5 * extent * (gl.nodes[k] + 1.0);
            const double d = field.distance(anchor + r * dir);
            ray += gl.weights[k] * dist_pow(d) * r;
        }
        acc += ray * 0.5 * extent;
    }
    return acc * kTwoPi / q.n_theta;
}

double average_distance_term_mc(const ConvexShape& shape, double p, const QuadratureConfig& q) {
    if (!(p >= 1.0)) throw std::invalid_argument("exponent p must be >= 1");
    validate_shape(shape);

    const PolarTable table = PolarTable::from_shape(shape);
    const DistanceField field(shape, 256);
    const double r = table.max_radius;
    const double box_area = 4.0 * r * r;

    std::mt19937 rng(q.seed);
    std::uniform_real_distribution<double> unif(-r, r);
    double acc = 0.0;
    for (long i = 0; i < q.mc_samples; ++i) {
        const Vec2 x = table.anchor + Vec2{unif(rng), unif(rng)};
        if (table.contains_point(x))
            acc += std::pow(field.distance(x), p);
    }
    return acc / static_cast<double>(q.mc_samples) * box_area;
}

EnergyBreakdown total_energy(const ConvexShape& shape, double p, double lambda,
                             const QuadratureConfig& q) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    EnergyBreakdown e;
    e.p = p;
    e.lambda = lambda;
    e.avg_distance_term = average_distance_term(shape, p, q);
    e.elastica_term = elastica_term(shape);
    e.total = e.avg_distance_term + lambda * e.elastica_term;
    return e;
}

double disk_energy(double radius, double p, double lambda) {
    if (!(radius > 0.0)) throw NonpositiveRadius("disk radius must be positive");
    return kTwoPi * std::pow(radius, p + 2.0) / ((p + 1.0) * (p + 2.0)) + kTwoPi * lambda / radius;
}

double optimal_disk_radius(double p, double lambda) {
    return std::pow(lambda * (p + 1.0), 1.0 / (p + 3.0));
}

double average_distance_term_polygon(std::span<const Vec2> vertices, double p,
                                     int n_theta, int n_radial) {
    std::vector<Vec2> v(vertices.begin(), vertices.end());
    if (v.size() >= 2 && (v.front() - v.back()).norm() < 1e-12) v.pop_back();
    const int m = static_cast<int>(v.size());
    if (m < 3) throw DegenerateShape("polygon needs at least 3 vertices");

    // Outward normals and offsets of the edge supporting lines; for an
    // interior point of a convex region, dist = min over edges of the
    // distance to the edge line.
    std::vector<Vec2> normal(m);
    std::vector<double> offset(m);
    double a = 0.0;
    Vec2 cacc{0.0, 0.0};
    for (int i = 0; i < m; ++i) {
        const Vec2 e = v[(i + 1) % m] - v[i];
        const double len = e.norm();
        normal[i] = len > 0.0 ? Vec2{e.y / len, -e.x / len} : Vec2{1.0, 0.0};
        offset[i] = dot(normal[i], v[i]);
        const double w = cross(v[i], v[(i + 1) % m]);
        a += w;
        cacc += w * (v[i] + v[(i + 1) % m]);
    }
    const Vec2 anchor = (1.0 / (3.0 * a)) * cacc;

    const auto interior_dist = [&](Vec2 x) {
        double d = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i)
            d = std::min(d, offset[i] - dot(normal[i], x));
        return std::max(0.0, d);
    };
    const auto extent = [&](Vec2 dir) {
        double r = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            const double denom = dot(normal[i], dir);
            if (denom > 1e-12)
                r = std::min(r, (offset[i] - dot(normal[i], anchor)) / denom);
        }
        return r;
    };

    const GaussLegendre& gl = gl_cache(n_radial);
    double acc = 0.0;
    for (int j = 0; j < n_theta; ++j) {
        const double phi = kTwoPi * (j + 0.5) / n_theta;
        const Vec2 dir = unit_dir(phi);
        const double rr = extent(dir);
        double ray = 0.0;
        for (int k = 0; k < n_radial; ++k) {
            const double r = 0.5 * rr * (gl.nodes[k] + 1.0);
            ray += gl.weights[k] * std::pow(interior_dist(anchor + r * dir), p) * r;
        }
        acc += ray * 0.5 * rr;
    }
    return acc * kTwoPi / n_theta;
}

}  // namespace elastica
