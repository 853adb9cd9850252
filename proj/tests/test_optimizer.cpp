#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "elastica/bounds.hpp"
#include "elastica/errors.hpp"
#include "elastica/optimizer.hpp"

using namespace elastica;

namespace {
constexpr double kPi = std::numbers::pi;
const QuadratureConfig kFastQuad{128, 32, 1'000'000, 42};
}  // namespace

TEST_CASE("coefficient packing round-trips") {
    ConvexShape s;
    s.a0 = 1.3;
    s.cos_coeffs = {0.0, 0.05, -0.01};
    s.sin_coeffs = {0.0, 0.02, 0.03};
    const std::vector<double> x = pack_coefficients(s, 3);
    CHECK(x.size() == 7);
    const ConvexShape back = unpack_coefficients(x);
    CHECK(back.a0 == doctest::Approx(1.3));
    CHECK(back.cos_coeffs == s.cos_coeffs);
    CHECK(back.sin_coeffs == s.sin_coeffs);
    CHECK_THROWS_AS(unpack_coefficients({1.0, 2.0}), OutOfRange);
}

TEST_CASE("projection is idempotent on feasible shapes") {
    ConvexShape disk = make_disk(1.0);
    disk.cos_coeffs = {0.0, 0.0};
    disk.sin_coeffs = {0.0, 0.0};
    const ConvexShape projected = project_convex(pack_coefficients(disk, 2));
    CHECK(projected.a0 == doctest::Approx(1.0));
    for (double c : projected.cos_coeffs) CHECK(c == doctest::Approx(0.0));

    ConvexShape wavy;
    wavy.a0 = 1.0;
    wavy.cos_coeffs = {0.0, 0.1};
    wavy.sin_coeffs = {0.0, 0.0};
    const ConvexShape same = project_convex(pack_coefficients(wavy, 2));
    CHECK(same.cos_coeffs[1] == doctest::Approx(0.1));
}

TEST_CASE("projection restores convexity by damping") {
    ConvexShape bad;
    bad.a0 = 1.0;
    bad.cos_coeffs = {0.0, 0.5};  // h + h'' dips to -0.5
    bad.sin_coeffs = {0.0, 0.0};
    const ConvexShape fixed = project_convex(pack_coefficients(bad, 2));
    CHECK(min_curvature_radius(fixed) >= conv_floor(fixed));
    CHECK(fixed.cos_coeffs[1] < 0.5);
    CHECK(fixed.cos_coeffs[1] > 0.0);
}

TEST_CASE("gradient of the disk family") {
    // d/dR [pi R^3/3 + 2 pi / R] at R=1 is pi - 2 pi = -pi.
    ConvexShape disk = make_disk(1.0);
    disk.cos_coeffs = {0.0};
    disk.sin_coeffs = {0.0};
    const std::vector<double> g = gradient(disk, 1.0, 1.0, kFastQuad);
    CHECK(g[0] == doctest::Approx(-kPi).epsilon(1e-3));

    ConvexShape opt = make_disk(optimal_disk_radius(1.0, 1.0));
    opt.cos_coeffs = {0.0};
    opt.sin_coeffs = {0.0};
    const std::vector<double> g_star = gradient(opt, 1.0, 1.0, kFastQuad);
    CHECK(std::abs(g_star[0]) <= 1e-3);
}

TEST_CASE("gradient matches directional finite differences") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 3; ++trial) {
        const ConvexShape s = random_shape(rng, 4);
        const std::vector<double> g = gradient(s, 1.0, 1.0, kFastQuad);
        std::vector<double> x = pack_coefficients(s, 4);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<double> dir(x.size());
        double norm = 0.0;
        for (auto& d : dir) {
            d = u(rng);
            norm += d * d;
        }
        norm = std::sqrt(norm);
        for (auto& d : dir) d /= norm;

        const double h = 1e-4;
        std::vector<double> xp = x, xm = x;
        for (size_t i = 0; i < x.size(); ++i) {
            xp[i] += h * dir[i];
            xm[i] -= h * dir[i];
        }
        const double ep = total_energy(unpack_coefficients(xp), 1.0, 1.0, kFastQuad).total;
        const double em = total_energy(unpack_coefficients(xm), 1.0, 1.0, kFastQuad).total;
        const double fd = (ep - em) / (2.0 * h);
        double gd = 0.0;
        for (size_t i = 0; i < x.size(); ++i) gd += g[i] * dir[i];
        CHECK(gd == doctest::Approx(fd).epsilon(1e-3));
    }
}

TEST_CASE("minimize descends from the unit disk to the optimal disk energy") {
    OptimizerConfig cfg;
    cfg.k_max = 4;
    cfg.max_iters = 100;
    cfg.quadrature = kFastQuad;
    const OptimizationTrace trace = minimize(cfg, make_disk(1.0));
    REQUIRE(!trace.rows.empty());
    CHECK(trace.rows.back().energy <=
          disk_energy(optimal_disk_radius(1.0, 1.0), 1.0, 1.0) + 1e-3);
    // Accepted energies are nonincreasing.
    for (size_t i = 1; i < trace.rows.size(); ++i)
        CHECK(trace.rows[i].energy <= trace.rows[i - 1].energy + 1e-12);
    // Every iterate stayed strictly convex.
    for (const auto& row : trace.rows)
        CHECK(row.min_curvature_radius > 0.0);
    CHECK_NOTHROW(validate_shape(trace.final_shape));
}

TEST_CASE("minimize leaves a stationary disk alone") {
    OptimizerConfig cfg;
    cfg.k_max = 2;
    cfg.max_iters = 50;
    cfg.quadrature = kFastQuad;
    const double r_star = optimal_disk_radius(1.0, 1.0);
    const OptimizationTrace trace = minimize(cfg, make_disk(r_star));
    CHECK(std::abs(trace.final_shape.a0 - r_star) <= 1e-3);
}

TEST_CASE("max_iters = 0 echoes the initial energy") {
    OptimizerConfig cfg;
    cfg.k_max = 2;
    cfg.max_iters = 0;
    cfg.quadrature = kFastQuad;
    const OptimizationTrace trace = minimize(cfg, make_disk(1.0));
    CHECK(!trace.converged);
    REQUIRE(!trace.rows.empty());
    CHECK(trace.rows.back().energy ==
          doctest::Approx(disk_energy(1.0, 1.0, 1.0)).epsilon(1e-3));
}

TEST_CASE("descent from a perturbed disk and bounds on the result") {
    ConvexShape init;
    init.a0 = 1.0;
    init.cos_coeffs = {0.0, 0.0, 0.05};
    init.sin_coeffs = {0.0, 0.0, 0.0};
    OptimizerConfig cfg;
    cfg.k_max = 3;
    cfg.max_iters = 60;
    cfg.quadrature = kFastQuad;
    const double start = total_energy(init, 1.0, 1.0, kFastQuad).total;
    const OptimizationTrace trace = minimize(cfg, init);
    CHECK(trace.rows.back().energy <= start + 1e-12);
    CHECK(verify_bounds(trace.final_shape, 1.0, 1.0, kFastQuad).all_satisfied());
}

TEST_CASE("simplex search also descends") {
    OptimizerConfig cfg;
    cfg.k_max = 2;
    cfg.max_iters = 120;
    cfg.method = OptimizerConfig::Method::SimplexSearch;
    cfg.quadrature = kFastQuad;
    const OptimizationTrace trace = minimize(cfg, make_disk(1.0));
    CHECK(trace.rows.back().energy <=
          disk_energy(optimal_disk_radius(1.0, 1.0), 1.0, 1.0) + 5e-3);
}
