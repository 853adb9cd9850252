#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "elastica/competitor.hpp"
#include "elastica/errors.hpp"

using namespace elastica;

namespace {
constexpr double kPi = std::numbers::pi;

BoundaryCurve unit_circle(int n = 16384) { return boundary_from_shape(make_disk(1.0), n); }
}  // namespace

TEST_CASE("canonical frame on the unit circle is (nearly) the identity") {
    const auto [frame, canonical] = canonical_frame(unit_circle(), 0.0, 0.01);
    CHECK(frame.rotation.c == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(frame.rotation.s) < 1e-6);
    CHECK(canonical.point_at(0.0).y == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(canonical.point_at(0.0).x > 0.0);
    CHECK(std::abs(canonical.point_at(0.01).x) < 1e-9);
    CHECK((canonical.tangent_at(0.0) - Vec2{0.0, 1.0}).norm() < 1e-8);
}

TEST_CASE("canonical frame recovers the pose of a pre-rotated curve") {
    const BoundaryCurve rotated =
        unit_circle().transformed(Rot2::from_angle(kPi / 6.0), {0.4, -0.2});
    const auto [frame, canonical] = canonical_frame(rotated, 0.3, 0.31);
    CHECK(canonical.point_at(0.0).x >= -1e-9);
    CHECK(std::abs(canonical.point_at(0.0).y) < 1e-8);
    CHECK(std::abs(canonical.point_at(0.01).x) < 1e-8);
    CHECK(canonical.point_at(0.01).y >= -1e-9);
    CHECK((canonical.tangent_at(0.0) - Vec2{0.0, 1.0}).norm() < 1e-8);
}

TEST_CASE("canonical frame on an ellipse-like shape satisfies the pose invariants") {
    ConvexShape s;
    s.a0 = 1.0;
    s.cos_coeffs = {0.0, 0.08};
    s.sin_coeffs = {0.0, 0.03};
    const BoundaryCurve c = boundary_from_shape(s, 16384);
    const auto [frame, canonical] = canonical_frame(c, 1.234, 1.244);
    CHECK(canonical.point_at(0.0).x >= -1e-9);
    CHECK(std::abs(canonical.point_at(0.0).y) < 1e-8);
    CHECK(std::abs(canonical.point_at(0.01).x) < 1e-8);
}

TEST_CASE("canonical frame rejects bad probe pairs") {
    CHECK_THROWS_AS(canonical_frame(unit_circle(), 0.0, 4.0), DegenerateFrame);
    CHECK_THROWS_AS(canonical_frame(unit_circle(), 0.5, 0.5), DegenerateFrame);
}

TEST_CASE("tangent times of circles") {
    const auto [f1, c1] = canonical_frame(unit_circle(1 << 15), 0.0, 0.01);
    const TangentTimes t1 = find_tangent_times(c1);
    CHECK(t1.t_minus == doctest::Approx(kPi / 2.0).epsilon(1e-6));
    CHECK(t1.t_bot == doctest::Approx(kPi).epsilon(1e-6));
    CHECK(t1.t_plus == doctest::Approx(3.0 * kPi / 2.0).epsilon(1e-6));

    const BoundaryCurve big = boundary_from_shape(make_disk(2.0), 1 << 15);
    const auto [f2, c2] = canonical_frame(big, 0.0, 0.01);
    const TangentTimes t2 = find_tangent_times(c2);
    CHECK(t2.t_minus == doctest::Approx(kPi).epsilon(1e-6));
    CHECK(t2.t_bot == doctest::Approx(2.0 * kPi).epsilon(1e-6));
    CHECK(t2.t_plus == doctest::Approx(3.0 * kPi).epsilon(1e-6));
}

TEST_CASE("vector field endpoint values and continuity") {
    const double tm = kPi / 2.0, tb = kPi, tp = 3.0 * kPi / 2.0;
    CHECK((vector_field_v(tm, tm, tb, tp) - Vec2{0.0, 1.0}).norm() < 1e-12);
    CHECK((vector_field_v(tb, tm, tb, tp) - Vec2{-1.0, 0.0}).norm() < 1e-12);
    CHECK(vector_field_v(tp, tm, tb, tp).norm() < 1e-12);
    // Continuity across t_bot over a 1e-6 straddle.
    const Vec2 left = vector_field_v(tb - 1e-6, tm, tb, tp);
    const Vec2 right = vector_field_v(tb + 1e-6, tm, tb, tp);
    CHECK((left - right).norm() <= 1e-5);
    CHECK_THROWS_AS(vector_field_v(0.0, tm, tb, tp), OutOfRange);
}

TEST_CASE("v norm bounds hold on circle gaps") {
    const double tm = kPi / 2.0, tb = kPi, tp = 3.0 * kPi / 2.0;
    for (double lambda : {1.0, 0.5}) {
        const VNormReport rep = v_norm_check(tm, tb, tp, lambda, 7.33);
        CHECK(rep.satisfied);
        CHECK(rep.bound_d1 == doctest::Approx(4.0 * (1.0 / lambda + kPi)));
        CHECK(rep.bound_d2 == doctest::Approx(16.0 * std::pow(1.0 / lambda + kPi, 2.0)));
        // First branch is a unit-speed rotation scaled by (pi/2)/gap.
        CHECK(rep.sup_d1 >= (kPi / 2.0) / (tb - tm) - 1e-6);
    }
    CHECK_THROWS_AS(v_norm_check(0.0, 0.05, 0.1, 1.0, 7.33), HypothesisUnmet);
}

TEST_CASE("competitor construction on the unit circle") {
    const double eps = 0.01;
    const auto [frame, canonical] = canonical_frame(unit_circle(1 << 15), 0.0, eps);
    const CompetitorResult res = build_competitor(canonical, eps);

    CHECK(res.M == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(res.hausdorff_gap <= 2.0 * eps + 1e-9);
    CHECK(eps < res.t_minus);
    CHECK(res.t_minus < res.t_bot);
    CHECK(res.t_bot < res.t_plus);
    CHECK(res.t_plus < canonical.total_length);

    // Translation piece: curvature profile identical, delta exactly zero.
    CHECK(std::abs(res.piece_deltas[1]) <= 1e-12);
    // Homothety piece: curvature halves pointwise, so its elastica halves.
    CHECK(res.piece_deltas[0] ==
          doctest::Approx(-0.5 * res.piece1_original).epsilon(1e-9));
    CHECK_NOTHROW(validate_curve(res.competitor_curve));
}

TEST_CASE("oversized eps is rejected") {
    const auto [frame, canonical] = canonical_frame(unit_circle(), 0.0, 2.0);
    CHECK_THROWS_AS(build_competitor(canonical, 2.0), EpsilonTooLarge);
}

TEST_CASE("competitor requires the canonical frame") {
    const BoundaryCurve shifted = unit_circle().transformed(Rot2{}, {0.5, 0.5});
    CHECK_THROWS_AS(build_competitor(shifted, 0.01), FrameMissing);
}

TEST_CASE("sweep needs at least four eps values") {
    CHECK_THROWS_AS(
        verify_energy_inequalities(unit_circle(), {0.02, 0.01, 0.005}, 1.0, 1.0),
        FitUnstable);
}

TEST_CASE("full sweep on the unit circle passes every inequality") {
    const BoundaryCurve circle = unit_circle(1 << 16);
    const SweepReport rep =
        verify_energy_inequalities(circle, {0.02, 0.01, 0.005, 0.0025}, 1.0, 1.0);
    CHECK(rep.rows.size() == 4);
    CHECK(rep.checks.hausdorff_ok);
    CHECK(rep.checks.f_ok);
    CHECK(rep.checks.translation_ok);
    CHECK(rep.checks.homothety_ok);
    CHECK(rep.checks.stretch_ok);
    CHECK(rep.checks.k_fit_ok);
    CHECK(rep.checks.all_ok());
    CHECK(rep.rows.back().M == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(std::isfinite(rep.fitted_linear));
    CHECK(std::isfinite(rep.fitted_three_half));
    // Homothety gap on the circle: original eps*1, competitor eps/2.
    for (const auto& row : rep.rows)
        CHECK(-row.piece_deltas[0] ==
              doctest::Approx(row.eps / 2.0).epsilon(0.05));
}
