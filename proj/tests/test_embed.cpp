#include <doctest.h>

#include <echcap/embed.hpp>
#include <echcap/oracle.hpp>
#include <echcap/region.hpp>

using namespace echcap;

namespace {

MomentRegion quad_2442() {
    return intersect(make_ellipsoid(2, 4), make_ellipsoid(4, 2));
}

}  // namespace

TEST_CASE("obstruction report examples") {
    const MomentRegion quad = quad_2442();

    const auto blocked = obstruct(quad, make_ellipsoid(Rational(5, 2), Rational(5, 2)), 6);
    CHECK(blocked.obstructed());
    CHECK(!blocked.capacity_ok);
    REQUIRE(blocked.first_violating_k.has_value());
    CHECK(*blocked.first_violating_k == 2);
    CHECK(blocked.source_caps[2] == Rational(8, 3));
    CHECK(blocked.target_caps[2] == Rational(5, 2));

    const auto clean = obstruct(quad, make_ellipsoid(Rational(8, 3), Rational(8, 3)), 6);
    CHECK(!clean.obstructed());
    CHECK(clean.volume_ok);
    CHECK(clean.capacity_ok);

    const auto identity = obstruct(quad, quad, 6);
    CHECK(!identity.obstructed());
}

TEST_CASE("inclusion never triggers an obstruction") {
    const MomentRegion small = make_ellipsoid(1, 2);
    const MomentRegion mid = make_ellipsoid(2, 2);
    const MomentRegion big = make_polydisk(2, 2);
    CHECK(!obstruct(small, mid, 6).obstructed());
    CHECK(!obstruct(mid, big, 6).obstructed());
    CHECK(!obstruct(small, big, 6).obstructed());
}

TEST_CASE("volume violation alone obstructs") {
    const auto report = obstruct(make_polydisk(2, 2), make_polydisk(1, 1), 0);
    CHECK(report.obstructed());
    CHECK(!report.volume_ok);
}

TEST_CASE("minimal ball bounds") {
    const auto quad_bound = min_ball_bounds(quad_2442(), 6);
    CHECK(quad_bound.lower == Rational(8, 3));
    CHECK(quad_bound.lower_witness_k == 2);
    CHECK(quad_bound.upper == Rational(8, 3));
    CHECK(quad_bound.sharp);

    const auto poly_bound = min_ball_bounds(make_polydisk(1, 2), 10);
    CHECK(poly_bound.lower == 2);
    CHECK(poly_bound.lower_witness_k == 2);
    CHECK(poly_bound.upper == 3);
    CHECK(!poly_bound.sharp);

    const auto ball_bound = min_ball_bounds(make_ellipsoid(1, 1), 6);
    CHECK(ball_bound.lower == 1);
    CHECK(ball_bound.upper == 1);
    CHECK(ball_bound.sharp);
}

TEST_CASE("ball bounds scale linearly") {
    const MomentRegion r = quad_2442();
    const Rational lam(3, 2);
    const auto base = min_ball_bounds(r, 6);
    const auto scaled = min_ball_bounds(scale_from(r, lam, {0, 0}), 6);
    CHECK(scaled.lower == lam * base.lower);
    CHECK(scaled.upper == lam * base.upper);
    CHECK(scaled.sharp == base.sharp);
}

TEST_CASE("sharp bound reproduces the corner radius for both parameter sets") {
    for (const auto& p : {IntersectionParams{2, 4, 4, 2}, IntersectionParams{3, 6, 6, 3}}) {
        const auto r = intersection_R(p);
        REQUIRE(r.hypothesis_met);
        const MomentRegion region =
            intersect(make_ellipsoid(p.a, p.b), make_ellipsoid(p.c, p.d));
        const auto bound = min_ball_bounds(region, 6);
        CHECK(bound.sharp);
        CHECK(bound.lower == r.R);
    }
}

TEST_CASE("capacity bound beats the volume bound on the quad") {
    // Ball of radius rho has area rho^2/2, so the volume bound is
    // rho >= sqrt(2 * area). Compare squares: (8/3)^2 > 2 * 8/3.
    const MomentRegion r = quad_2442();
    const auto bound = min_ball_bounds(r, 6);
    CHECK(bound.lower * bound.lower > 2 * area(r));
}

TEST_CASE("non-sharpness report for the 1x2 polydisk") {
    const auto report = nonsharpness_report(10);
    CHECK(report.polydisk_caps == report.translated_polydisk_caps);
    CHECK(report.translation_invariant);
    CHECK(report.ech_obstruction == 2);
    CHECK(report.ech_obstruction_witness_k == 2);
    CHECK(report.inclusion_upper_bound == 3);
    CHECK(report.cited_true_threshold == 3);
    CHECK(!report.sharp);
    CHECK(report.polydisk_caps == polydisk_sequence(1, 2, 10));
}
