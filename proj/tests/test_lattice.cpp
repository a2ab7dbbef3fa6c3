#include <doctest.h>

#include <echcap/errors.hpp>
#include <echcap/lattice.hpp>
#include <echcap/norm.hpp>
#include <echcap/region.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

using namespace echcap;

namespace {

MomentRegion quad_2442() {
    return intersect(make_ellipsoid(2, 4), make_ellipsoid(4, 2));
}

std::vector<Rational> rats(std::initializer_list<Rational> vals) { return vals; }

// Monotone-chain convex hull, counterclockwise, no collinear hull vertices.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<LatticePoint> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0) {
            hull.pop_back();
        }
        hull.push_back(*it);
    }
    hull.pop_back();
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    return hull;
}

// Clockwise loop through the hull (counterclockwise vertex list reversed).
ConvexLoop loop_from_hull(const std::vector<LatticePoint>& hull) {
    ConvexLoop loop;
    if (hull.empty()) return loop;
    loop.base = hull[0];
    if (hull.size() == 1) return loop;
    if (hull.size() == 2) {
        loop.edges = {{hull[1].x - hull[0].x, hull[1].y - hull[0].y},
                      {hull[0].x - hull[1].x, hull[0].y - hull[1].y}};
        return loop;
    }
    std::vector<LatticePoint> cw(hull.rbegin(), hull.rend());
    for (std::size_t i = 0; i < cw.size(); ++i) {
        const auto& a = cw[i];
        const auto& b = cw[(i + 1) % cw.size()];
        loop.edges.push_back({b.x - a.x, b.y - a.y});
    }
    return loop;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Lattice points in the closed hull, by scanning the bounding box.
std::int64_t direct_count(const std::vector<LatticePoint>& hull) {
    if (hull.size() == 1) return 1;
    if (hull.size() == 2) {
        return gcd64(std::abs(hull[1].x - hull[0].x), std::abs(hull[1].y - hull[0].y)) + 1;
    }
    std::vector<Point> verts;
    for (const auto& p : hull) verts.push_back({p.x, p.y});
    const StarPolygon poly(verts);
    std::int64_t xmin = hull[0].x, xmax = hull[0].x, ymin = hull[0].y, ymax = hull[0].y;
    for (const auto& p : hull) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    std::int64_t count = 0;
    for (std::int64_t x = xmin; x <= xmax; ++x) {
        for (std::int64_t y = ymin; y <= ymax; ++y) {
            if (contains(poly, {x, y})) ++count;
        }
    }
    return count;
}

void check_sequence_shape(const CapacitySequence& seq) {
    REQUIRE(!seq.values.empty());
    CHECK(seq.values[0] == 0);
    for (std::size_t k = 1; k < seq.values.size(); ++k) {
        CHECK(seq.values[k - 1] <= seq.values[k]);
    }
}

void check_witnesses(const MomentRegion& r, const CapacitySequence& seq) {
    const SupportNorm norm(r);
    for (std::size_t k = 0; k < seq.witnesses.size(); ++k) {
        const auto& w = seq.witnesses[k];
        CHECK_NOTHROW(validate_loop(w));
        CHECK(enclosed_count(w) >= static_cast<std::int64_t>(k) + 1);
        CHECK(norm.loop_length(w.edges) == seq.values[k]);
    }
}

}  // namespace

TEST_CASE("enclosed_count on reference loops") {
    CHECK(enclosed_count({{0, 0}, {{1, 1}, {0, -1}, {-1, 0}}}) == 3);
    CHECK(enclosed_count({{2, 2}, {{0, -2}, {-2, 0}, {0, 2}, {2, 0}}}) == 9);
    CHECK(enclosed_count({{0, 0}, {{2, 0}, {-2, 0}}}) == 3);
    CHECK(enclosed_count({{5, -3}, {}}) == 1);
}

TEST_CASE("loop validation rejects malformed edge lists") {
    CHECK_THROWS_AS(validate_loop({{0, 0}, {{1, 0}, {0, 1}}}), PreconditionError);  // open
    // Counterclockwise triangle.
    CHECK_THROWS_AS(validate_loop({{0, 0}, {{1, 0}, {0, 1}, {-1, -1}}}), PreconditionError);
    // Direction runs split across the cycle interior.
    CHECK_THROWS_AS(validate_loop({{0, 0}, {{1, 0}, {0, -1}, {1, 0}, {-2, 1}}}),
                    PreconditionError);
    CHECK_NOTHROW(validate_loop({{0, 0}, {{1, 1}, {0, -1}, {-1, 0}}}));
    CHECK_NOTHROW(validate_loop({{0, 0}, {{1, 2}, {1, 2}, {-1, -2}, {-1, -2}}}));  // segment
}

TEST_CASE("canonical_loop is rotation-invariant") {
    const ConvexLoop a = canonical_loop({{0, 0}, {{1, 1}, {0, -1}, {-1, 0}}});
    const ConvexLoop b = canonical_loop({{1, 1}, {{0, -1}, {-1, 0}, {1, 1}}});
    const ConvexLoop c = canonical_loop({{1, 0}, {{-1, 0}, {1, 1}, {0, -1}}});
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.edges == std::vector<LatticeVector>{{-1, 0}, {1, 1}, {0, -1}});
}

TEST_CASE("Pick count matches direct counting on random hulls") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> coord(-4, 4);
    std::uniform_int_distribution<int> npts(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<LatticePoint> pts;
        const int n = npts(rng);
        for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
        const auto hull = convex_hull(pts);
        const ConvexLoop loop = loop_from_hull(hull);
        CHECK_NOTHROW(validate_loop(loop));
        CHECK(enclosed_count(loop) == direct_count(hull));
    }
}

TEST_CASE("capacities of the reference regions") {
    CHECK(capacities(make_ellipsoid(1, 1), 5).values ==
          rats({0, 1, 1, 2, 2, 2}));
    CHECK(capacities(quad_2442(), 2).values == rats({0, 2, Rational(8, 3)}));
    CHECK(capacities(make_polydisk(1, 1), 4).values == rats({0, 1, 2, 2, 3}));
}

TEST_CASE("witnesses are valid minimizers") {
    for (const auto& r : {make_ellipsoid(1, 1), make_ellipsoid(1, 2), make_polydisk(1, 2),
                          quad_2442()}) {
        const auto seq = capacities(r, 6);
        check_sequence_shape(seq);
        check_witnesses(r, seq);
    }
}

TEST_CASE("translation invariance") {
    const std::vector<MomentRegion> regions = {make_ellipsoid(1, 1), make_ellipsoid(1, 2),
                                               make_polydisk(1, 2), quad_2442()};
    for (const auto& r : regions) {
        const auto base = capacities(r, 6).values;
        CHECK(capacities(translate(r, {1, 1}), 6).values == base);
        CHECK(capacities(translate(r, {3, 7}), 6).values == base);
    }
}

TEST_CASE("conformality") {
    for (const auto& r : {make_ellipsoid(1, 1), quad_2442()}) {
        const auto base = capacities(r, 6).values;
        for (const Rational lam : {Rational(2), Rational(1, 3)}) {
            const auto scaled = capacities(scale_from(r, lam, {0, 0}), 6).values;
            REQUIRE(scaled.size() == base.size());
            for (std::size_t k = 0; k < base.size(); ++k) {
                CHECK(scaled[k] == lam * base[k]);
            }
        }
    }
}

TEST_CASE("monotonicity under inclusion") {
    const MomentRegion small = make_ellipsoid(1, 2);
    const MomentRegion mid = make_ellipsoid(2, 2);
    const MomentRegion big = make_polydisk(2, 2);
    const auto cs = capacities(small, 6).values;
    const auto cm = capacities(mid, 6).values;
    const auto cb = capacities(big, 6).values;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        CHECK(cs[k] <= cm[k]);
        CHECK(cm[k] <= cb[k]);
    }
}

TEST_CASE("brute-force oracle equivalence") {
    const std::vector<MomentRegion> regions = {make_ellipsoid(1, 1), make_ellipsoid(1, 2),
                                               make_polydisk(1, 1), make_polydisk(1, 2),
                                               quad_2442()};
    for (const auto& r : regions) {
        const auto fast = capacities(r, 6);
        const auto slow = brute_force_capacities(r, 6, 5);
        CHECK(fast.values == slow.values);
        check_sequence_shape(slow);
    }
}

TEST_CASE("brute-force reference values") {
    CHECK(brute_force_capacities(make_ellipsoid(1, 1), 5, 4).values ==
          rats({0, 1, 1, 2, 2, 2}));
    CHECK(brute_force_capacities(quad_2442(), 2, 3).values ==
          rats({0, 2, Rational(8, 3)}));
}

TEST_CASE("minimal loop in the unit square") {
    const auto [quad_loop, quad_len] = minimal_witness_in_unit_square(quad_2442());
    CHECK(quad_len == Rational(8, 3));
    CHECK(quad_loop == canonical_loop({{0, 0}, {{1, 1}, {0, -1}, {-1, 0}}}));

    const auto [ball_loop, ball_len] = minimal_witness_in_unit_square(make_ellipsoid(1, 1));
    CHECK(ball_len == 1);
    CHECK(ball_loop == canonical_loop({{0, 0}, {{1, 1}, {0, -1}, {-1, 0}}}));

    const auto [sq_loop, sq_len] = minimal_witness_in_unit_square(make_polydisk(1, 1));
    CHECK(sq_len == 2);
    CHECK(enclosed_count(sq_loop) >= 3);
}

TEST_CASE("parallel search reproduces the serial result exactly") {
    CapacityOptions par;
    par.parallel = true;
    par.exact_count = true;
    CapacityOptions ser;
    ser.exact_count = true;
    for (const auto& r : {make_ellipsoid(1, 2), quad_2442(), make_polydisk(1, 2)}) {
        const auto a = capacities(r, 8, ser);
        const auto b = capacities(r, 8, par);
        CHECK(a.values == b.values);
        CHECK(a.witnesses == b.witnesses);
        REQUIRE(a.exact_count_values.has_value());
        REQUIRE(b.exact_count_values.has_value());
        CHECK(*a.exact_count_values == *b.exact_count_values);
    }
}

TEST_CASE("exact-count variant dominates the at-least variant") {
    CapacityOptions opts;
    opts.exact_count = true;
    const auto seq = capacities(quad_2442(), 8, opts);
    REQUIRE(seq.exact_count_values.has_value());
    for (std::size_t k = 0; k < seq.values.size(); ++k) {
        CHECK((*seq.exact_count_values)[k] >= seq.values[k]);
    }
    CHECK((*seq.exact_count_values)[0] == 0);
}

TEST_CASE("exhausted budgets raise resource errors") {
    CapacityOptions tiny;
    tiny.node_budget = 5;
    CHECK_THROWS_AS(capacities(quad_2442(), 6, tiny), ResourceError);
    CapacityOptions few;
    few.max_directions = 1;
    CHECK_THROWS_AS(capacities(quad_2442(), 6, few), ResourceError);
}
