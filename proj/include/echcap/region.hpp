#pragma once

#include <echcap/rational.hpp>

#include <optional>
#include <vector>

namespace echcap {

// A point of the planar moment space, coordinates in action units (pi |z|^2).
struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);

// cross(b - a, c - a); > 0 means c is left of the directed line a -> b.
Rational orient(const Point& a, const Point& b, const Point& c);

// Simple (non-self-intersecting) polygon with positive area, stored
// counterclockwise. Consecutive collinear vertices are dropped on
// construction; the vertex list is rotated so the lexicographically
// smallest vertex comes first.
class StarPolygon {
public:
    explicit StarPolygon(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    bool is_convex() const;

    bool operator==(const StarPolygon& o) const { return vertices_ == o.vertices_; }

private:
    std::vector<Point> vertices_;
};

// Convex polygon with nonempty interior: the moment region of a toric domain.
// Same storage canon as StarPolygon, plus convexity.
class MomentRegion {
public:
    explicit MomentRegion(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    StarPolygon as_star_polygon() const { return StarPolygon(vertices_); }

    bool operator==(const MomentRegion& o) const { return vertices_ == o.vertices_; }
    bool operator!=(const MomentRegion& o) const { return !(*this == o); }

private:
    std::vector<Point> vertices_;
};

// Moment region of the ellipsoid E(a,b): triangle (0,0),(a,0),(0,b).
MomentRegion make_ellipsoid(const Rational& a, const Rational& b);

// Moment region of the polydisk P(a,b): rectangle [0,a] x [0,b].
MomentRegion make_polydisk(const Rational& a, const Rational& b);

// Exact convex intersection; throws PreconditionError when the result has
// empty interior.
MomentRegion intersect(const MomentRegion& r1, const MomentRegion& r2);

MomentRegion translate(const MomentRegion& r, const Point& t);
StarPolygon translate(const StarPolygon& r, const Point& t);

// q |-> lambda (q - p) + p, lambda > 0.
MomentRegion scale_from(const MomentRegion& r, const Rational& lambda, const Point& p);
StarPolygon scale_from(const StarPolygon& r, const Rational& lambda, const Point& p);

Rational area(const MomentRegion& r);
Rational area(const StarPolygon& r);

// Smallest s with r contained in the moment region of B(s):
// max over vertices of x + y.
Rational enclosing_ball_radius(const MomentRegion& r);

// Closed point-in-polygon test (boundary counts as inside). Exposed for the
// property suites.
bool contains(const StarPolygon& poly, const Point& p);
bool contains(const MomentRegion& region, const Point& p);
bool contains_segment(const StarPolygon& poly, const Point& a, const Point& b);

enum class Axis { Axis1, Axis2 };  // Axis1: coordinate plane {rho1 = 0}, etc.

struct AxisVerdict {
    Axis axis;
    bool touched = false;
    bool pass = true;
    // Coordinate of the offending chord line when pass is false
    // (a rho1 value for Axis2 failures, a rho2 value for Axis1 failures).
    std::optional<Rational> witness;
};

struct CriterionReport {
    AxisVerdict axis1;
    AxisVerdict axis2;
    bool pass() const { return axis1.pass && axis2.pass; }
};

// Disk-degenerate criterion: for each touched coordinate plane, every chord
// of r normal to that plane must be a single interval anchored at it.
// Requires r to lie in the closed first quadrant.
CriterionReport criterion_check(const StarPolygon& r);

// Kernel of a simple polygon (set of star-centers), as the intersection of
// the inner half-planes of all edges. Empty when the kernel has empty
// interior.
std::optional<MomentRegion> star_kernel(const StarPolygon& r);

struct TransversalityResult {
    bool pass = true;
    // Index of an edge whose supporting line passes through the center.
    std::optional<std::size_t> witness_edge;
};

// Rays from `center` meet the polygonal boundary transversely iff no edge's
// supporting line passes through the center. Requires center in the kernel.
TransversalityResult transversality_check(const StarPolygon& r, const Point& center);

}  // namespace echcap
