#pragma once

#include <echcap/region.hpp>

#include <cstdint>
#include <vector>

namespace echcap {

// Integer edge direction of a lattice path.
struct LatticeVector {
    std::int64_t dx = 0;
    std::int64_t dy = 0;

    bool operator==(const LatticeVector& o) const { return dx == o.dx && dy == o.dy; }
    bool operator!=(const LatticeVector& o) const { return !(*this == o); }
};

// Asymmetric support norm of a convex moment region, with a reference origin
// for position vectors. Single-vector values depend on the origin; closed
// loop totals do not.
class SupportNorm {
public:
    explicit SupportNorm(MomentRegion region, Point origin = {0, 0});

    const MomentRegion& region() const { return region_; }
    const Point& origin() const { return origin_; }

    // ell_A(v): max over region vertices q of v . (q - origin). The corner
    // rule for directions between two edge normals is automatic since the
    // max over a polygon is attained at a vertex.
    Rational ell(const LatticeVector& v) const;

    // Sum of ell over a closed edge list; origin-independent.
    Rational loop_length(const std::vector<LatticeVector>& edges) const;

    // Index of the region vertex attaining the support in direction v,
    // smallest index on ties. Realizes the normal-cone partition of the
    // plane of directions.
    std::size_t classify_direction(const LatticeVector& v) const;

private:
    MomentRegion region_;
    Point origin_;
};

}  // namespace echcap
