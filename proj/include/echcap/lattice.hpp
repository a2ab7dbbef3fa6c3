#pragma once

#include <echcap/norm.hpp>
#include <echcap/region.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace echcap {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    bool operator==(const LatticePoint& o) const { return x == o.x && y == o.y; }
};

// Closed convex lattice loop, clockwise, possibly degenerate (point or
// segment). Edges are kept in clockwise angular order with equal directions
// contiguous; the canonical form rotates the cyclic edge list to the
// lexicographically smallest one.
struct ConvexLoop {
    LatticePoint base;
    std::vector<LatticeVector> edges;

    bool operator==(const ConvexLoop& o) const { return base == o.base && edges == o.edges; }
};

// Throws PreconditionError unless the edge list closes and is a clockwise
// convex angular sequence with contiguous direction runs.
void validate_loop(const ConvexLoop& loop);

// Rotates the cyclic edge list to its lex-smallest rotation and renormalizes
// the base so the bounding box corner sits at the original loop's min corner.
ConvexLoop canonical_loop(ConvexLoop loop);

// Lattice points in the closed region bounded by the loop, via Pick's
// theorem: (2A + B)/2 + 1, with B the boundary lattice point count.
std::int64_t enclosed_count(const ConvexLoop& loop);

struct CapacitySequence {
    std::vector<Rational> values;     // index k = 0..K
    std::vector<ConvexLoop> witnesses;
    // Minima over loops enclosing exactly k+1 points, when requested.
    std::optional<std::vector<Rational>> exact_count_values;
};

struct CapacityOptions {
    bool exact_count = false;
    bool parallel = false;
    std::uint64_t node_budget = 500'000'000;
    std::size_t max_directions = 50'000;
};

// ECH capacity sequence c_0..c_K of a convex moment region: for each k the
// shortest ell-length of a clockwise convex lattice loop enclosing at least
// k+1 lattice points, with a minimizing witness per k.
CapacitySequence capacities(const MomentRegion& r, int K, const CapacityOptions& opts = {});

// Independent oracle: exhaustive minimum over all clockwise convex loops
// whose vertices fit in the integer box [-N, N]^2.
CapacitySequence brute_force_capacities(const MomentRegion& r, int K, int N);

// Exhaustive minimum over loops with vertices in {0,1}^2 enclosing at least
// 3 lattice points.
std::pair<ConvexLoop, Rational> minimal_witness_in_unit_square(const MomentRegion& r);

}  // namespace echcap
