#pragma once

#include <echcap/lattice.hpp>
#include <echcap/region.hpp>

#include <optional>

namespace echcap {

// Necessary conditions for a symplectic embedding source -> target:
// volume dominance and entrywise capacity dominance up to K.
struct ObstructionReport {
    Rational source_volume;
    Rational target_volume;
    bool volume_ok = true;
    bool capacity_ok = true;
    std::optional<int> first_violating_k;
    std::vector<Rational> source_caps;  // k = 0..K
    std::vector<Rational> target_caps;
    int K = 0;

    bool obstructed() const { return !volume_ok || !capacity_ok; }
};

ObstructionReport obstruct(const MomentRegion& source, const MomentRegion& target, int K,
                           const CapacityOptions& opts = {});

// Bounds on the smallest ball admitting a symplectic embedding of r:
// capacity lower bound sup_k c_k(r) / N_k(1,1) and inclusion upper bound.
struct BallBound {
    Rational lower;
    int lower_witness_k = 0;
    Rational upper;
    bool sharp = false;
};

BallBound min_ball_bounds(const MomentRegion& r, int K, const CapacityOptions& opts = {});

// Non-sharpness study for P(1,2) into balls: the capacity obstruction equals
// 2, the inclusion bound is 3, and the true threshold 3 is a cited literature
// constant (Hind-Lisi), not computed here.
struct NonSharpnessReport {
    std::vector<Rational> polydisk_caps;             // engine, P(1,2)
    std::vector<Rational> translated_polydisk_caps;  // engine, P(1,2) region + (1,1)
    bool translation_invariant = false;
    Rational ech_obstruction;         // computed: sup_k c_k / N_k(1,1)
    int ech_obstruction_witness_k = 0;
    Rational inclusion_upper_bound;   // computed: enclosing ball radius
    Rational cited_true_threshold;    // literature constant, not computed
    bool sharp = false;               // ech_obstruction == cited threshold
};

NonSharpnessReport nonsharpness_report(int K = 10, const CapacityOptions& opts = {});

}  // namespace echcap
