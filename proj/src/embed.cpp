#include <echcap/embed.hpp>

#include <echcap/errors.hpp>
#include <echcap/oracle.hpp>

namespace echcap {

ObstructionReport obstruct(const MomentRegion& source, const MomentRegion& target, int K,
                           const CapacityOptions& opts) {
    if (K < 0) {
        throw PreconditionError("obstruct: K must be nonnegative");
    }
    ObstructionReport report;
    report.K = K;
    report.source_volume = area(source);
    report.target_volume = area(target);
    report.volume_ok = report.source_volume <= report.target_volume;
    report.source_caps = capacities(source, K, opts).values;
    report.target_caps = capacities(target, K, opts).values;
    for (int k = 0; k <= K; ++k) {
        if (report.source_caps[static_cast<std::size_t>(k)] >
            report.target_caps[static_cast<std::size_t>(k)]) {
            report.capacity_ok = false;
            report.first_violating_k = k;
            break;
        }
    }
    return report;
}

BallBound min_ball_bounds(const MomentRegion& r, int K, const CapacityOptions& opts) {
    if (K < 1) {
        throw PreconditionError("min_ball_bounds: K must be at least 1");
    }
    const auto caps = capacities(r, K, opts).values;
    const auto ball = ellipsoid_sequence(1, 1, K);
    BallBound bound;
    bound.lower = 0;
    bound.lower_witness_k = 1;
    for (int k = 1; k <= K; ++k) {  // k = 0 gives 0/0, no information
        const Rational ratio =
            caps[static_cast<std::size_t>(k)] / ball[static_cast<std::size_t>(k)];
        if (ratio > bound.lower) {
            bound.lower = ratio;
            bound.lower_witness_k = k;
        }
    }
    bound.upper = enclosing_ball_radius(r);
    bound.sharp = (bound.lower == bound.upper);
    return bound;
}

NonSharpnessReport nonsharpness_report(int K, const CapacityOptions& opts) {
    const MomentRegion p12 = make_polydisk(1, 2);
    const MomentRegion p12_star = translate(p12, {1, 1});

    NonSharpnessReport report;
    report.polydisk_caps = capacities(p12, K, opts).values;
    report.translated_polydisk_caps = capacities(p12_star, K, opts).values;
    report.translation_invariant = (report.polydisk_caps == report.translated_polydisk_caps);

    const BallBound bound = min_ball_bounds(p12, K, opts);
    report.ech_obstruction = bound.lower;
    report.ech_obstruction_witness_k = bound.lower_witness_k;
    report.inclusion_upper_bound = bound.upper;
    report.cited_true_threshold = 3;  // Hind-Lisi threshold, cited constant
    report.sharp = (report.ech_obstruction == report.cited_true_threshold);
    return report;
}

}  // namespace echcap
