#include <echcap/selftest.hpp>

#include <echcap/embed.hpp>
#include <echcap/lattice.hpp>
#include <echcap/norm.hpp>
#include <echcap/oracle.hpp>
#include <echcap/region.hpp>

#include <sstream>

namespace echcap {

namespace {

MomentRegion quad_2442() {
    return intersect(make_ellipsoid(2, 4), make_ellipsoid(4, 2));
}

std::string seq_string(const std::vector<Rational>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rational_to_string(v[i]);
    }
    return os.str();
}

}  // namespace

SelftestResult run_selftest(SelftestPerturbation perturbation) {
    SelftestResult result;
    auto add = [&](std::string name, bool pass, std::string detail) {
        result.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    const MomentRegion quad = quad_2442();
    const Rational R = intersection_R({2, 4, 4, 2}).R;

    {
        // The minimal 3-point loop has length R clockwise; the reverse
        // orientation measures differently.
        const SupportNorm norm(quad);
        std::vector<LatticeVector> edges;
        if (perturbation == SelftestPerturbation::CounterClockwiseOrientation) {
            edges = {{1, 0}, {0, 1}, {-1, -1}};
        } else {
            edges = {{1, 1}, {0, -1}, {-1, 0}};
        }
        const Rational len = norm.loop_length(edges);
        add("minimal-loop-orientation", len == R,
            "length " + rational_to_string(len) + ", expected R = " + rational_to_string(R));
    }

    {
        const auto caps = capacities(quad, 2);
        const ConvexLoop expected =
            canonical_loop({{0, 0}, {{1, 1}, {0, -1}, {-1, 0}}});
        const bool value_ok = caps.values[2] == R;
        const bool witness_ok = caps.witnesses[2] == expected;
        add("c2-ellipsoid-intersection", value_ok && witness_ok,
            "c2 = " + rational_to_string(caps.values[2]) + ", expected " + rational_to_string(R) +
                (witness_ok ? ", witness matches" : ", witness differs"));
    }

    {
        const auto b1 = capacities(make_ellipsoid(1, 1), 2);
        const auto b52 = capacities(make_ellipsoid(Rational(5, 2), Rational(5, 2)), 2);
        const bool ok = b1.values[2] == 1 && b52.values[2] == Rational(5, 2);
        add("c2-ball-equals-radius", ok,
            "c2(B(1)) = " + rational_to_string(b1.values[2]) +
                ", c2(B(5/2)) = " + rational_to_string(b52.values[2]));
    }

    {
        auto engine = capacities(make_ellipsoid(1, 1), 5).values;
        if (perturbation == SelftestPerturbation::PickOffByOne) {
            // Every loop pretends to enclose one extra point, which shifts
            // the whole sequence down by one index.
            for (std::size_t k = engine.size(); k-- > 1;) engine[k] = engine[k - 1];
        }
        const auto oracle = ellipsoid_sequence(1, 1, 5);
        add("ball-oracle-equivalence", engine == oracle,
            "engine (" + seq_string(engine) + ") vs oracle (" + seq_string(oracle) + ")");
    }

    {
        const StarPolygon good({{Rational(1, 2), 0}, {Rational(3, 2), 0},
                                {Rational(3, 2), 1}, {Rational(1, 2), 1}});
        const StarPolygon bad({{Rational(1, 2), 0}, {Rational(3, 2), 0},
                               {Rational(5, 2), 1}, {Rational(3, 2), 1}});
        const auto good_report = criterion_check(good);
        const auto bad_report = criterion_check(bad);
        const bool ok = good_report.pass() && !bad_report.pass() &&
                        bad_report.axis2.witness && *bad_report.axis2.witness == 2;
        add("criterion-reference-regions", ok,
            ok ? "rectangle passes, sheared parallelogram fails at rho1 = 2"
               : "unexpected criterion verdicts");
    }

    {
        const MomentRegion p12 = make_polydisk(1, 2);
        const auto base = capacities(p12, 6).values;
        const auto moved = capacities(translate(p12, {1, 1}), 6).values;
        add("translation-invariance", base == moved,
            "(" + seq_string(base) + ") vs (" + seq_string(moved) + ")");
    }

    {
        const auto bound = min_ball_bounds(quad, 6);
        const auto quad2 = intersect(make_ellipsoid(3, 6), make_ellipsoid(6, 3));
        const auto bound2 = min_ball_bounds(quad2, 6);
        const bool ok = bound.sharp && bound.lower == R && bound.lower_witness_k == 2 &&
                        bound2.sharp && bound2.lower == 4;
        add("sharp-ball-bounds", ok,
            "quad(2,4,4,2): [" + rational_to_string(bound.lower) + ", " +
                rational_to_string(bound.upper) + "], quad(3,6,6,3): [" +
                rational_to_string(bound2.lower) + ", " + rational_to_string(bound2.upper) + "]");
    }

    {
        const auto report = nonsharpness_report(10);
        const bool ok = report.translation_invariant && report.ech_obstruction == 2 &&
                        report.inclusion_upper_bound == 3 && report.cited_true_threshold == 3 &&
                        !report.sharp;
        add("polydisk-nonsharpness", ok,
            "capacity obstruction " + rational_to_string(report.ech_obstruction) +
                ", cited threshold " + rational_to_string(report.cited_true_threshold));
    }

    return result;
}

}  // namespace echcap
