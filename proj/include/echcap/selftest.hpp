#pragma once

#include <string>
#include <vector>

namespace echcap {

// Deliberate fault injections, used to prove the selftest can fail.
enum class SelftestPerturbation {
    None,
    // Measures the reference minimal loop counterclockwise instead of
    // clockwise.
    CounterClockwiseOrientation,
    // Simulates an off-by-one lattice point count in the engine.
    PickOffByOne,
};

struct SelftestCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SelftestResult {
    std::vector<SelftestCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

// Fast reproduction of the quantitative reference results the library is
// built around.
SelftestResult run_selftest(SelftestPerturbation perturbation = SelftestPerturbation::None);

}  // namespace echcap
