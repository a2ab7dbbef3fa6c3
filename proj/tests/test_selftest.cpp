#include <doctest.h>

#include <echcap/selftest.hpp>

using namespace echcap;

namespace {

const SelftestCheck* find(const SelftestResult& r, const std::string& name) {
    for (const auto& c : r.checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("selftest passes on a healthy build") {
    const auto result = run_selftest();
    for (const auto& c : result.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
    CHECK(result.all_pass());
    CHECK(result.checks.size() >= 8);
}

TEST_CASE("orientation fault is caught") {
    const auto result = run_selftest(SelftestPerturbation::CounterClockwiseOrientation);
    CHECK(!result.all_pass());
    const auto* check = find(result, "minimal-loop-orientation");
    REQUIRE(check != nullptr);
    CHECK(!check->pass);
}

TEST_CASE("count fault is caught") {
    const auto result = run_selftest(SelftestPerturbation::PickOffByOne);
    CHECK(!result.all_pass());
    const auto* check = find(result, "ball-oracle-equivalence");
    REQUIRE(check != nullptr);
    CHECK(!check->pass);
}
