// Configuration pathways of the verification runner: bad configs reject,
// zeroed tolerances fail, and a down-scaled run still executes every check.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tomox/verify.hpp"

using namespace tomox;

namespace {
Config small_config() {
    Config cfg;
    cfg.set("grid.signal", "-8:0.03125:513");
    cfg.set("symplectic.x", "-12:0.1:241");
    cfg.set("affine.s", "-40:0.125:641");
    cfg.set("invert.t", "-4:0.5:17");
    cfg.set("invert.mu", "-8.9375:0.25:72");
    cfg.set("invert.x", "-40:0.25:321");
    cfg.set("invert.ts_mu", "-12:0.25:97");
    cfg.set("invert.ts_t", "-4:0.25:33");
    return cfg;
}
}  // namespace

TEST_CASE("unknown signal kind is a config error") {
    Config cfg = small_config();
    cfg.set("signals", "gaussian;sawtooth;mexican_hat;chirp:0.5,1;two_tone:2,4");
    CHECK_THROWS_AS(run_verify(cfg), config_error);

    Config cfg2 = small_config();
    cfg2.set("signals", "mexican_hat;gaussian;gabor:3;chirp:0.5,1;two_tone:2,4");
    CHECK_THROWS_AS(run_verify(cfg2), config_error);  // gaussian must come first
}

TEST_CASE("zero tolerance fails at least one check, report stays deterministic") {
    Config cfg = small_config();
    cfg.set("tolerance_scale", "0");
    auto report = run_verify(cfg);
    CHECK(!report.all_passed());
    std::size_t failed = 0;
    for (const auto& c : report.checks)
        if (!c.passed) ++failed;
    CHECK(failed >= 1);

    // sorted check names and a stable serialization
    for (std::size_t i = 1; i < report.checks.size(); ++i)
        CHECK(report.checks[i - 1].name < report.checks[i].name);
    const auto text = serialize_report(report);
    CHECK(text.find("\"all_passed\": false") != std::string::npos);
    // timing is excluded unless requested
    CHECK(text.find("timing") == std::string::npos);
    CHECK(serialize_report(report, true).find("timing") != std::string::npos);
}
