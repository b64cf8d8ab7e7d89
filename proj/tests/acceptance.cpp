// Acceptance suite: runs the full verification battery on the default
// configuration, prints one line per acceptance criterion, and exits nonzero
// if anything fails. Also covers the determinism criterion by running the
// battery twice and comparing serialized reports byte for byte.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "tomox/verify.hpp"

namespace {

struct Criterion {
    std::string label;
    std::vector<std::string> prefixes;
    double time_budget_s = 0.0;  // 0 = no budget
    std::vector<std::string> time_keys;
};

}  // namespace

int main(int argc, char** argv) {
    tomox::Config config;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--config")
            config = tomox::Config::from_file(argv[i + 1]);
        else if (flag == "--tolerance-scale")
            config.set("tolerance_scale", argv[i + 1]);
    }

    std::printf("running verification suite (pass 1)...\n");
    auto report = tomox::run_verify(config);
    std::printf("running verification suite (pass 2, determinism)...\n");
    auto report2 = tomox::run_verify(config);
    const bool deterministic =
        tomox::serialize_report(report) == tomox::serialize_report(report2);

    const std::vector<Criterion> criteria{
        {"criterion 1 tomogram normalization", {"c1-"}, 30.0, {"criterion-1"}},
        {"criterion 2 gaussian golden values", {"c2-"}, 0.0, {}},
        {"criterion 3 radon bridge", {"c3-"}, 60.0, {"criterion-3"}},
        {"criterion 4 homogeneity", {"c4-"}, 0.0, {}},
        {"criterion 5 inversion round trips", {"c5-"}, 120.0,
         {"criterion-5-symplectic", "criterion-5-time-scale", "criterion-5-cwt"}},
        {"criterion 6 polarization identity", {"c6-"}, 0.0, {}},
        {"criterion 7 energy identity", {"c7-"}, 0.0, {}},
        {"criterion 8 photon-number tomography", {"c8-"}, 0.0, {}},
    };

    std::map<std::string, double> times(report.criterion_seconds.begin(),
                                        report.criterion_seconds.end());

    bool all_ok = true;
    for (const auto& c : criteria) {
        bool ok = true;
        double worst_margin = 0.0;
        std::string worst_name;
        for (const auto& check : report.checks) {
            bool matches = false;
            for (const auto& p : c.prefixes)
                if (check.name.rfind(p, 0) == 0) matches = true;
            if (!matches) continue;
            ok = ok && check.passed;
            const double margin =
                check.tolerance > 0 ? check.residual / check.tolerance : (check.residual > 0);
            if (margin >= worst_margin) {
                worst_margin = margin;
                worst_name = check.name;
            }
        }
        double spent = 0.0;
        for (const auto& k : c.time_keys) spent += times.count(k) ? times[k] : 0.0;
        if (c.time_budget_s > 0 && spent > c.time_budget_s) ok = false;
        std::printf("%-4s %s  (worst %s at %.3g of tolerance%s)\n", ok ? "PASS" : "FAIL",
                    c.label.c_str(), worst_name.c_str(), worst_margin,
                    c.time_budget_s > 0
                        ? (", " + std::to_string(spent) + "s of " +
                           std::to_string(c.time_budget_s) + "s budget")
                              .c_str()
                        : "");
        all_ok = all_ok && ok;
    }
    std::printf("%-4s criterion 9 determinism (byte-identical reports)\n",
                deterministic ? "PASS" : "FAIL");
    all_ok = all_ok && deterministic;

    bool invariants_ok = true;
    std::size_t inv_total = 0, inv_failed = 0;
    for (const auto& check : report.checks) {
        if (check.name.rfind("inv-", 0) == 0) {
            ++inv_total;
            if (!check.passed) {
                ++inv_failed;
                invariants_ok = false;
                std::printf("     invariant FAILED: %s residual %.3g tol %.3g\n",
                            check.name.c_str(), check.residual, check.tolerance);
            }
        }
    }
    std::printf("%-4s module invariants (%zu checks, %zu failed)\n",
                invariants_ok ? "PASS" : "FAIL", inv_total, inv_failed);
    all_ok = all_ok && invariants_ok;

    std::printf("total wall time %.1fs\n", report.wall_seconds + report2.wall_seconds);
    return all_ok ? 0 : 1;
}
