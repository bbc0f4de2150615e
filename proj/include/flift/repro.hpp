#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace flift {

/**
 * A reproduction target: one canned verification per acceptance criterion.
 * Verdicts are PASS/FAIL; payloads carry the computed values so the CLI can
 * print them either as a table or as JSON.
 */
struct ReproResult {
    std::string name;
    bool pass = false;
    nlohmann::json payload;
    double millis = 0.0;
};

struct ReproOptions {
    std::string data_dir = "data";
    uint64_t seed = 20240901;
    int p_override = 0;     // p1-invariant-splitting: run a single p
};

std::vector<std::string> repro_target_names();
ReproResult run_repro_target(const std::string& name, const ReproOptions& opt);
std::vector<ReproResult> run_all_repro(const ReproOptions& opt);

} // namespace flift
