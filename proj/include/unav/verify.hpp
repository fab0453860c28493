#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace unav {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> properties;
    nlohmann::json artifacts = nlohmann::json::array();
    double wall_seconds = 0;

    bool pass() const {
        for (const auto& p : properties)
            if (!p.pass) return false;
        return true;
    }
};

struct SuiteOptions {
    int workers = 1;
    uint64_t seed = 20240801;
    int k = 6; // lemma-structure suite parameter
};

// Named verification suites; these implement the toolkit's acceptance
// checks. Suite artifacts are deterministic JSON (identical across worker
// counts), which the determinism suite compares directly.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

} // namespace unav
