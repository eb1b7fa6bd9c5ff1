#pragma once
// Machine-readable verification reports: a named list of checks, each with a
// measured value, the expected value, an optional tolerance, and a verdict.
// Serializes to JSON (full fidelity) and CSV (one row per check).

#include <string>
#include <utility>
#include <vector>

namespace hq {

struct CheckResult {
    std::string name;
    std::string value;      // measured, as exact text (rational or integer)
    std::string expected;   // target value or bound, may be empty
    std::string tolerance;  // may be empty for exact checks
    bool pass = false;
};

struct Report {
    std::string tool_version;
    std::vector<std::pair<std::string, std::string>> config;  // insertion order
    std::vector<CheckResult> results;

    void add_config(std::string key, std::string value) {
        config.emplace_back(std::move(key), std::move(value));
    }
    void add(CheckResult r) { results.push_back(std::move(r)); }

    bool all_pass() const {
        for (const CheckResult& r : results)
            if (!r.pass) return false;
        return true;
    }

    std::string to_json() const;  // stable key order
    std::string to_csv() const;   // header + one line per result
    void save_json(const std::string& path) const;
    void save_csv(const std::string& path) const;
};

}  // namespace hq
