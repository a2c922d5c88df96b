#ifndef KKLAB_SUITES_HPP
#define KKLAB_SUITES_HPP

#include "kklab/points.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kklab {

// Flat key=value configuration for one experiment run. A seed is mandatory
// for reproducibility, also for suites that do not sample.
struct SuiteConfig {
    std::string suite;
    std::map<std::string, std::string> kv;
    std::optional<uint64_t> seed;

    uint64_t require_seed() const;
    int64_t get_int(const std::string& key, int64_t fallback) const;
    std::string get_str(const std::string& key, const std::string& fallback) const;

    static SuiteConfig from_file(const std::string& suite, const std::string& path);
    void apply_override(const std::string& key, const std::string& value);
};

struct PropertyResult {
    std::string property;
    bool pass = false;
    std::string witness; // populated on failure
};

struct SuiteReport {
    std::string suite;
    std::vector<std::string> anchors;
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::vector<PropertyResult> results;
    int64_t elapsed_ms = 0;

    bool ok() const;
    // Stable field order: suite, anchors, config, results, elapsed_ms.
    std::string to_json() const;
};

std::vector<std::string> suite_names();

// Dispatches on config.suite; errors UnknownSuite / ConfigInvalid.
SuiteReport run_suite(const SuiteConfig& config);

// Subgroup of the base unit group generated by norms from the extensions
// (up to degree_bound) over which Z has points.
struct NormGroupReport {
    std::string field_tag;
    std::set<uint32_t> degrees_with_points;
    bool inconclusive = false; // no points up to the bound
    bool full_group = false;
    uint64_t subgroup_index = 0; // index in the unit group when conclusive
};

NormGroupReport norm_group_finite(const Variety& Z, uint32_t degree_bound);

} // namespace kklab

#endif
