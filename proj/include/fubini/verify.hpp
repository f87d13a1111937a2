#ifndef FUBINI_VERIFY_HPP
#define FUBINI_VERIFY_HPP

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fubini {

/// Findings report on claims whose side conditions are ambiguous; they never
/// make a run fail.
enum class SuiteStatus { Pass, Fail, Finding, Skipped };
std::string to_string(SuiteStatus status);

struct SuiteResult {
    std::string name;
    SuiteStatus status = SuiteStatus::Pass;
    std::string summary;
    nlohmann::json details = nlohmann::json::object();
};

struct VerifyOptions {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 1;
    int trials = 20;
    std::size_t budget = 20000;
    /// Empty means every suite.
    std::vector<std::string> suites;
};

struct VerifyReport {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<SuiteResult> suites;

    /// True when a suite that is not a finding suite failed.
    [[nodiscard]] bool any_failure() const;
    [[nodiscard]] const SuiteResult* find(const std::string& name) const;
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Every suite name in execution order.
const std::vector<std::string>& suite_names();
/// Suites whose outcome is reported as a finding.
bool is_finding_suite(const std::string& name);

VerifyReport verify_suite(const VerifyOptions& opts);

} // namespace fubini

#endif
