#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace delseq {

struct SuiteReport {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages;       // first few failures
    std::vector<std::string> observations;   // reported findings, never failures

    bool ok() const noexcept { return failures == 0; }
};

struct SuiteInfo {
    std::string name;
    std::string description;
};

/// Names and one-line descriptions of every suite, in run order.
const std::vector<SuiteInfo>& verification_suites();

/// Runs one suite with exhaustive sizes bounded by max_n. Throws DomainError for unknown names.
SuiteReport run_suite(const std::string& name, std::size_t max_n);

/// Runs every suite.
std::vector<SuiteReport> run_all_suites(std::size_t max_n);

}  // namespace delseq
