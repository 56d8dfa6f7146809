#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace kam {

// One named property check inside a suite.  details is empty on success and
// holds the first counterexample otherwise.
struct PropertyResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string details;
    long long millis = 0;
};

struct VerifyOptions {
    uint64_t seed = 20260822;
    int jobs = 1;            // parallel suites for "all"
    long long max_index = -1;   // override the suite's main sweep bound
    long long truncation = -1;  // override the series truncation
};

std::vector<std::string> verify_suite_names();

// name is one of verify_suite_names() or "all"; throws std::invalid_argument
// on an unknown name.  Results come back in a fixed deterministic order.
std::vector<PropertyResult> run_verify_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace kam
