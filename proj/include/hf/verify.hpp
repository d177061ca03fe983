#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hf {

struct VerifyOptions {
    int max_depth = 5;         // caps every determinant size / recurrence index
    std::uint64_t seed = 1;    // randomized suites
    int random_cases = 200;    // per randomized suite
    bool parallel = true;
};

struct IdentityInfo {
    std::string id;
    std::string module;
    std::string description;
};

struct VerifyResult {
    std::string id;
    std::string module;
    bool pass = false;
    double millis = 0.0;
    std::string detail;  // empty on success
};

/// Every identity the suite knows, sorted by id.
const std::vector<IdentityInfo>& verification_catalog();
/// Module names that own at least one identity.
std::vector<std::string> verification_modules();

/// Runs the identities selected by scope: "all", a module name, or an
/// identity id. ParseError for an unknown scope, DomainError if
/// max_depth < 1. Failures are reported, never thrown. Sorted by id.
std::vector<VerifyResult> run_verification(const std::string& scope, const VerifyOptions& options);

}  // namespace hf
