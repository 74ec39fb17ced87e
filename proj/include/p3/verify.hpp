#pragma once

// Replays every published numeric claim about rank-3 instantons of small
// charge against the library and records a verdict per claim.

#include <string>
#include <vector>

#include <json.hpp>

namespace p3 {

struct ClaimResult {
    std::string id;
    std::string anchor;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<ClaimResult> claims;

    bool all_passed() const;
    std::vector<const ClaimResult*> failures() const;
};

/// Claim identifiers in execution order.
std::vector<std::string> claim_ids();

/// Runs every claim. Exceptions thrown by a claim count as failures.
VerificationReport run_verification();

nlohmann::json to_json(const VerificationReport& report);
std::string format_report_text(const VerificationReport& report);

} // namespace p3
