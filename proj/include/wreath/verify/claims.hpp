#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wreath/verify/serialize.hpp"
#include "wreath/verify/workspace.hpp"

namespace wreath::verify {

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

enum class Tier { Default, Extended, Skipped };
std::string tier_name(Tier t);

struct ClaimReport {
    std::string id;
    std::string title;
    Status status = Status::Fail;
    /// "closed-form" when the expected values come from the formula layer,
    /// "independent-check" when they are structural facts checked by a
    /// second computation, "report-only" or "out-of-scope".
    std::string basis;
    /// A claim passes exactly when expected == computed.
    Json expected = Json::object();
    Json computed = Json::object();
    /// Seeds, certificates and other evidence; not compared.
    Json witness = Json::object();
    std::string message;
    /// For skipped claims: the executed claims that cover the computable parts.
    std::vector<std::string> ingredients;
    double runtime_seconds = 0;
};

struct ClaimInfo {
    std::string id;
    std::string title;
    Tier tier = Tier::Default;
    std::string basis;
    std::function<ClaimReport(Workspace&)> run;
    /// skipped claims only
    std::string reason;
    std::vector<std::string> ingredients;
};

/// Every claim, sorted by id.
const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo* find_claim(const std::string& id);

/// Runs one claim, turning exceptions into a failed report. Skipped claims
/// return their skip record.
ClaimReport run_claim(const ClaimInfo& info, Workspace& ws);

/// Runs the claims on `jobs` threads; the result is sorted by id whatever the
/// schedule.
std::vector<ClaimReport> run_claims(const std::vector<const ClaimInfo*>& claims, Workspace& ws, unsigned jobs);

/// The default tier, plus the extended tier when asked, plus the skip records.
std::vector<const ClaimInfo*> select_all(bool extended);

/// Facts about C_{2^n} wr C_2 itself. Throws std::invalid_argument for n < 2.
ClaimReport verify_wreathed_facts(unsigned n);

}  // namespace wreath::verify
