#pragma once

#include "wreath/verify/claims.hpp"

namespace wreath::verify {

inline constexpr int kSchemaVersion = 1;

struct ReportSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    bool all_pass() const { return fail == 0; }
};

ReportSummary summarize(const std::vector<ClaimReport>& reports);

Json claim_json(const ClaimReport& r, bool timings);

/// The full report. Keys are sorted and runtimes appear only with timings,
/// so equal runs give byte-identical output.
Json report_json(const std::vector<ClaimReport>& reports, Workspace& ws, const std::string& tier);

/// One line per claim, then details of failures.
std::string report_text(const std::vector<ClaimReport>& reports, Workspace& ws, const std::string& tier);

}  // namespace wreath::verify
