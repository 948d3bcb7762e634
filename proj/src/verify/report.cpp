#include "wreath/verify/report.hpp"

#include <cstdio>
#include <sstream>

#include "wreath/families/families.hpp"

namespace wreath::verify {

ReportSummary summarize(const std::vector<ClaimReport>& reports) {
    ReportSummary s;
    for (auto& r : reports) {
        if (r.status == Status::Pass) ++s.pass;
        else if (r.status == Status::Fail) ++s.fail;
        else ++s.skipped;
    }
    return s;
}

Json claim_json(const ClaimReport& r, bool timings) {
    Json j = {{"id", r.id},
              {"title", r.title},
              {"status", status_name(r.status)},
              {"basis", r.basis},
              {"expected", r.expected},
              {"computed", r.computed},
              {"witness", r.witness},
              {"message", r.message}};
    if (r.status == Status::Skipped) j["ingredients"] = r.ingredients;
    if (timings) j["runtime_seconds"] = r.runtime_seconds;
    return j;
}

Json report_json(const std::vector<ClaimReport>& reports, Workspace& ws, const std::string& tier) {
    const RunConfig& cfg = ws.config();
    Json claims = Json::array();
    for (auto& r : reports) claims.push_back(claim_json(r, cfg.timings));
    Json roots = Json::object();
    for (auto& [name, rc] : ws.root_conventions()) roots[name] = root_json(rc);
    Json variants = Json::object();
    for (auto& [q, v] : ws.borel_variants()) variants["q" + std::to_string(q)] = v;
    ReportSummary s = summarize(reports);
    Json j = {{"schema_version", kSchemaVersion},
              {"seed", cfg.seed},
              {"tier", tier},
              {"enumeration_bound", cfg.enumeration_bound},
              {"root_conventions", roots},
              {"unipotent_variants", variants},
              {"claims", claims},
              {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}, {"total", reports.size()}}}};
    if (cfg.timings) {
        double total = 0;
        for (auto& r : reports) total += r.runtime_seconds;
        CacheStats cs = ws.cache_stats();
        j["timings"] = {{"claims_seconds", total},
                        {"cache", {{"hits", cs.hits}, {"misses", cs.misses}, {"rejected", cs.rejected}}}};
    }
    return j;
}

std::string report_text(const std::vector<ClaimReport>& reports, Workspace& ws, const std::string& tier) {
    std::ostringstream out;
    out << "seed " << ws.config().seed << ", tier " << tier << "\n";
    for (auto& r : reports) {
        char line[256];
        std::snprintf(line, sizeof line, "%-8s %-28s %s", status_name(r.status).c_str(), r.id.c_str(), r.title.c_str());
        out << line;
        if (ws.config().timings && r.status != Status::Skipped) out << "  (" << r.runtime_seconds << " s)";
        out << "\n";
        if (r.status == Status::Fail) out << "         " << r.message << "\n";
    }
    ReportSummary s = summarize(reports);
    out << s.pass << " passed, " << s.fail << " failed, " << s.skipped << " skipped\n";
    return out.str();
}

}  // namespace wreath::verify
