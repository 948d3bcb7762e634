// Acceptance run: one PASS/FAIL line per criterion on stdout, details of
// failures on stderr. The values checked here are pinned in this file and do
// not come from the claims' own expected fields.
//
// usage: acceptance <path to the wreath CLI>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "properties.hpp"
#include "wreath/verify/claims.hpp"
#include "wreath/verify/report.hpp"

using namespace wreath;
using namespace wreath::verify;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    bool ok = true;
    std::vector<std::string> problems;
    double seconds = 0;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            problems.push_back(what);
        }
    }
};

int failures = 0;

void finish(Criterion& c) {
    if (c.budget_seconds > 0) {
        std::ostringstream b;
        b << "runtime " << c.seconds << " s over the " << c.budget_seconds << " s budget";
        c.check(c.seconds < c.budget_seconds, b.str());
    }
    std::ostringstream line;
    line.precision(3);
    line << (c.ok ? "PASS" : "FAIL") << "  " << c.number << "  " << c.title << "  (" << c.seconds << " s";
    if (c.budget_seconds > 0) line << ", budget " << c.budget_seconds << " s";
    line << ")";
    std::cout << line.str() << std::endl;
    for (auto& p : c.problems) std::cerr << "  criterion " << c.number << ": " << p << "\n";
    if (!c.ok) ++failures;
}

template <class F>
void timed(Criterion& c, F&& body) {
    auto t0 = Clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        c.check(false, std::string("exception: ") + e.what());
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    finish(c);
}

/// Runs claims in a fresh workspace so each criterion pays for its own
/// computations.
std::map<std::string, ClaimReport> run(Criterion& c, const std::vector<std::string>& ids) {
    Workspace ws(RunConfig{});
    std::map<std::string, ClaimReport> out;
    for (auto& id : ids) {
        const ClaimInfo* info = find_claim(id);
        c.check(info != nullptr, "missing claim " + id);
        if (!info) continue;
        ClaimReport r = run_claim(*info, ws);
        c.check(r.status == Status::Pass, id + " did not pass: " + r.message);
        out[id] = std::move(r);
    }
    return out;
}

/// Every key of `want` must appear in `got` with an equal value.
void expect_fields(Criterion& c, const std::string& id, const Json& got, const Json& want) {
    for (auto& [k, v] : want.items()) {
        if (!got.contains(k)) c.check(false, id + ": no field " + k);
        else c.check(got[k] == v, id + ": " + k + " is " + got[k].dump() + ", want " + v.dump());
    }
}

Json counts(std::uint64_t k, std::uint64_t l, std::map<std::string, std::uint64_t> heights) {
    Json h = Json::object();
    for (auto& [i, m] : heights) h[i] = m;
    return {{"k", k}, {"l", l}, {"heights", h}};
}

void criterion_default_counts() {
    Criterion c{1, "block counts, default tier", 60};
    timed(c, [&] {
        Workspace ws(RunConfig{});
        auto reports = run_claims(select_all(false), ws, 1);
        std::map<std::string, const ClaimReport*> by_id;
        for (auto& r : reports) {
            by_id[r.id] = &r;
            c.check(r.status != Status::Fail, r.id + " failed: " + r.message);
        }
        std::map<std::string, Json> want{
            {"blocks/w1/n2", counts(14, 1, {{"0", 8}, {"1", 6}})},
            {"blocks/w2/n2", counts(10, 2, {{"0", 8}, {"1", 2}})},
            {"blocks/w4/q3", counts(16, 2, {{"0", 8}, {"1", 6}, {"2", 2}})},
            {"blocks/w6/q3", counts(12, 3, {{"0", 8}, {"1", 2}, {"2", 2}})},
        };
        for (auto& [id, w] : want) {
            c.check(by_id.count(id) == 1, "missing " + id);
            if (by_id.count(id)) expect_fields(c, id, by_id[id]->computed, w);
        }
        c.check(ws.group({Family::W4, 2, 3}).group->order() == 96, "GU2(3) order");
        c.check(ws.group({Family::W6, 2, 3}).group->order() == 6048, "PSU3(3) order");
    });
}

void criterion_extended_counts() {
    Criterion c{2, "block counts, extended tier", 15 * 60};
    timed(c, [&] {
        auto r = run(c, {"blocks/w3/q5", "blocks/w5/q5", "blocks/w4/q7"});
        Workspace ws(RunConfig{});
        c.check(ws.group({Family::W3, 2, 5}).group->order() == 480, "W3 at q=5 is not of the order of GL2(5)");
        expect_fields(c, "blocks/w3/q5", r["blocks/w3/q5"].computed, counts(16, 2, {{"0", 8}, {"1", 6}, {"2", 2}}));
        expect_fields(c, "blocks/w5/q5", r["blocks/w5/q5"].computed, counts(12, 3, {{"0", 8}, {"1", 2}, {"2", 2}}));
        const Json& w7 = r["blocks/w4/q7"].computed;
        expect_fields(c, "blocks/w4/q7", w7, {{"k", 48}, {"l", 2}});
        c.check(w7.contains("heights") && w7["heights"].value("0", 0) == 16, "blocks/w4/q7: k0 != 16");
        expect_fields(c, "blocks/w4/q7", w7, {{"sylow", "C8 wr C2"}});
    });
}

void criterion_psl3() {
    Criterion c{3, "PSL3(5) point and flag modules", 5 * 60};
    timed(c, [&] {
        auto r = run(c, {"psl3/q5/point-module", "psl3/q5/flag-module", "psl3/q5/vertex", "psl3/q5/scott-head"});
        expect_fields(c, "point", r["psl3/q5/point-module"].computed, {{"factors", {1, 30}}});
        expect_fields(c, "flag", r["psl3/q5/flag-module"].computed,
                      {{"summands", {30, 30, 126}}, {"s_summands_are_s", true}, {"u_uniserial", true}, {"u_layers", {1, 124, 1}}});
        expect_fields(c, "vertex", r["psl3/q5/vertex"].computed, {{"vertex", "C4 x C4"}, {"vertex_order", 16}});
        expect_fields(c, "scott", r["psl3/q5/scott-head"].computed, {{"s_is_scott", false}});
    });
}

void criterion_borel() {
    Criterion c{4, "PSU3(3) Borel module", 60};
    timed(c, [&] {
        auto r = run(c, {"psu3/q3/borel-module"});
        expect_fields(c, "borel", r["psu3/q3/borel-module"].computed,
                      {{"dim", 28},
                       {"indecomposable", true},
                       {"uniserial", true},
                       {"radical_layers", {1, 6, 14, 6, 1}},
                       {"vertex_order", 8},
                       {"vertex_cyclic", true},
                       {"is_scott_of_borel", true},
                       {"is_scott_of_q", true}});
    });
}

void criterion_decomposition() {
    Criterion c{5, "PSU3(3) decomposition matrix", 120};
    timed(c, [&] {
        auto r = run(c, {"psu3/q3/decomposition"});
        const Json& got = r["psu3/q3/decomposition"].computed;
        // (degree, row, multiplicity)
        std::vector<std::tuple<int, std::vector<int>, int>> want{
            {1, {1, 0, 0}, 1}, {6, {0, 1, 0}, 1},   {27, {1, 2, 1}, 1}, {7, {1, 1, 0}, 3},
            {21, {1, 1, 1}, 3}, {14, {0, 0, 1}, 1}, {28, {2, 2, 1}, 2},
        };
        expect_fields(c, "decomposition", got, {{"row_count", 12}, {"column_dims", {1, 6, 14}}, {"unmatched", Json::array()}});
        c.check(got.contains("rows") && got["rows"].size() == want.size(), "wrong number of row families");
        int total = 0;
        for (std::size_t i = 0; i < want.size() && got.contains("rows") && i < got["rows"].size(); ++i) {
            auto& [deg, row, mult] = want[i];
            const Json& g = got["rows"][i];
            c.check(g["degree"] == deg && g["row"] == Json(row) && g["count"] == mult, "row family " + g.dump());
            total += mult;
        }
        c.check(total == 12, "multiplicities do not sum to 12");
    });
}

void criterion_negativity() {
    Criterion c{6, "negative values on 2-elements of PSU3(3)", 120};
    timed(c, [&] {
        auto r = run(c, {"psu3/q3/negativity"});
        const Json& got = r["psu3/q3/negativity"].computed;
        for (const char* label : {"q(q-1)", "(q-1)(q^2-q+1)"}) {
            c.check(got.contains(label), std::string("no entry for ") + label);
            if (got.contains(label))
                c.check(got[label]["characters"] >= 1 && got[label]["negative_somewhere"] == got[label]["characters"],
                        std::string(label) + ": " + got[label].dump());
        }
    });
}

void criterion_fusion() {
    Criterion c{7, "fusion and index ratios", 120};
    timed(c, [&] {
        auto r = run(c, {"fusion/psu3/q3", "fusion/psl3/q5", "indices/q3", "indices/q5", "indices/q7"});
        expect_fields(c, "psu3", r["fusion/psu3/q3"].computed,
                      {{"involution_classes", 1}, {"centralizer_order", 96}, {"sylow_of_centralizer_is_p", true}});
        expect_fields(c, "psl3", r["fusion/psl3/q5"].computed, {{"involution_classes", 1}});
        expect_fields(c, "q3", r["indices/q3"].computed, {{"top_index", 1}, {"bottom_index", 4}, {"special_orders_equal", true}});
        expect_fields(c, "q5", r["indices/q5"].computed, {{"top_index", 1}, {"bottom_index", 4}, {"special_orders_equal", true}});
        expect_fields(c, "q7", r["indices/q7"].computed, {{"top_index", 1}, {"bottom_index", 8}, {"special_orders_equal", true}});
    });
}

void criterion_properties() {
    Criterion c{8, "property suites", 0};
    timed(c, [&] {
        auto results = property::all_kernel();
        for (auto& r : results) c.check(r.instances >= 200, r.name + ": only " + std::to_string(r.instances) + " instances");
        for (auto& r : property::all_structural()) results.push_back(r);
        std::size_t instances = 0;
        for (auto& r : results) {
            instances += r.instances;
            c.check(r.ok(), r.name + ": " + std::to_string(r.failures) + " failures, first: " + r.first_failure);
            std::cerr << "  " << r.name << ": " << r.instances << " instances, " << r.failures << " failures\n";
        }
        c.title += " (" + std::to_string(results.size()) + " suites, " + std::to_string(instances) + " instances)";
    });
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), {});
}

void criterion_determinism(const std::string& cli) {
    Criterion c{9, "verify all twice gives byte-identical JSON", 0};
    timed(c, [&] {
        fs::path dir = fs::temp_directory_path() / ("wreath-acceptance-" + std::to_string(std::random_device{}()));
        fs::create_directories(dir);
        std::vector<std::string> outs;
        for (int i = 0; i < 2; ++i) {
            fs::path f = dir / ("run" + std::to_string(i) + ".json");
            std::string cmd = "'" + cli + "' --seed 0 -o '" + f.string() + "' verify all";
            int st = std::system(cmd.c_str());
            c.check(WIFEXITED(st) && WEXITSTATUS(st) == 0, "run " + std::to_string(i) + " exited with status " + std::to_string(st));
            outs.push_back(slurp(f));
        }
        c.check(!outs[0].empty(), "empty report");
        c.check(outs[0] == outs[1], "reports differ");
        fs::remove_all(dir);
    });
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <wreath CLI>\n";
        return 2;
    }
    criterion_default_counts();
    criterion_extended_counts();
    criterion_psl3();
    criterion_borel();
    criterion_decomposition();
    criterion_negativity();
    criterion_fusion();
    criterion_properties();
    criterion_determinism(argv[1]);
    return failures == 0 ? 0 : 1;
}
