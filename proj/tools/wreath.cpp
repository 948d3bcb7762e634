// wreath: run the verification suite and inspect its fixtures.

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "wreath/rep/hom.hpp"
#include "wreath/rep/loewy.hpp"
#include "wreath/verify/report.hpp"

using namespace wreath;
using namespace wreath::verify;

namespace {

struct Output {
    std::string path;
    std::string format = "json";

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << text;
    }
};

int cmd_verify(const std::string& target, RunConfig cfg, const Output& out) {
    std::vector<const ClaimInfo*> claims;
    std::string tier = cfg.extended ? "extended" : "default";
    if (target == "all") {
        claims = select_all(cfg.extended);
    } else if (const ClaimInfo* c = find_claim(target)) {
        claims = {c};
        tier = "single";
    } else {
        std::cerr << "unknown claim id '" << target << "'; valid ids:\n";
        for (auto& c : claim_registry()) std::cerr << "  " << c.id << "\n";
        return 2;
    }
    Workspace ws(cfg);
    auto reports = run_claims(claims, ws, cfg.jobs);
    if (out.format == "text") out.write(report_text(reports, ws, tier));
    else out.write(report_json(reports, ws, tier).dump(2) + "\n");
    ReportSummary s = summarize(reports);
    if (!s.all_pass()) {
        for (auto& r : reports)
            if (r.status == Status::Fail) std::cerr << "FAIL " << r.id << ": " << r.message << "\n";
    }
    return s.all_pass() ? 0 : 1;
}

int cmd_list(const Output& out) {
    if (out.format == "text") {
        std::string s;
        for (auto& c : claim_registry()) {
            s += c.id + "  [" + tier_name(c.tier) + "]  " + c.title + "\n";
            if (c.tier == Tier::Skipped) {
                s += "    reason: " + c.reason + "\n    covered by:";
                for (auto& i : c.ingredients) s += " " + i;
                s += "\n";
            }
        }
        out.write(s);
        return 0;
    }
    Json j = Json::array();
    for (auto& c : claim_registry()) {
        Json e = {{"id", c.id}, {"tier", tier_name(c.tier)}, {"title", c.title}, {"basis", c.basis}};
        if (c.tier == Tier::Skipped) {
            e["reason"] = c.reason;
            e["ingredients"] = c.ingredients;
        }
        j.push_back(e);
    }
    out.write(j.dump(2) + "\n");
    return 0;
}

int cmd_table(const std::string& family, unsigned q, unsigned n, const RunConfig& cfg, const Output& out) {
    FamilySpec spec{FamilySpec::parse_family(family), n, q};
    spec.validate();
    Workspace ws(cfg);
    const GroupData& g = ws.group(spec);
    const CharacterTable& t = ws.table(spec);
    auto block = principal_block_2(t);
    BlockInvariants inv = block_invariants(t, block);
    if (out.format == "text") {
        std::string s = g.name + ": order " + std::to_string(g.classes.group_order) + ", " +
                        std::to_string(g.classes.count()) + " classes\n";
        s += "degrees:";
        for (auto d : t.degrees()) s += " " + std::to_string(d);
        s += "\nprincipal block: k = " + std::to_string(inv.k) + ", l = " + std::to_string(inv.l) + ", heights";
        for (auto [h, c] : inv.heights) s += " k" + std::to_string(h) + "=" + std::to_string(c);
        s += "\nroot: exponent " + std::to_string(t.root.exponent) + ", prime " + std::to_string(t.root.dixon_prime) +
             ", root " + std::to_string(t.root.dixon_root) + ", GF(2^" + std::to_string(t.root.gf2_degree) + ")\n";
        out.write(s);
        return 0;
    }
    Json j = table_json(t);
    j["group"] = g.name;
    j["family"] = spec_key(spec);
    Json h = Json::object();
    for (auto [k, c] : inv.heights) h[std::to_string(k)] = c;
    j["principal_block"] = {{"k", inv.k}, {"l", inv.l}, {"heights", h}, {"defect", inv.defect}};
    out.write(j.dump(2) + "\n");
    return 0;
}

const std::vector<std::string> kFixtures{"psl3-q5-points", "psl3-q5-flags", "psu3-q3-borel", "psu3-q7-borel"};

int cmd_module(const std::string& name, const RunConfig& cfg, const Output& out) {
    Workspace ws(cfg);
    const GModule* m = nullptr;
    if (name == "psl3-q5-points") m = &ws.linear(5).point_module;
    else if (name == "psl3-q5-flags") m = &ws.linear(5).flag_module;
    else if (name == "psu3-q3-borel") m = &ws.unitary(3).borel_module;
    else if (name == "psu3-q7-borel") m = &ws.unitary(7).borel_module;
    else {
        std::cerr << "unknown fixture '" << name << "'; valid fixtures:\n";
        for (auto& f : kFixtures) std::cerr << "  " << f << "\n";
        return 2;
    }
    const FactorMultiset& fm = ws.chop_cached(name, *m);
    std::vector<GModule> simples;
    for (auto& e : fm.factors) simples.push_back(e.module);
    auto parts = decompose(*m, cfg.seed);
    Json summands = Json::array();
    for (auto& p : parts) {
        LoewyReport lr = loewy(p.module, cfg.seed, &simples);
        Json layers = Json::array();
        for (auto& l : lr.radical_layers) layers.push_back(l.dim);
        summands.push_back({{"dim", p.module.dim()},
                            {"end_dim", p.end_dim},
                            {"certificate", p.certificate},
                            {"witness_seed", p.witness_seed},
                            {"uniserial", lr.uniserial},
                            {"radical_layers", layers}});
    }
    Json gens = Json::array();
    for (auto& g : m->action()) gens.push_back(matrix_json(g));
    Json j = {{"fixture", name},
              {"dim", m->dim()},
              {"seed", cfg.seed},
              {"factors", fm.summary()},
              {"summands", summands},
              {"generators", gens}};
    if (out.format == "text") {
        std::string s = name + ": dim " + std::to_string(m->dim()) + ", factors " + fm.summary() + "\n";
        for (auto& sm : summands) s += "  summand " + sm.at("dim").dump() + " layers " + sm.at("radical_layers").dump() + "\n";
        out.write(s);
    } else {
        out.write(j.dump(2) + "\n");
    }
    return 0;
}

std::optional<unsigned> parse_jobs(const std::string& s) {
    unsigned v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || v == 0 || v > 1024) return std::nullopt;
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Principal 2-blocks with wreathed Sylow 2-subgroups: verification suite"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    Output out;
    app.add_option("--seed", cfg.seed, "seed for every randomized step")->capture_default_str();
    app.add_flag("--extended", cfg.extended, "include the extended tier");
    app.add_option("--cache-dir", cfg.cache_dir, "directory for cached tables and chops")->envname("WREATH_CACHE_DIR");
    // WREATH_JOBS is read by hand: CLI11 skips env values that fail a check
    if (const char* env = std::getenv("WREATH_JOBS")) {
        auto j = parse_jobs(env);
        if (!j) {
            std::cerr << "error: WREATH_JOBS must be a positive integer, got '" << env << "'\n";
            return 2;
        }
        cfg.jobs = *j;
    }
    app.add_option("--jobs", cfg.jobs, "claims run in parallel (env WREATH_JOBS)")->check(CLI::Range(1u, 1024u));
    app.add_flag("--timings", cfg.timings, "add runtimes to the report");
    app.add_option("--enumeration-bound", cfg.enumeration_bound, "largest group enumerated element by element")
        ->capture_default_str();
    app.add_option("-o,--output", out.path, "output file, default stdout");
    app.add_option("--format", out.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    std::string target;
    auto* verify = app.add_subcommand("verify", "run claims: 'all' or one claim id");
    verify->add_option("target", target, "all or a claim id")->required();

    std::string family;
    unsigned q = 0, n = 2;
    auto* table = app.add_subcommand("table", "character table of a family member");
    table->add_option("family", family, "w1 .. w6")->required();
    table->add_option("--q", q, "field size");
    table->add_option("--n", n, "2-exponent")->capture_default_str();

    std::string fixture;
    auto* module = app.add_subcommand("module", "chop, decomposition and layers of a module fixture");
    module->add_option("fixture", fixture, "fixture name")->required();

    auto* list = app.add_subcommand("list-claims", "every claim id with its tier");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage errors share exit code 2 with unknown claim ids
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*verify) return cmd_verify(target, cfg, out);
        if (*list) return cmd_list(out);
        if (*table) return cmd_table(family, q, n, cfg, out);
        if (*module) return cmd_module(fixture, cfg, out);
    } catch (const FamilyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
