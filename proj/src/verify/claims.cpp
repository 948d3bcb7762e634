#include "wreath/verify/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "wreath/groups/classes.hpp"
#include "wreath/groups/small_group.hpp"
#include "wreath/rep/brauer.hpp"
#include "wreath/rep/hom.hpp"
#include "wreath/rep/loewy.hpp"
#include "wreath/verify/formulas.hpp"

namespace wreath::verify {

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

std::string tier_name(Tier t) {
    switch (t) {
        case Tier::Default: return "default";
        case Tier::Extended: return "extended";
        case Tier::Skipped: return "skipped";
    }
    return "?";
}

namespace {

using formula::pow2;

unsigned log2_exact(std::uint64_t x) {
    unsigned e = 0;
    while ((std::uint64_t{1} << e) < x) ++e;
    return e;
}

bool is_power_of_two(std::uint64_t x) { return x && !(x & (x - 1)); }

Json heights_json(const std::map<unsigned, std::uint64_t>& h) {
    Json j = Json::object();
    for (auto [k, v] : h) j[std::to_string(k)] = v;
    return j;
}

std::vector<std::size_t> layer_dims(const std::vector<Layer>& ls) {
    std::vector<std::size_t> d;
    for (auto& l : ls) d.push_back(l.dim);
    return d;
}

std::vector<GModule> simples_of(const FactorMultiset& f) {
    std::vector<GModule> s;
    for (auto& e : f.factors) s.push_back(e.module);
    return s;
}

std::vector<std::size_t> dims_of(const std::vector<Summand>& parts) {
    std::vector<std::size_t> d;
    for (auto& p : parts) d.push_back(p.module.dim());
    return d;
}

std::vector<std::size_t> dims_of(const FactorMultiset& f) {
    std::vector<std::size_t> d;
    for (auto& e : f.factors)
        for (std::size_t i = 0; i < e.multiplicity; ++i) d.push_back(e.module.dim());
    return d;
}

Json summand_witness(const std::vector<Summand>& parts) {
    Json j = Json::array();
    for (auto& p : parts)
        j.push_back({{"dim", p.module.dim()},
                     {"end_dim", p.end_dim},
                     {"certificate", p.certificate},
                     {"witness_seed", p.witness_seed}});
    return j;
}

void finish(ClaimReport& r) {
    r.status = r.expected == r.computed ? Status::Pass : Status::Fail;
    if (r.status == Status::Pass) return;
    std::string msg;
    for (auto& [k, v] : r.expected.items()) {
        if (r.computed.contains(k) && r.computed[k] == v) continue;
        if (!msg.empty()) msg += "; ";
        msg += k + ": expected " + v.dump() + ", computed " + (r.computed.contains(k) ? r.computed[k].dump() : "nothing");
    }
    r.message = msg;
}

std::string simple_name(std::size_t dim, const std::vector<std::pair<std::uint64_t, std::string>>& names) {
    for (auto& [d, n] : names)
        if (d == dim) return n;
    return "dim" + std::to_string(dim);
}

// ---------------------------------------------------------------------------

ClaimReport blocks_claim(Workspace& ws, const FamilySpec& s) {
    ClaimReport r;
    auto f = formula::principal_block(s.family, s.n);
    const GroupData& g = ws.group(s);
    r.expected = {{"k", f.k},
                  {"l", f.l},
                  {"heights", heights_json(f.heights)},
                  {"census_l", f.l},
                  {"defect", 2 * s.n + 1},
                  {"sylow", GroupModel::wreathed(s.n).name()}};
    const CharacterTable& t = ws.table(s);
    auto block = principal_block_2(t);
    BlockInvariants inv = block_invariants(t, block);
    const SylowData& sd = ws.sylow(s);
    const Census& c = ws.census(s);
    r.computed = {{"k", inv.k},
                  {"l", inv.l},
                  {"heights", heights_json(inv.heights)},
                  {"census_l", c.principal_count},
                  {"defect", inv.defect},
                  {"sylow", iso_to_model(*sd.p, GroupModel::wreathed(s.n)) ? GroupModel::wreathed(s.n).name()
                                                                           : group_signature(*sd.p)}};
    std::vector<std::uint64_t> degrees;
    for (auto x : block) degrees.push_back(t.degree(x));
    Json simples = Json::array();
    for (auto& sm : c.simples)
        simples.push_back({{"dim", sm.module.dim()},
                           {"end_degree", sm.end_degree},
                           {"principal", sm.principal},
                           {"source", sm.source}});
    r.witness = {{"group", g.name},
                 {"group_order", g.classes.group_order},
                 {"classes", g.classes.count()},
                 {"characters", t.size()},
                 {"block_degrees", degrees},
                 {"root_convention", root_json(t.root)},
                 {"census_sources", c.sources},
                 {"census_simples", simples},
                 {"dixon_seed", ws.config().seed},
                 {"chop_seed", ws.config().seed}};
    finish(r);
    return r;
}

ClaimReport wreathed_claim(unsigned n) { return verify_wreathed_facts(n); }

// ---------------------------------------------------------------------------
// PSL3(q)

struct PointSplit {
    const FactorMultiset* factors;
    std::vector<Summand> parts;
    GModule s;
};

PointSplit point_split(Workspace& ws, unsigned q) {
    const LinearFixture& f = ws.linear(q);
    PointSplit p;
    p.factors = &ws.chop_cached("psl3-q" + std::to_string(q) + "-points", f.point_module);
    p.parts = decompose(f.point_module, ws.config().seed);
    for (auto& part : p.parts)
        if (part.module.dim() == formula::linear_point_simple_dim(q)) p.s = part.module;
    if (p.s.dim() == 0) throw ModuleError("point module has no summand of dimension q^2+q");
    return p;
}

FamilySpec linear_spec(unsigned q) { return {Family::W5, log2_exact(two_part(q - 1)), q}; }
FamilySpec unitary_spec(unsigned q) { return {Family::W6, log2_exact(two_part(q + 1)), q}; }

ClaimReport psl3_point(Workspace& ws, unsigned q) {
    ClaimReport r;
    std::uint64_t ds = formula::linear_point_simple_dim(q);
    r.expected = {{"factors", {1, ds}}, {"summands", {1, ds}}, {"s_end_dim", 1}};
    PointSplit p = point_split(ws, q);
    r.computed = {{"factors", dims_of(*p.factors)},
                  {"summands", dims_of(p.parts)},
                  {"s_end_dim", hom_space(p.s, p.s).size()}};
    r.witness = {{"degree", ws.linear(q).point_module.dim()}, {"summands", summand_witness(p.parts)}};
    finish(r);
    return r;
}

ClaimReport psl3_vertex(Workspace& ws, unsigned q) {
    ClaimReport r;
    FamilySpec spec = linear_spec(q);
    GroupModel model = GroupModel::direct(static_cast<unsigned>(pow2(spec.n)), static_cast<unsigned>(pow2(spec.n)));
    r.expected = {{"vertex_order", model.order()}, {"vertex", model.name()}};
    PointSplit p = point_split(ws, q);
    const GroupData& g = ws.group(spec);
    const SylowData& sd = ws.sylow(spec);
    VertexResult v = vertex_of_trivial_source(LocalModule(p.s, sd.p, *g.table, *g.words));
    r.computed = {{"vertex_order", v.vertex.order()},
                  {"vertex", iso_to_model(v.vertex, model) ? model.name() : group_signature(v.vertex)}};
    Json profile = Json::array();
    for (auto [o, d] : v.profile) profile.push_back({{"order", o}, {"brauer_dim", d}});
    r.witness = {{"method", "Brauer construction over all classes of subgroups of a Sylow 2-subgroup"},
                 {"classes_tested", v.classes_tested},
                 {"profile", profile}};
    finish(r);
    return r;
}

ClaimReport psl3_scott_head(Workspace& ws, unsigned q) {
    ClaimReport r;
    // a Scott module has the trivial module in its head, so a nontrivial
    // simple with no map onto k is not one
    r.expected = {{"s_simple", true}, {"s_nontrivial", true}, {"hom_s_k", 0}, {"s_is_scott", false}};
    PointSplit p = point_split(ws, q);
    FactorMultiset fs = chop(p.s, ws.config().seed);
    GModule k = trivial_module(p.s.group_ptr());
    std::size_t hom = hom_space(p.s, k).size();
    r.computed = {{"s_simple", fs.factors.size() == 1 && fs.factors[0].multiplicity == 1},
                  {"s_nontrivial", p.s.dim() > 1},
                  {"hom_s_k", hom},
                  {"s_is_scott", hom != 0}};
    r.witness = {{"s_dim", p.s.dim()}, {"hom_k_s", hom_space(k, p.s).size()}};
    finish(r);
    return r;
}

ClaimReport psl3_flag(Workspace& ws, unsigned q) {
    ClaimReport r;
    std::uint64_t ds = formula::linear_point_simple_dim(q), dt = formula::linear_flag_simple_dim(q);
    auto ul = formula::linear_flag_uniserial_layers(q);
    r.expected = {{"summands", {ds, ds, dt + 2}},
                  {"s_summands_are_s", true},
                  {"hom_flag_s", 2},
                  {"u_uniserial", true},
                  {"u_layers", ul},
                  {"u_layer_names", "k/T/k"},
                  {"u_is_scott", true}};
    const LinearFixture& f = ws.linear(q);
    PointSplit p = point_split(ws, q);
    const FactorMultiset& ff = ws.chop_cached("psl3-q" + std::to_string(q) + "-flags", f.flag_module);
    auto parts = decompose(f.flag_module, ws.config().seed);
    std::sort(parts.begin(), parts.end(), [](const Summand& a, const Summand& b) { return a.module.dim() < b.module.dim(); });
    bool s_ok = true;
    const GModule* u = nullptr;
    for (auto& part : parts) {
        if (part.module.dim() == ds) s_ok = s_ok && isomorphic(part.module, p.s);
        else u = &part.module;
    }
    std::vector<GModule> simples = simples_of(ff);
    r.computed = {{"summands", dims_of(parts)}, {"s_summands_are_s", s_ok}, {"hom_flag_s", hom_space(f.flag_module, p.s).size()}};
    if (u) {
        LoewyReport lr = loewy(*u, ws.config().seed, &simples);
        std::vector<std::string> names;
        for (auto& sm : lr.simples) names.push_back(simple_name(sm.dim(), {{1, "k"}, {ds, "S"}, {dt, "T"}}));
        Summand sc = scott_summand(f.flag_module);
        r.computed["u_uniserial"] = lr.uniserial;
        r.computed["u_layers"] = layer_dims(lr.radical_layers);
        r.computed["u_layer_names"] = lr.radical_string(names);
        r.computed["u_is_scott"] = sc.module.dim() == u->dim() && isomorphic(sc.module, *u);
        r.witness["u_socle_layers"] = layer_dims(lr.socle_layers);
    }
    r.witness["flag_factors"] = ff.summary();
    r.witness["summands"] = summand_witness(parts);
    r.witness["degree"] = f.flag_module.dim();
    finish(r);
    return r;
}

ClaimReport psl3_unipotent(Workspace& ws, unsigned q) {
    ClaimReport r;
    FamilySpec spec = linear_spec(q);
    auto rows = formula::linear_unipotent_rows(q);
    r.expected = Json::object();
    for (auto& fam : rows) r.expected[fam.label] = Json::array({fam.row});
    const GroupData& g = ws.group(spec);
    const CharacterTable& t = ws.table(spec);
    const LinearFixture& f = ws.linear(q);
    const FactorMultiset& ff = ws.chop_cached("psl3-q" + std::to_string(q) + "-flags", f.flag_module);
    std::vector<BrauerCharacter> ibr;
    std::vector<std::string> labels;
    for (auto& e : ff.factors) {
        ibr.push_back(brauer_character(e.module, *g.table, *g.words, t));
        labels.push_back(simple_name(e.module.dim(), {{1, "k"},
                                                      {formula::linear_point_simple_dim(q), "S"},
                                                      {formula::linear_flag_simple_dim(q), "T"}}));
    }
    DecompositionMatrix dm = decomposition_matrix(t, principal_block_2(t), ibr, labels);
    for (auto& fam : rows) {
        Json found = Json::array();
        for (std::size_t i = 0; i < dm.rows.size(); ++i)
            if (t.degree(dm.rows[i]) == fam.degree) found.push_back(dm.entries[i]);
        r.computed[fam.label] = found;
    }
    Json full = Json::array();
    for (std::size_t i = 0; i < dm.rows.size(); ++i) full.push_back({{"degree", t.degree(dm.rows[i])}, {"row", dm.entries[i]}});
    r.witness = {{"columns", labels}, {"block_rows", full}, {"root_convention", root_json(t.root)}};
    finish(r);
    return r;
}

// ---------------------------------------------------------------------------
// PGU3(q)

/// Certificate that X = k_B^G is a summand of k_Q^G for Q <= B of odd index:
/// iota sends the coset Bx to the sum of the Q-cosets inside it, pi sends Qy
/// to By, and pi iota is |B:Q| times the identity.
struct ScottCertificate {
    bool iota_hom = false;
    bool pi_hom = false;
    bool split = false;
    std::size_t induced_dim = 0;
};

ScottCertificate scott_certificate(const UnitaryFixture& u, const GroupData& g, const PermGroup& q) {
    ScottCertificate c;
    CosetAction ca = coset_action(*g.table, q);
    GModule y = perm_module(g.group, ca.action);
    const GModule& x = u.borel_module;
    c.induced_dim = y.dim();
    BitMatrix iota(x.dim(), y.dim()), pi(y.dim(), x.dim());
    for (std::size_t j = 0; j < ca.coset_reps.size(); ++j) {
        Point b = ca.coset_reps[j][u.borel_point];
        iota.set(b, j);
        pi.set(j, b);
    }
    c.iota_hom = c.pi_hom = true;
    for (std::size_t i = 0; i < x.generator_count(); ++i) {
        c.iota_hom = c.iota_hom && mat_mul(x.gen(i), iota) == mat_mul(iota, y.gen(i));
        c.pi_hom = c.pi_hom && mat_mul(y.gen(i), pi) == mat_mul(pi, x.gen(i));
    }
    c.split = mat_mul(iota, pi).is_identity();
    return c;
}

ClaimReport psu3_borel(Workspace& ws, unsigned q) {
    ClaimReport r;
    FamilySpec spec = unitary_spec(q);
    auto layers = formula::unitary_borel_layers(q);
    auto sd = formula::unitary_simple_dims(q);
    r.expected = {{"dim", q * q * q + 1},
                  {"indecomposable", true},
                  {"uniserial", true},
                  {"radical_layers", layers},
                  {"socle_layers", layers},
                  {"layer_names", "k/phi/theta/phi/k"},
                  {"trivial_head", 1},
                  {"is_scott_of_borel", true},
                  {"vertex_order", pow2(spec.n + 1)},
                  {"vertex_cyclic", true}};
    const bool full_group = q == 3;
    if (full_group) r.expected["is_scott_of_q"] = true;

    const UnitaryFixture& u = ws.unitary(q);
    const GModule& x = u.borel_module;
    const FactorMultiset& fm = ws.chop_cached("psu3-q" + std::to_string(q) + "-borel", x);
    std::vector<GModule> simples = simples_of(fm);
    auto parts = decompose(x, ws.config().seed);
    LoewyReport lr = loewy(x, ws.config().seed, &simples);
    std::vector<std::string> names;
    for (auto& sm : lr.simples) names.push_back(simple_name(sm.dim(), {{sd[0], "k"}, {sd[1], "phi"}, {sd[2], "theta"}}));
    Summand sc = scott_summand(x);
    r.computed = {{"dim", x.dim()},
                  {"indecomposable", parts.size() == 1},
                  {"uniserial", lr.uniserial},
                  {"radical_layers", layer_dims(lr.radical_layers)},
                  {"socle_layers", layer_dims(lr.socle_layers)},
                  {"layer_names", lr.radical_string(names)},
                  {"trivial_head", hom_space(x, trivial_module(u.group)).size()},
                  {"is_scott_of_borel", parts.size() == 1 && sc.module.dim() == x.dim()}};
    r.witness = {{"factors", fm.summary()},
                 {"summands", summand_witness(parts)},
                 {"borel_order", u.borel.group.order()},
                 {"borel_variant", u.borel.variant},
                 {"chop_seed", ws.config().seed}};

    if (full_group) {
        const GroupData& g = ws.group(spec);
        const SylowData& syl = ws.sylow(spec);
        VertexResult v = vertex_of_trivial_source(LocalModule(x, syl.p, *g.table, *g.words));
        r.computed["vertex_order"] = v.vertex.order();
        r.computed["vertex_cyclic"] = is_cyclic(v.vertex);
        Json profile = Json::array();
        for (auto [o, d] : v.profile) profile.push_back({{"order", o}, {"brauer_dim", d}});
        r.witness["vertex_method"] = "Brauer construction over all classes of subgroups of a Sylow 2-subgroup";
        r.witness["vertex_profile"] = profile;

        PermGroup qg = sylow_2(ElementTable(u.borel.group));
        ScottCertificate cert = scott_certificate(u, g, qg);
        bool indecomposable = parts.size() == 1;
        bool odd_index = (u.borel.group.order() / qg.order()) % 2 == 1;
        r.computed["is_scott_of_q"] = cert.iota_hom && cert.pi_hom && cert.split && odd_index && indecomposable &&
                                      r.computed["trivial_head"].get<std::size_t>() > 0;
        r.witness["scott_q_certificate"] = {{"q_order", qg.order()},
                                            {"q_cyclic", is_cyclic(qg)},
                                            {"index_b_q", u.borel.group.order() / qg.order()},
                                            {"induced_dim", cert.induced_dim},
                                            {"iota_is_hom", cert.iota_hom},
                                            {"pi_is_hom", cert.pi_hom},
                                            {"iota_pi_identity", cert.split}};
    } else {
        // X = k_B^G is relatively Q-projective for a Sylow 2-subgroup Q of B,
        // so Q is a vertex once the Brauer construction at Q is nonzero
        PermGroup qg = sylow_2(ElementTable(u.borel.group));
        auto qp = std::make_shared<const PermGroup>(qg);
        std::size_t bq = brauer_construction(LocalModule(perm_module(qp)), qg);
        bool odd_index = (u.borel.group.order() / qg.order()) % 2 == 1;
        r.computed["vertex_order"] = (bq > 0 && odd_index) ? qg.order() : 0;
        r.computed["vertex_cyclic"] = is_cyclic(qg);
        r.witness["vertex_method"] = "Brauer construction at a Sylow 2-subgroup of the Borel subgroup";
        r.witness["brauer_dim_at_q"] = bq;
        r.witness["index_b_q"] = u.borel.group.order() / qg.order();
    }
    finish(r);
    return r;
}

struct UnitaryDecomposition {
    const CharacterTable* table;
    DecompositionMatrix dm;
};

UnitaryDecomposition unitary_decomposition(Workspace& ws, unsigned q) {
    FamilySpec spec = unitary_spec(q);
    const GroupData& g = ws.group(spec);
    const CharacterTable& t = ws.table(spec);
    const UnitaryFixture& u = ws.unitary(q);
    const FactorMultiset& fm = ws.chop_cached("psu3-q" + std::to_string(q) + "-borel", u.borel_module);
    auto sd = formula::unitary_simple_dims(q);
    std::vector<BrauerCharacter> ibr;
    std::vector<std::string> labels;
    for (auto& e : fm.factors) {
        ibr.push_back(brauer_character(e.module, *g.table, *g.words, t));
        labels.push_back(simple_name(e.module.dim(), {{sd[0], "k"}, {sd[1], "phi"}, {sd[2], "theta"}}));
    }
    return {&t, decomposition_matrix(t, principal_block_2(t), ibr, labels)};
}

ClaimReport psu3_decomposition(Workspace& ws, unsigned q) {
    ClaimReport r;
    FamilySpec spec = unitary_spec(q);
    auto fams = formula::unitary_decomposition(q, spec.n);
    auto sd = formula::unitary_simple_dims(q);
    Json want = Json::array();
    std::uint64_t total = 0;
    for (auto& f : fams) {
        want.push_back({{"label", f.label}, {"degree", f.degree}, {"row", f.row}, {"count", f.count}});
        total += f.count;
    }
    r.expected = {{"columns", {"k", "phi", "theta"}},
                  {"column_dims", sd},
                  {"rows", want},
                  {"row_count", total},
                  {"unmatched", Json::array()}};
    UnitaryDecomposition ud = unitary_decomposition(ws, q);
    const CharacterTable& t = *ud.table;
    std::map<std::pair<std::uint64_t, std::vector<std::int64_t>>, std::uint64_t> seen;
    for (std::size_t i = 0; i < ud.dm.rows.size(); ++i) ++seen[{t.degree(ud.dm.rows[i]), ud.dm.entries[i]}];
    Json got = Json::array();
    for (auto& f : fams) {
        auto it = seen.find({f.degree, f.row});
        std::uint64_t c = it == seen.end() ? 0 : it->second;
        if (it != seen.end()) seen.erase(it);
        got.push_back({{"label", f.label}, {"degree", f.degree}, {"row", f.row}, {"count", c}});
    }
    Json unmatched = Json::array();
    for (auto& [key, c] : seen) unmatched.push_back({{"degree", key.first}, {"row", key.second}, {"count", c}});
    const UnitaryFixture& u = ws.unitary(q);
    const FactorMultiset& fm = ws.chop_cached("psu3-q" + std::to_string(q) + "-borel", u.borel_module);
    std::vector<std::size_t> cdims;
    for (auto& e : fm.factors) cdims.push_back(e.module.dim());
    r.computed = {{"columns", ud.dm.column_labels},
                  {"column_dims", cdims},
                  {"rows", got},
                  {"row_count", ud.dm.rows.size()},
                  {"unmatched", unmatched}};
    Json full = Json::array();
    for (std::size_t i = 0; i < ud.dm.rows.size(); ++i)
        full.push_back({{"character", ud.dm.rows[i]}, {"degree", t.degree(ud.dm.rows[i])}, {"row", ud.dm.entries[i]}});
    r.witness = {{"matrix", full},
                 {"matching", "rows matched by (degree, row) signature"},
                 {"exact_check", "decomposition times Brauer characters reproduces every row on 2-regular classes"},
                 {"root_convention", root_json(t.root)}};
    finish(r);
    return r;
}

ClaimReport psu3_negativity(Workspace& ws, unsigned q) {
    ClaimReport r;
    FamilySpec spec = unitary_spec(q);
    auto fams = formula::unitary_decomposition(q, spec.n);
    // the characters lifting phi and theta
    std::vector<formula::CharacterFamily> lifts;
    for (auto& f : fams)
        if (f.row == std::vector<std::int64_t>{0, 1, 0} || f.row == std::vector<std::int64_t>{0, 0, 1}) lifts.push_back(f);
    for (auto& f : lifts) r.expected[f.label] = {{"characters", f.count}, {"negative_somewhere", f.count}};
    UnitaryDecomposition ud = unitary_decomposition(ws, q);
    const CharacterTable& t = *ud.table;
    auto twos = two_element_classes(t.classes);
    Json evidence = Json::array();
    for (auto& f : lifts) {
        std::uint64_t chars = 0, negative = 0;
        for (std::size_t i = 0; i < ud.dm.rows.size(); ++i) {
            std::size_t x = ud.dm.rows[i];
            if (t.degree(x) != f.degree || ud.dm.entries[i] != f.row) continue;
            ++chars;
            for (auto c : twos) {
                const Cyclotomic& v = t.values[x][c];
                if (v.is_integer() && v.integer_value() < 0) {
                    ++negative;
                    evidence.push_back({{"character", x},
                                        {"degree", f.degree},
                                        {"class", c},
                                        {"element_order", t.classes.element_orders[c]},
                                        {"value", v.integer_value()}});
                    break;
                }
            }
        }
        r.computed[f.label] = {{"characters", chars}, {"negative_somewhere", negative}};
    }
    r.witness = {{"first_negative_value", evidence}, {"two_element_classes", twos.size()}};
    finish(r);
    return r;
}

// ---------------------------------------------------------------------------

std::size_t involution_classes(const ClassData& cd) {
    std::size_t n = 0;
    for (auto o : cd.element_orders) n += o == 2;
    return n;
}

ClaimReport fusion_claim(Workspace& ws, const FamilySpec& spec, std::uint64_t centralizer_order) {
    ClaimReport r;
    r.expected = {{"involution_classes", 1}, {"centralizer_order", centralizer_order}, {"sylow_of_centralizer_is_p", true}};
    const GroupData& g = ws.group(spec);
    const SylowData& sd = ws.sylow(spec);
    PermGroup c = centralizer(*g.table, sd.embedding.central_involution);
    bool contains = true;
    for (auto& x : sd.p->generators()) contains = contains && c.contains(x);
    r.computed = {{"involution_classes", involution_classes(g.classes)},
                  {"centralizer_order", c.order()},
                  {"sylow_of_centralizer_is_p", contains && two_part(c.order()) == sd.p->order()}};
    r.witness = {{"group", g.name}, {"sylow_order", sd.p->order()}, {"center_of_p", sd.embedding.center_order}};
    finish(r);
    return r;
}

ClaimReport fusion_report_only(Workspace& ws, const FamilySpec& spec) {
    ClaimReport r;
    const GroupData& g = ws.group(spec);
    r.witness = {{"group", g.name}, {"involution_classes", involution_classes(g.classes)}};
    finish(r);
    r.message = "report only: " + std::to_string(involution_classes(g.classes)) + " classes of involutions";
    return r;
}

ClaimReport indices_claim(unsigned q) {
    ClaimReport r;
    formula::IndexChain c = formula::index_chain(q);
    r.expected = {{"top_index", c.top}, {"bottom_index", c.bottom}, {"special_orders_equal", true}};
    Classical big = c.unitary ? Classical::GU2 : Classical::GL2;
    Classical mid = c.unitary ? Classical::SU2t : Classical::SL2t;
    std::uint64_t ob = classical_group(big, q).group.order();
    std::uint64_t om = classical_group(mid, q, c.n).group.order();
    std::uint64_t os = classical_group(mid, q, 0).group.order();
    std::uint64_t sl = classical_group(Classical::SL2t, q, 0).group.order();
    std::uint64_t su = classical_group(Classical::SU2t, q, 0).group.order();
    r.computed = {{"top_index", ob % om ? 0 : ob / om}, {"bottom_index", om % os ? 0 : om / os}, {"special_orders_equal", sl == su}};
    r.witness = {{"side", c.unitary ? "unitary" : "linear"},
                 {"n", c.n},
                 {"orders", {{"full", ob}, {"intermediate", om}, {"special", os}, {"sl2", sl}, {"su2", su}}},
                 {"method", "orders of the permutation groups on nonzero vectors, by stabilizer chains"}};
    finish(r);
    return r;
}

// ---------------------------------------------------------------------------

ClaimInfo make(std::string id, std::string title, Tier tier, std::string basis, std::function<ClaimReport(Workspace&)> run) {
    ClaimInfo c;
    c.id = std::move(id);
    c.title = std::move(title);
    c.tier = tier;
    c.basis = std::move(basis);
    c.run = std::move(run);
    return c;
}

ClaimInfo skip(std::string id, std::string title, std::string reason, std::vector<std::string> ingredients) {
    ClaimInfo c;
    c.id = std::move(id);
    c.title = std::move(title);
    c.tier = Tier::Skipped;
    c.basis = "out-of-scope";
    c.reason = std::move(reason);
    c.ingredients = std::move(ingredients);
    return c;
}

std::vector<ClaimInfo> build_registry() {
    std::vector<ClaimInfo> c;
    const std::string cf = "closed-form", ic = "independent-check";
    auto blocks = [&](FamilySpec s, const std::string& id, Tier tier) {
        c.push_back(make(id, "principal 2-block invariants of " + s.group_name(), tier, cf,
                         [s](Workspace& ws) { return blocks_claim(ws, s); }));
    };
    blocks({Family::W1, 2, 0}, "blocks/w1/n2", Tier::Default);
    blocks({Family::W1, 3, 0}, "blocks/w1/n3", Tier::Default);
    blocks({Family::W2, 2, 0}, "blocks/w2/n2", Tier::Default);
    blocks({Family::W3, 2, 5}, "blocks/w3/q5", Tier::Extended);
    blocks({Family::W4, 2, 3}, "blocks/w4/q3", Tier::Default);
    blocks({Family::W4, 3, 7}, "blocks/w4/q7", Tier::Extended);
    blocks({Family::W5, 2, 5}, "blocks/w5/q5", Tier::Extended);
    blocks({Family::W6, 2, 3}, "blocks/w6/q3", Tier::Default);

    for (unsigned n : {2U, 3U})
        c.push_back(make("wreathed/n" + std::to_string(n), "structure of C" + std::to_string(pow2(n)) + " wr C2",
                         Tier::Default, cf, [n](Workspace&) { return wreathed_claim(n); }));

    c.push_back(make("psl3/q5/point-module", "points of PSL3(5) split as k + S", Tier::Default, cf,
                     [](Workspace& ws) { return psl3_point(ws, 5); }));
    c.push_back(make("psl3/q5/vertex", "vertex of S for PSL3(5)", Tier::Default, cf,
                     [](Workspace& ws) { return psl3_vertex(ws, 5); }));
    c.push_back(make("psl3/q5/scott-head", "S for PSL3(5) is not the Scott module of its vertex", Tier::Default, ic,
                     [](Workspace& ws) { return psl3_scott_head(ws, 5); }));
    c.push_back(make("psl3/q5/flag-module", "flags of PSL3(5) split as S + S + U with U uniserial", Tier::Default, cf,
                     [](Workspace& ws) { return psl3_flag(ws, 5); }));
    c.push_back(make("psl3/q5/unipotent-rows", "unipotent rows of the 2-decomposition matrix of PSL3(5)", Tier::Extended,
                     cf, [](Workspace& ws) { return psl3_unipotent(ws, 5); }));

    c.push_back(make("psu3/q3/borel-module", "permutation module on the Borel cosets of PSU3(3)", Tier::Default, cf,
                     [](Workspace& ws) { return psu3_borel(ws, 3); }));
    c.push_back(make("psu3/q3/decomposition", "2-decomposition matrix of the principal block of PSU3(3)", Tier::Default,
                     cf, [](Workspace& ws) { return psu3_decomposition(ws, 3); }));
    c.push_back(make("psu3/q3/negativity", "lifts of phi and theta are negative on some 2-element", Tier::Default, ic,
                     [](Workspace& ws) { return psu3_negativity(ws, 3); }));
    c.push_back(make("psu3/q7/borel-module", "permutation module on the Borel cosets of PSU3(7)", Tier::Extended, cf,
                     [](Workspace& ws) { return psu3_borel(ws, 7); }));

    c.push_back(make("fusion/psu3/q3", "involution fusion in PSU3(3)", Tier::Default, cf, [](Workspace& ws) {
        return fusion_claim(ws, unitary_spec(3), formula::unitary_involution_centralizer(3));
    }));
    c.push_back(make("fusion/psl3/q5", "involution fusion in PSL3(5)", Tier::Default, cf, [](Workspace& ws) {
        return fusion_claim(ws, linear_spec(5), formula::linear_involution_centralizer(5));
    }));
    c.push_back(make("fusion/gl2/q5", "involution classes of GL2(5)", Tier::Default, "report-only",
                     [](Workspace& ws) { return fusion_report_only(ws, {Family::W3, 2, 5}); }));

    for (unsigned q : {3U, 5U, 7U})
        c.push_back(make("indices/q" + std::to_string(q), "normal subgroup indices of the 2x2 groups at q = " + std::to_string(q),
                         Tier::Default, cf, [q](Workspace&) { return indices_claim(q); }));

    const std::vector<std::string> all_blocks{"blocks/w1/n2", "blocks/w1/n3", "blocks/w2/n2", "blocks/w3/q5",
                                              "blocks/w4/q3", "blocks/w4/q7", "blocks/w5/q5", "blocks/w6/q3"};
    c.push_back(skip("equivalence/classification",
                     "the principal block is splendidly Morita equivalent to that of exactly one family W1-W6",
                     "needs p-permutation bimodules over G x G'; the invariants that separate the families are checked",
                     [&] {
                         auto v = all_blocks;
                         v.insert(v.end(), {"wreathed/n2", "wreathed/n3"});
                         return v;
                     }()));
    c.push_back(skip("equivalence/scott-bimodule", "the equivalence is induced by Sc(G x G', Delta P)",
                     "the Scott module of G x G' is beyond the dimension ceiling; its one-sided ingredients are checked",
                     {"fusion/psl3/q5", "fusion/psu3/q3", "psl3/q5/flag-module", "psu3/q3/borel-module"}));
    c.push_back(skip("equivalence/within-family",
                     "groups in one family W3-W6 with the same n have splendidly Morita equivalent principal blocks",
                     "needs bimodules between two groups; matching invariants within families are checked",
                     {"blocks/w3/q5", "blocks/w4/q3", "blocks/w4/q7", "indices/q3", "indices/q5", "indices/q7"}));
    c.push_back(skip("equivalence/morita-classes", "Morita and splendid Morita classification coincide",
                     "a statement about all Morita equivalences; not computable", all_blocks));
    c.push_back(skip("equivalence/finiteness", "finitely many splendid Morita classes for each n",
                     "follows from the classification; not computable", all_blocks));
    c.push_back(skip("psu3/borel-ext-omega", "Ext groups and Heller translates around the Borel module",
                     "needs projective covers over the group algebra", {"psu3/q3/borel-module", "psu3/q3/decomposition"}));
    c.push_back(skip("psu3/borel-quotient-shape",
                     "shape of the quotient of the Heller translate: uniserial phi over k or split k + phi",
                     "unresolved in general and needs the second Heller translate of k; deliberately not decided",
                     {"psu3/q3/borel-module"}));

    std::sort(c.begin(), c.end(), [](const ClaimInfo& a, const ClaimInfo& b) { return a.id < b.id; });
    return c;
}

}  // namespace

ClaimReport verify_wreathed_facts(unsigned n) {
    if (n < 2) throw std::invalid_argument("wreathed facts need n >= 2, got n = " + std::to_string(n));
    ClaimReport r;
    formula::WreathedFacts f = formula::wreathed_facts(n);
    r.expected = {{"order", f.order},
                  {"two_rank", f.two_rank},
                  {"aut_is_2group", true},
                  {"center_order", f.center_order},
                  {"quotient_order", f.dihedral_quotient},
                  {"quotient_dihedral", true}};
    PermGroup p = wreathed(n);
    std::uint64_t aut = automorphism_order(p);
    PermGroup z = center(ElementTable(p));
    PermGroup quo = quotient_group(p, z);
    r.computed = {{"order", p.order()},
                  {"two_rank", two_rank(p)},
                  {"aut_is_2group", is_power_of_two(aut)},
                  {"center_order", z.order()},
                  {"quotient_order", quo.order()},
                  {"quotient_dihedral", iso_to_model(quo, GroupModel::dihedral(static_cast<unsigned>(f.dihedral_quotient))).has_value()}};
    r.witness = {{"aut_order", aut}, {"group", GroupModel::wreathed(n).name()}};
    finish(r);
    return r;
}

const std::vector<ClaimInfo>& claim_registry() {
    static const std::vector<ClaimInfo> reg = build_registry();
    return reg;
}

const ClaimInfo* find_claim(const std::string& id) {
    for (auto& c : claim_registry())
        if (c.id == id) return &c;
    return nullptr;
}

ClaimReport run_claim(const ClaimInfo& info, Workspace& ws) {
    ClaimReport r;
    auto t0 = std::chrono::steady_clock::now();
    if (info.tier == Tier::Skipped) {
        r.status = Status::Skipped;
        r.message = info.reason;
        r.ingredients = info.ingredients;
    } else {
        try {
            r = info.run(ws);
        } catch (const std::exception& e) {
            r = ClaimReport{};
            r.status = Status::Fail;
            r.message = std::string("computation failed: ") + e.what();
        }
    }
    r.id = info.id;
    r.title = info.title;
    r.basis = info.basis;
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<ClaimReport> run_claims(const std::vector<const ClaimInfo*>& claims, Workspace& ws, unsigned jobs) {
    std::vector<ClaimReport> out(claims.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < claims.size();) out[i] = run_claim(*claims[i], ws);
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(claims.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(out.begin(), out.end(), [](const ClaimReport& a, const ClaimReport& b) { return a.id < b.id; });
    return out;
}

std::vector<const ClaimInfo*> select_all(bool extended) {
    std::vector<const ClaimInfo*> out;
    for (auto& c : claim_registry())
        if (c.tier != Tier::Extended || extended) out.push_back(&c);
    return out;
}

}  // namespace wreath::verify
