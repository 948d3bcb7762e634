#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wreath/groups/small_group.hpp"
#include "wreath/rep/brauer.hpp"
#include "wreath/rep/loewy.hpp"

using namespace wreath;

namespace {

PermGroup sym(std::size_t n) {
    std::vector<Point> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
    return PermGroup(n, {Permutation(c), Permutation::from_cycles(n, {{0, 1}})});
}

PermGroup alt5() { return PermGroup(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{0, 1, 2}})}); }

PermGroup l32() {
    return PermGroup(7, {Permutation::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}), Permutation::from_cycles(7, {{1, 2}, {3, 6}})});
}

GModule on_cosets(const fixture::Small& s, const PermGroup& h) {
    return perm_module(s.group, coset_action(*s.table, h).action);
}

BitVec random_vec(std::size_t d, std::mt19937_64& rng) {
    BitVec v(words_for(d), 0);
    for (std::size_t i = 0; i < d; ++i)
        if (rng() & 1U) bits::set(v, i);
    return v;
}

std::vector<std::size_t> layer_dims(const std::vector<Layer>& ls) {
    std::vector<std::size_t> out;
    for (auto& l : ls) out.push_back(l.dim);
    return out;
}

}  // namespace

TEST(Module, PermutationModules) {
    auto s = fixture::small(sym(4));
    EXPECT_EQ(s.perm.dim(), 4u);
    EXPECT_TRUE(s.perm.has_perm_basis());
    GModule k = trivial_module(s.group);
    EXPECT_EQ(k.dim(), 1u);
    std::mt19937_64 rng(1);
    EXPECT_TRUE(verify_relations(s.perm, *s.table, *s.words, rng));
    EXPECT_EQ(fixture::psl35().point_module.dim(), 31u);
    EXPECT_EQ(fixture::psu33().borel_module.dim(), 28u);
    EXPECT_EQ(fixture::psl35().flag_module.dim(), 186u);
    auto& f = fixture::psu33();
    EXPECT_TRUE(verify_relations(f.borel_module, *f.table, *f.words, rng));
    // a corrupted generator breaks the relations
    std::vector<BitMatrix> bad = f.borel_module.action();
    bad[0] = bad[0] * bad[1];
    GModule broken(f.group, bad);
    EXPECT_FALSE(verify_relations(broken, *f.table, *f.words, rng));
    EXPECT_THROW(GModule(f.group, {}), ModuleError);
}

TEST(Module, SpinAndSubquotients) {
    auto& m = fixture::psu33().borel_module;
    BitVec ones(words_for(28), 0), zero(words_for(28), 0);
    for (std::size_t i = 0; i < 28; ++i) bits::set(ones, i);
    EXPECT_EQ(spin(m, {ones}).dim(), 1u);
    EXPECT_EQ(spin(m, {zero}).dim(), 0u);
    // every cyclic submodule of the uniserial module is a radical-series term
    std::mt19937_64 rng(7);
    for (int k = 0; k < 40; ++k) {
        BitVec v = random_vec(28, rng);
        if (bits::is_zero(v)) continue;
        std::size_t d = spin(m, {v}).dim();
        EXPECT_TRUE(d == 1 || d == 7 || d == 21 || d == 27 || d == 28) << d;
    }
    EchelonBasis sub = spin(m, {ones});
    EXPECT_TRUE(is_submodule(m, sub.matrix()));
    GModule q = quotient(m, sub);
    EXPECT_EQ(q.dim(), 27u);
    std::mt19937_64 r2(3);
    EXPECT_TRUE(verify_relations(q, *fixture::psu33().table, *fixture::psu33().words, r2));
    BitVec v = random_vec(28, rng);
    EXPECT_EQ(project_to_quotient(sub, lift_from_quotient(sub, project_to_quotient(sub, v))), project_to_quotient(sub, v));
}

TEST(Module, DualAndSums) {
    auto& m = fixture::psu33().borel_module;
    GModule dd = dual(dual(m));
    for (std::size_t s = 0; s < m.generator_count(); ++s) EXPECT_EQ(dd.gen(s), m.gen(s));
    EXPECT_TRUE(isomorphic(dual(m), m));
    GModule k = trivial_module(fixture::psu33().group);
    GModule kk = direct_sum(k, k);
    EXPECT_EQ(end_ring(kk).dim(), 4u);
    EXPECT_EQ(end_ring(k).dim(), 1u);
}

TEST(Hom, MatchesNaiveSolver) {
    // random submodules and quotients of small permutation modules
    std::mt19937_64 rng(11);
    std::vector<fixture::Small> groups{fixture::small(sym(4)), fixture::small(alt5()), fixture::small(l32())};
    int checked = 0;
    for (int inst = 0; inst < 60; ++inst) {
        auto& s = groups[inst % groups.size()];
        GModule base = s.perm;
        if (inst % 2 == 1) base = direct_sum(s.perm, trivial_module(s.group));
        auto pick = [&](const GModule& m) {
            BitVec v = random_vec(m.dim(), rng);
            EchelonBasis sub = spin(m, {v});
            if (sub.dim() == 0 || sub.full()) return m;
            return (rng() & 1U) ? submodule(m, sub) : quotient(m, sub);
        };
        GModule a = pick(base), b = pick(base);
        if (a.dim() * b.dim() > 900) continue;
        auto h = hom_space(a, b);
        EXPECT_EQ(h.size(), oracle::naive_hom_dim(a.action(), b.action())) << inst;
        for (auto& x : h)
            for (std::size_t g = 0; g < a.generator_count(); ++g) EXPECT_EQ(mat_mul(a.gen(g), x), mat_mul(x, b.gen(g)));
        ++checked;
    }
    EXPECT_GT(checked, 40);
}

TEST(Hom, FixtureDimensions) {
    auto& f = fixture::psu33();
    GModule k = trivial_module(f.group);
    EXPECT_EQ(hom_space(k, k).size(), 1u);
    EXPECT_EQ(hom_space(k, f.borel_module).size(), 1u);
    EXPECT_EQ(hom_space(f.borel_module, k).size(), 1u);
    // End of a permutation module on cosets counts double cosets
    EXPECT_EQ(hom_space(f.borel_module, f.borel_module).size(), 2u);
    EXPECT_EQ(oracle::naive_hom_dim(f.borel_module.action(), f.borel_module.action()), 2u);
}

TEST(MeatAxe, SmallGroups) {
    auto s = fixture::small(sym(4));
    FactorMultiset fm = chop(s.perm);
    EXPECT_EQ(fm.summary(), "1^2 2");
    auto a = fixture::small(alt5());
    EXPECT_EQ(chop(a.perm).summary(), "1 4");
    EXPECT_TRUE(is_irreducible(trivial_module(a.group)));
    auto l = fixture::small(l32());
    EXPECT_EQ(l.group->order(), 168u);
    // over GF(2) the 7 points carry both 3-dimensional simples, which are dual
    FactorMultiset fl = chop(l.perm);
    EXPECT_EQ(fl.summary(), "1 3 3");
    EXPECT_FALSE(isomorphic(fl.factors[1].module, fl.factors[2].module));
    EXPECT_TRUE(isomorphic(fl.factors[1].module, dual(fl.factors[2].module)));
}

TEST(MeatAxe, JordanHolderStability) {
    auto& m = fixture::psu33().borel_module;
    FactorMultiset whole = chop(m, 5);
    EXPECT_EQ(whole.summary(), "1^2 6^2 14");
    std::mt19937_64 rng(2);
    for (int k = 0; k < 4; ++k) {
        EchelonBasis sub = spin(m, {random_vec(28, rng)});
        if (sub.dim() == 0 || sub.full()) continue;
        FactorMultiset a = chop(submodule(m, sub), k), b = chop(quotient(m, sub), k + 100);
        std::vector<FactorMultiset::Entry> merged;
        for (auto* part : {&a, &b})
            for (auto& e : part->factors) {
                auto i = whole.find(e.module);
                ASSERT_TRUE(i.has_value());
            }
        EXPECT_EQ(a.total_dim() + b.total_dim(), 28u);
    }
    // different seeds give the same multiset
    EXPECT_EQ(chop(m, 99).summary(), whole.summary());
}

TEST(MeatAxe, Psl35Modules) {
    auto& f = fixture::psl35();
    FactorMultiset p = chop(f.point_module);
    EXPECT_EQ(p.summary(), "1 30");
    FactorMultiset fl = chop(f.flag_module);
    EXPECT_EQ(fl.summary(), "1^2 30^2 124");
    auto s = p.factors[1].module;
    EXPECT_EQ(hom_space(f.flag_module, s).size(), 2u);
    EXPECT_EQ(hom_space(s, s).size(), 1u);
}

TEST(Decompose, Fixtures) {
    auto& f = fixture::psl35();
    auto point = decompose(f.point_module);
    ASSERT_EQ(point.size(), 2u);
    EXPECT_EQ(point[0].module.dim(), 1u);
    EXPECT_EQ(point[1].module.dim(), 30u);
    auto flag = decompose(f.flag_module);
    ASSERT_EQ(flag.size(), 3u);
    EXPECT_EQ(flag[0].module.dim(), 30u);
    EXPECT_EQ(flag[1].module.dim(), 30u);
    EXPECT_EQ(flag[2].module.dim(), 126u);
    EXPECT_EQ(flag[2].end_dim, 2u);
    EXPECT_EQ(flag[2].certificate, "exhaustive");
    EXPECT_TRUE(isomorphic(flag[0].module, flag[1].module));
    // the summands reassemble the module
    EchelonBasis all(186);
    for (auto& s : flag) {
        EXPECT_TRUE(is_submodule(f.flag_module, s.basis));
        for (std::size_t r = 0; r < s.basis.rows(); ++r) all.add(s.basis.row_vec(r));
    }
    EXPECT_TRUE(all.full());

    auto borel = decompose(fixture::psu33().borel_module);
    ASSERT_EQ(borel.size(), 1u);
    EXPECT_EQ(borel[0].end_dim, 2u);
}

TEST(Decompose, ScottModules) {
    auto& f = fixture::psl35();
    Summand sc = scott_summand(f.flag_module);
    EXPECT_EQ(sc.module.dim(), 126u);
    LoewyReport lr = loewy(sc.module);
    EXPECT_TRUE(lr.uniserial);
    EXPECT_EQ(layer_dims(lr.radical_layers), (std::vector<std::size_t>{1, 124, 1}));
    EXPECT_TRUE(isomorphic(sc.module, dual(sc.module)));

    Summand sb = scott_summand(fixture::psu33().borel_module);
    EXPECT_EQ(sb.module.dim(), 28u);
    EXPECT_TRUE(isomorphic(sb.module, dual(sb.module)));

    auto s = fixture::small(alt5());
    GModule whole = perm_module(s.group, coset_action(*s.table, *s.group).action);
    EXPECT_EQ(scott_summand(whole).module.dim(), 1u);
    EXPECT_THROW(scott_summand(trivial_module(s.group)), ModuleError);
}

TEST(Loewy, BorelModule) {
    auto& m = fixture::psu33().borel_module;
    LoewyReport lr = loewy(m);
    EXPECT_TRUE(lr.uniserial);
    EXPECT_EQ(layer_dims(lr.radical_layers), (std::vector<std::size_t>{1, 6, 14, 6, 1}));
    EXPECT_EQ(layer_dims(lr.socle_layers), (std::vector<std::size_t>{1, 6, 14, 6, 1}));
    std::vector<std::string> names{"k", "phi", "theta"};
    EXPECT_EQ(lr.radical_string(names), "k/phi/theta/phi/k");
    // socle series of the dual mirrors the radical series
    LoewyReport ld = loewy(dual(m), 0, &lr.simples);
    std::vector<std::size_t> rev = layer_dims(ld.radical_layers);
    std::reverse(rev.begin(), rev.end());
    EXPECT_EQ(layer_dims(lr.socle_layers), rev);
    // phi is self-dual
    EXPECT_TRUE(isomorphic(lr.simples[1], dual(lr.simples[1])));
    LoewyReport simple = loewy(lr.simples[2]);
    EXPECT_EQ(simple.loewy_length(), 1u);
}

TEST(Loewy, SemisimpleLayers) {
    auto s = fixture::small(sym(4));
    LoewyReport lr = loewy(s.perm);
    // 4 points for S4 over GF(2): uniserial k/2/k
    EXPECT_EQ(layer_dims(lr.radical_layers), (std::vector<std::size_t>{1, 2, 1}));
    auto a = fixture::small(alt5());
    LoewyReport la = loewy(a.perm);
    EXPECT_EQ(la.radical_layers.size(), 1u);
    EXPECT_FALSE(la.uniserial);
}

TEST(Brauer, Basics) {
    auto& f = fixture::psu33();
    SylowEmbedding se = sylow_embedding(f.g.group, 2);
    auto p = std::make_shared<const PermGroup>(se.sylow);
    LocalModule triv(trivial_module(f.group), p, *f.table, *f.words);
    for (auto& q : subgroups_up_to_conjugacy(*p)) EXPECT_EQ(brauer_construction(triv, q), 1u);

    // regular module of P is free
    ElementTable ptab(*p);
    LocalModule reg(perm_module(p, coset_action(ptab, PermGroup(p->degree(), {})).action));
    for (auto& q : subgroups_up_to_conjugacy(*p))
        EXPECT_EQ(brauer_construction(reg, q), q.order() == 1 ? 32u : 0u);

    // permutation module: fixed points of Q
    LocalModule b(f.borel_module, p, *f.table, *f.words);
    PermGroup zq(p->degree(), {se.central_involution});
    const PermGroup& pts = b.module().perm_basis().action;
    auto zimg = [&] {
        ElementTable pt(*p);
        WordMap pw(pt);
        Permutation x = pts.identity();
        for (auto s : pw.word(pt.index_of(se.central_involution))) x = x * pts.generators()[s];
        return x;
    }();
    EXPECT_EQ(brauer_construction(b, zq), fixed_point_count(pts, {zimg}));
    EXPECT_THROW(brauer_construction(b, PermGroup(p->degree(), {f.g.group.generators()[0]})), ModuleError);
}

TEST(Brauer, PermutationRuleOnAllSubgroups) {
    auto& f = fixture::psu33();
    SylowEmbedding se = sylow_embedding(f.g.group, 2);
    auto p = std::make_shared<const PermGroup>(se.sylow);
    LocalModule b(f.borel_module, p, *f.table, *f.words);
    const PermGroup& pts = b.module().perm_basis().action;
    ElementTable pt(*p);
    WordMap pw(pt);
    for (auto& q : subgroups_up_to_conjugacy(*p)) {
        std::vector<Permutation> imgs;
        for (auto& x : q.generators()) {
            Permutation y = pts.identity();
            for (auto s : pw.word(pt.index_of(x))) y = y * pts.generators()[s];
            imgs.push_back(y);
        }
        EXPECT_EQ(brauer_construction(b, q), fixed_point_count(pts, imgs)) << q.order();
    }
}

TEST(Brauer, Vertices) {
    auto& u = fixture::psu33();
    SylowEmbedding se = sylow_embedding(u.g.group, 2);
    auto p = std::make_shared<const PermGroup>(se.sylow);
    VertexResult vb = vertex_of_trivial_source(LocalModule(u.borel_module, p, *u.table, *u.words));
    EXPECT_EQ(vb.vertex.order(), 8u);
    EXPECT_TRUE(is_cyclic(vb.vertex));
    VertexResult vk = vertex_of_trivial_source(LocalModule(trivial_module(u.group), p, *u.table, *u.words));
    EXPECT_EQ(vk.vertex.order(), 32u);

    auto& f = fixture::psl35();
    SylowEmbedding sl = sylow_embedding(f.g.group, 2);
    auto pl = std::make_shared<const PermGroup>(sl.sylow);
    auto parts = decompose(f.point_module);
    VertexResult vs = vertex_of_trivial_source(LocalModule(parts[1].module, pl, *f.table, *f.words));
    EXPECT_EQ(vs.vertex.order(), 16u);
    EXPECT_TRUE(iso_to_model(vs.vertex, GroupModel::direct(4, 4)).has_value());
}


TEST(Module, DimensionSurvivesTrivialGroup) {
    auto s = fixture::small(sym(3));
    auto one = std::make_shared<const PermGroup>(3, std::vector<Permutation>{});
    GModule r = restrict_module(s.perm, one, *s.table, *s.words);
    EXPECT_EQ(r.dim(), 3u);
    EXPECT_EQ(trivial_module(one).dim(), 1u);
    EXPECT_EQ(fixed_space(r).rows(), 3u);
    EXPECT_EQ(dual(direct_sum(r, trivial_module(one))).dim(), 4u);
}
