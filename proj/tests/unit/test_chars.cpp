#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "wreath/chars/char_table.hpp"
#include "wreath/families/families.hpp"
#include "wreath/rep/hom.hpp"
#include "wreath/rep/meataxe.hpp"

using namespace wreath;

namespace {

PermGroup sym(std::size_t n) {
    std::vector<Point> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>(i);
    return PermGroup(n, {Permutation::from_cycles(n, {cyc}), Permutation::from_cycles(n, {{0, 1}})});
}

PermGroup alt5() { return PermGroup(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{0, 1, 2}})}); }

PermGroup quaternion() {
    // regular representation of Q8 on {1, i, j, k, -1, -i, -j, -k}
    return PermGroup(8, {Permutation::from_cycles(8, {{0, 1, 4, 5}, {2, 7, 6, 3}}),
                         Permutation::from_cycles(8, {{0, 2, 4, 6}, {1, 3, 5, 7}})});
}

struct Built {
    fixture::Small s;
    ClassData cd;
    CharacterTable t;
};

Built build(const PermGroup& g) {
    Built b{fixture::small(g), {}, {}};
    b.cd = conjugacy_classes(*b.s.table);
    b.t = dixon_table(*b.s.table, b.cd);
    return b;
}

std::multiset<std::uint64_t> degree_set(const CharacterTable& t) {
    auto d = t.degrees();
    return {d.begin(), d.end()};
}

// <f, g> * |G| for class functions given on all classes
Cyclotomic scaled_inner(const ClassData& cd, const std::vector<Cyclotomic>& f, const std::vector<Cyclotomic>& g) {
    Cyclotomic s(cd.exponent);
    for (std::size_t c = 0; c < cd.count(); ++c) s += f[c] * g[c].conj() * static_cast<std::int64_t>(cd.sizes[c]);
    return s;
}

std::vector<Cyclotomic> fixed_point_character(const ClassData& cd) {
    std::vector<Cyclotomic> pi;
    for (auto& r : cd.representatives) {
        std::int64_t f = 0;
        for (std::size_t x = 0; x < r.degree(); ++x)
            if (r[x] == x) ++f;
        pi.push_back(Cyclotomic::integer(f));
    }
    return pi;
}

// orbits of g on ordered pairs of points, by brute force
std::size_t pair_orbits(const ElementTable& t) {
    const std::size_t n = t.degree();
    std::vector<int> seen(n * n, 0);
    std::size_t orbits = 0;
    for (std::size_t a = 0; a < n * n; ++a) {
        if (seen[a]) continue;
        ++orbits;
        for (std::size_t i = 0; i < t.size(); ++i) {
            auto im = t.images(i);
            seen[im[a / n] * n + im[a % n]] = 1;
        }
    }
    return orbits;
}

}  // namespace

TEST(Cyclotomic, Polynomials) {
    EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
    // the first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
    auto p105 = cyclotomic_polynomial(105);
    EXPECT_EQ(*std::min_element(p105.begin(), p105.end()), -2);
    for (std::uint64_t n = 1; n <= 200; ++n) EXPECT_EQ(cyclotomic_polynomial(n).size(), euler_phi(n) + 1) << n;
}

TEST(Cyclotomic, Arithmetic) {
    EXPECT_EQ(Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2), Cyclotomic::integer(-1));
    EXPECT_EQ(Cyclotomic::root(4, 1) * Cyclotomic::root(4, 1), Cyclotomic::integer(-1));
    EXPECT_EQ(Cyclotomic::root(8, 1) + Cyclotomic::root(8, 7), Cyclotomic::root(8, 1).galois(-1) + Cyclotomic::root(8, 1));
    EXPECT_EQ(Cyclotomic::root(6, 1).lift(12), Cyclotomic::root(12, 2));
    EXPECT_TRUE(Cyclotomic::root(5, 2).conj() == Cyclotomic::root(5, 3));
    EXPECT_THROW(Cyclotomic::root(5, 1).divided_by(2), std::domain_error);
}

TEST(Cyclotomic, ReductionsAreRingMaps) {
    // 35 divides 70, so GF(71) has primitive 35th roots
    std::mt19937_64 rng(3);
    const std::uint64_t n = 35, p = 71;
    std::uint64_t w = mod_pow(7, (p - 1) / n, p);
    ASSERT_NE(mod_pow(w, 5, p), 1U);
    ASSERT_NE(mod_pow(w, 7, p), 1U);
    for (int it = 0; it < 200; ++it) {
        std::vector<std::int64_t> a(n), b(n);
        for (auto& x : a) x = static_cast<std::int64_t>(rng() % 7) - 3;
        for (auto& x : b) x = static_cast<std::int64_t>(rng() % 7) - 3;
        Cyclotomic x = Cyclotomic::from_powers(n, a), y = Cyclotomic::from_powers(n, b);
        // naive evaluation of the dense power sums
        auto naive = [&](const std::vector<std::int64_t>& v) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < n; ++k)
                s = (s + v[k] * static_cast<std::int64_t>(mod_pow(w, k, p))) % static_cast<std::int64_t>(p);
            return static_cast<std::uint64_t>((s + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
        };
        EXPECT_EQ(x.mod_prime(p, w), naive(a));
        EXPECT_EQ((x * y).mod_prime(p, w), naive(a) * naive(b) % p);
        std::complex<double> z = x.to_complex() * y.to_complex();
        EXPECT_NEAR(std::abs((x * y).to_complex() - z), 0.0, 1e-6);
    }
}

TEST(CharTable, ClassMatricesMatchPairCount) {
    for (auto g : {sym(3), sym(4), quaternion()}) {
        auto s = fixture::small(g);
        ClassData cd = conjugacy_classes(*s.table);
        ClassMatrices a = class_matrices(*s.table, cd);
        const std::size_t r = cd.count();
        std::vector<std::vector<std::vector<std::uint64_t>>> b(r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
        for (std::size_t x = 0; x < s.table->size(); ++x)
            for (std::size_t y = 0; y < s.table->size(); ++y) {
                std::size_t z = s.table->product(x, y);
                std::size_t k = cd.element_to_class[z];
                if (cd.rep_index[k] == z) ++b[cd.element_to_class[x]][cd.element_to_class[y]][k];
            }
        EXPECT_EQ(a, b);
    }
    auto s = fixture::small(PermGroup(1, {}));
    ClassData cd = conjugacy_classes(*s.table);
    EXPECT_EQ(class_matrices(*s.table, cd), ClassMatrices(1, {{{1}}}));
}

TEST(CharTable, SmallGroups) {
    EXPECT_EQ(degree_set(build(sym(3)).t), (std::multiset<std::uint64_t>{1, 1, 2}));
    EXPECT_EQ(degree_set(build(sym(4)).t), (std::multiset<std::uint64_t>{1, 1, 2, 3, 3}));
    EXPECT_EQ(degree_set(build(quaternion()).t), (std::multiset<std::uint64_t>{1, 1, 1, 1, 2}));
    auto a5 = build(alt5());
    EXPECT_EQ(degree_set(a5.t), (std::multiset<std::uint64_t>{1, 3, 3, 4, 5}));
    // a degree-3 value on 5-cycles is a root of x^2 - x - 1
    for (std::size_t c = 0; c < a5.cd.count(); ++c)
        if (a5.cd.element_orders[c] == 5) {
            Cyclotomic v = a5.t.values[1][c];
            EXPECT_FALSE(v.is_integer());
            EXPECT_EQ(v * v, v + Cyclotomic::integer(1));
        }
    // C4: values are powers of i
    auto c4 = build(PermGroup(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})}));
    ASSERT_EQ(c4.t.size(), 4U);
    std::set<std::string> seen;
    for (auto& row : c4.t.values)
        for (auto& v : row) {
            bool unit = false;
            for (int k = 0; k < 4; ++k) unit = unit || v == Cyclotomic::root(4, k);
            EXPECT_TRUE(unit);
            seen.insert(v.to_string());
        }
    EXPECT_EQ(seen.size(), 4U);
    std::uint64_t sq = 0;
    for (auto d : build(w2_group(2)).t.degrees()) sq += d * d;
    EXPECT_EQ(sq, 96U);
}

TEST(CharTable, PermutationCharacterOracle) {
    for (auto g : {sym(4), alt5(), sym(5), w2_group(2)}) {
        auto b = build(g);
        auto pi = fixed_point_character(b.cd);
        std::int64_t order = static_cast<std::int64_t>(b.cd.group_order);
        std::int64_t sum_sq = 0, deg = 0;
        for (std::size_t x = 0; x < b.t.size(); ++x) {
            Cyclotomic ip = scaled_inner(b.cd, pi, b.t.values[x]);
            ASSERT_TRUE(ip.is_integer());
            std::int64_t m = ip.integer_value();
            ASSERT_EQ(m % order, 0);
            m /= order;
            EXPECT_GE(m, 0);
            sum_sq += m * m;
            deg += m * static_cast<std::int64_t>(b.t.degree(x));
        }
        EXPECT_EQ(deg, static_cast<std::int64_t>(g.degree()));
        EXPECT_EQ(static_cast<std::size_t>(sum_sq), pair_orbits(*b.s.table));
    }
}

TEST(CharTable, RootConvention) {
    RootConvention rc = make_root_convention(168, 6048);
    EXPECT_EQ(rc.dixon_prime, 337U);
    EXPECT_EQ(rc.odd_exponent, 21U);
    EXPECT_EQ(rc.gf2_degree, 6U);
    EXPECT_EQ(mod_pow(rc.dixon_root, 168, 337), 1U);
    EXPECT_NE(mod_pow(rc.dixon_root, 84, 337), 1U);
    EXPECT_NE(mod_pow(rc.dixon_root, 56, 337), 1U);
    EXPECT_EQ(rc.gf2_field()->order(rc.gf2_root), 21U);
    RootConvention big = make_root_convention(3720, 372000);
    EXPECT_EQ(big.gf2_degree, 20U);
    EXPECT_EQ((big.dixon_prime - 1) % 3720, 0U);
    EXPECT_GT(big.dixon_prime * big.dixon_prime, 4U * 372000U);
}

TEST(CharTable, PrincipalBlocks) {
    EXPECT_EQ(principal_block_2(build(sym(4)).t).size(), 5U);
    EXPECT_EQ(principal_block_2(build(quaternion()).t).size(), 5U);
    auto a5 = build(alt5());
    auto b = principal_block_2(a5.t);
    std::multiset<std::uint64_t> d;
    for (auto x : b) d.insert(a5.t.degree(x));
    EXPECT_EQ(d, (std::multiset<std::uint64_t>{1, 3, 3, 5}));
    // S3: the degree-2 character has defect zero
    EXPECT_EQ(principal_block_2(build(sym(3)).t).size(), 2U);
}

TEST(CharTable, BrauerCharacters) {
    auto b = build(sym(4));
    BrauerCharacter triv = brauer_character(trivial_module(b.s.group), *b.s.table, *b.s.words, b.t);
    for (auto& v : triv) EXPECT_EQ(v, Cyclotomic::integer(1));
    // a permutation module's Brauer character counts fixed points
    for (auto g : {sym(4), alt5(), sym(5)}) {
        auto bb = build(g);
        BrauerCharacter pc = brauer_character(bb.s.perm, *bb.s.table, *bb.s.words, bb.t);
        auto pi = fixed_point_character(bb.cd);
        auto reg = two_regular_classes(bb.cd);
        for (std::size_t j = 0; j < reg.size(); ++j) EXPECT_EQ(pc[j], pi[reg[j]]);
    }
    // S4 mod 2
    auto fl = chop(b.s.perm);
    ASSERT_EQ(fl.summary(), "1^2 2");
    std::vector<BrauerCharacter> ibr{brauer_character(fl.factors[0].module, *b.s.table, *b.s.words, b.t),
                                     brauer_character(fl.factors[1].module, *b.s.table, *b.s.words, b.t)};
    std::vector<std::size_t> rows(b.t.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    DecompositionMatrix dm = decomposition_matrix(b.t, rows, ibr, {"1", "2"});
    std::multiset<std::vector<std::int64_t>> got(dm.entries.begin(), dm.entries.end());
    EXPECT_EQ(got, (std::multiset<std::vector<std::int64_t>>{{1, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 1}}));
    BlockInvariants inv = block_invariants(b.t, principal_block_2(b.t));
    EXPECT_EQ(inv.k, 5U);
    EXPECT_EQ(inv.l, 2U);
    EXPECT_EQ(inv.defect, 3U);
}

TEST(CharTable, Psu33) {
    const auto& f = fixture::psu33();
    ClassData cd = conjugacy_classes(*f.table);
    CharacterTable t = dixon_table(*f.table, cd);
    EXPECT_EQ(t.root.dixon_prime, 337U);
    EXPECT_EQ(degree_set(t), (std::multiset<std::uint64_t>{1, 6, 7, 7, 7, 14, 21, 21, 21, 27, 28, 28, 32, 32}));
    auto block = principal_block_2(t);
    BlockInvariants inv = block_invariants(t, block);
    EXPECT_EQ(inv.k, 12U);
    EXPECT_EQ(inv.l, 3U);
    EXPECT_EQ(inv.height_count(0), 8U);
    EXPECT_EQ(inv.height_count(1), 2U);
    EXPECT_EQ(inv.height_count(2), 2U);
    for (auto x : block) EXPECT_NE(t.degree(x), 32U);

    auto fl = chop(f.borel_module);
    ASSERT_EQ(fl.summary(), "1^2 6^2 14");
    std::vector<BrauerCharacter> ibr;
    for (auto& e : fl.factors) ibr.push_back(brauer_character(e.module, *f.table, *f.words, t));
    // the degree-6 simple is the reduction of the degree-6 character
    auto reg = two_regular_classes(cd);
    std::size_t chi6 = 0;
    for (std::size_t x = 0; x < t.size(); ++x)
        if (t.degree(x) == 6) chi6 = x;
    for (std::size_t j = 0; j < reg.size(); ++j) EXPECT_EQ(ibr[1][j], t.values[chi6][reg[j]]);

    DecompositionMatrix dm = decomposition_matrix(t, block, ibr, {"k", "phi", "theta"});
    std::multiset<std::pair<std::uint64_t, std::vector<std::int64_t>>> rows;
    for (std::size_t i = 0; i < dm.rows.size(); ++i) rows.insert({t.degree(dm.rows[i]), dm.entries[i]});
    using R = std::pair<std::uint64_t, std::vector<std::int64_t>>;
    std::multiset<R> want{
        {1, {1, 0, 0}},  {6, {0, 1, 0}},  {7, {1, 1, 0}},  {7, {1, 1, 0}},  {7, {1, 1, 0}},  {14, {0, 0, 1}},
        {21, {1, 1, 1}}, {21, {1, 1, 1}}, {21, {1, 1, 1}}, {27, {1, 2, 1}}, {28, {2, 2, 1}}, {28, {2, 2, 1}}};
    EXPECT_EQ(rows, want);

    // the lifts of phi and theta are negative somewhere on 2-elements
    for (std::uint64_t d : {6U, 14U}) {
        bool negative = false;
        for (std::size_t x = 0; x < t.size(); ++x) {
            if (t.degree(x) != d) continue;
            for (auto c : two_element_classes(cd)) {
                const Cyclotomic& v = t.values[x][c];
                if (v.is_integer() && v.integer_value() < 0) negative = true;
            }
        }
        EXPECT_TRUE(negative) << d;
    }
}

TEST(CharTable, Gu23Block) {
    FamilyMember m = build_family({Family::W4, 2, 3});
    auto b = build(m.group);
    BlockInvariants inv = block_invariants(b.t, principal_block_2(b.t));
    EXPECT_EQ(inv.k, 16U);
    EXPECT_EQ(inv.l, 2U);
    EXPECT_EQ(inv.height_count(0), 8U);
    EXPECT_EQ(inv.height_count(1), 6U);
    EXPECT_EQ(inv.height_count(2), 2U);
}
