#include <gtest/gtest.h>

#include "wreath/families/families.hpp"
#include "wreath/groups/classes.hpp"
#include "wreath/groups/small_group.hpp"

using namespace wreath;

namespace {

// Brute-force count of 2x2 matrices over GF(q^2) fixing the antidiagonal form.
std::uint64_t count_unitary_2x2(unsigned q) {
    FieldPtr f = make_field_of_size(std::uint64_t{q} * q);
    FqMatrix w = FqMatrix::antidiagonal(f, 2);
    std::uint64_t n = 0;
    for (Elem a = 0; a < f->size(); ++a)
        for (Elem b = 0; b < f->size(); ++b)
            for (Elem c = 0; c < f->size(); ++c)
                for (Elem d = 0; d < f->size(); ++d)
                    if (preserves_hermitian_form(FqMatrix(f, 2, {a, b, c, d}), w, q)) ++n;
    return n;
}

}  // namespace

TEST(FqMatrix, DeterminantAndProducts) {
    FieldPtr f = make_field(5, 1);
    FqMatrix a(f, 3, {1, 2, 3, 0, 1, 4, 5 % 5, 6 % 5, 0});
    FqMatrix b(f, 3, {2, 0, 1, 1, 3, 0, 4, 1, 1});
    EXPECT_EQ((a * b).det(), f->mul(a.det(), b.det()));
    EXPECT_TRUE(FqMatrix::identity(f, 3).is_identity());
    EXPECT_TRUE(FqMatrix::diagonal(f, {2, 2, 2}).is_scalar());
    EXPECT_FALSE(a.is_scalar());
    EXPECT_EQ(FqMatrix::antidiagonal(f, 3).det(), f->neg(1));
}

TEST(FqMatrix, VectorDomainRoundTrip) {
    FieldPtr f = make_field(3, 2);
    VectorDomain lin(f, 2, false);
    EXPECT_EQ(lin.size(), 80u);
    VectorDomain proj(f, 2, true);
    EXPECT_EQ(proj.size(), 10u);
    FqMatrix m(f, 2, {1, 3, 0, 4});
    ASSERT_NE(m.det(), 0u);
    EXPECT_EQ(lin.matrix_of(lin.permutation_of(m)), m);
    Permutation p = lin.permutation_of(m), r = lin.permutation_of(m * m);
    EXPECT_EQ(p * p, r);
}

TEST(Families, Wreathed) {
    EXPECT_EQ(wreathed(2).order(), 32u);
    EXPECT_EQ(wreathed(3).order(), 128u);
    EXPECT_EQ(two_rank(wreathed(3)), 2u);
    EXPECT_EQ(conjugacy_classes(ElementTable(wreathed(2))).count(), 14u);
    EXPECT_THROW(wreathed(1), FamilyError);
}

TEST(Families, W2Group) {
    PermGroup g = w2_group(2);
    EXPECT_EQ(g.order(), 96u);
    ElementTable t(g);
    PermGroup p = sylow_2(t);
    EXPECT_TRUE(iso_to_model(p, GroupModel::wreathed(2)).has_value());
    // O_{2'}(G) = 1: a normal subgroup of order 3 would be a class of size <= 2
    ClassData cd = conjugacy_classes(t);
    for (std::size_t c = 1; c < cd.count(); ++c)
        if (cd.element_orders[c] % 2 == 1) EXPECT_GT(cd.sizes[c], 2u);
    // index 2 subgroup (C4 x C4):C3 with abelian Sylow
    std::vector<Permutation> gens{g.generators()[0], g.generators()[1]};
    PermGroup k(g.degree(), gens);
    EXPECT_EQ(k.order(), 48u);
    PermGroup pk = sylow_2(ElementTable(k));
    EXPECT_TRUE(is_abelian(pk));
    EXPECT_TRUE(iso_to_model(pk, GroupModel::direct(4, 4)).has_value());
    EXPECT_THROW(w2_group(1), FamilyError);
}

TEST(Families, ClassicalOrders) {
    EXPECT_EQ(count_unitary_2x2(3), 96u);
    EXPECT_EQ(classical_group(Classical::GU2, 3).group.order(), 96u);
    EXPECT_EQ(classical_group(Classical::GL2, 5).group.order(), 480u);
    EXPECT_EQ(classical_group(Classical::SL2t, 5, 2).group.order(), 480u);
    EXPECT_EQ(classical_group(Classical::SU2t, 3, 2).group.order(), 96u);
    EXPECT_EQ(classical_group(Classical::GU2, 7).group.order(), 2688u);
    EXPECT_EQ(classical_group(Classical::GL3, 3).group.order(), 11232u);
    EXPECT_EQ(classical_group(Classical::SU3, 3).group.order(), 6048u);
    EXPECT_EQ(classical_group(Classical::GU3, 3).group.order(), 24192u);
    EXPECT_EQ(classical_group(Classical::GL2, 9).group.order(), 9u * 8 * 80);
    EXPECT_THROW(classical_group(Classical::GL2, 4), FamilyError);
    EXPECT_THROW(classical_group(Classical::GL2, 15), FamilyError);
}

TEST(Families, DeterminantFilterMatchesGenerators) {
    // SL2^t as the det^(2^t) = 1 subset of GL2, counted element by element
    for (unsigned q : {5u, 7u}) {
        MatrixGroup gl = classical_group(Classical::GL2, q);
        ElementTable t(gl.group);
        for (unsigned tt : {0u, 1u, 2u}) {
            std::uint64_t n = 0;
            for (std::size_t i = 0; i < t.size(); ++i) {
                Elem d = gl.domain->matrix_of(t.element(i)).det();
                if (gl.field->pow(d, 1ULL << tt) == 1) ++n;
            }
            EXPECT_EQ(classical_group(Classical::SL2t, q, tt).group.order(), n) << q << " " << tt;
        }
    }
    MatrixGroup gu = classical_group(Classical::GU2, 3);
    ElementTable t(gu.group);
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (gu.field->pow(gu.domain->matrix_of(t.element(i)).det(), 2) == 1) ++n;
    EXPECT_EQ(classical_group(Classical::SU2t, 3, 1).group.order(), n);
}

TEST(Families, RemarkIndices) {
    for (unsigned q : {3u, 5u, 7u}) {
        unsigned nm = 0, np = 0;
        while (two_part(q - 1) > (1ULL << nm)) ++nm;
        while (two_part(q + 1) > (1ULL << np)) ++np;
        auto gl = classical_group(Classical::GL2, q).group.order();
        auto gu = classical_group(Classical::GU2, q).group.order();
        EXPECT_EQ(gl / classical_group(Classical::SL2t, q, nm).group.order(), (q - 1) >> nm);
        EXPECT_EQ(gu / classical_group(Classical::SU2t, q, np).group.order(), (q + 1) >> np);
    }
}

TEST(Families, ProjectiveGroups) {
    auto psu = projective_group(Projective::PSU3, 3);
    EXPECT_EQ(psu.group.degree(), 28u);
    EXPECT_EQ(psu.group.order(), 6048u);
    EXPECT_EQ(conjugacy_classes(ElementTable(psu.group)).count(), 14u);
    auto pgu = projective_group(Projective::PGU3, 3);
    EXPECT_EQ(pgu.group.order(), 6048u);
    auto psl = projective_group(Projective::PSL3, 5);
    EXPECT_EQ(psl.group.degree(), 31u);
    EXPECT_EQ(psl.group.order(), 372000u);
    // gcd(3, q-1) = 3 keeps working
    auto psl7 = projective_group(Projective::PSL3, 7);
    EXPECT_EQ(psl7.group.order(), 1876896u);
    auto psl3 = projective_group(Projective::PSL3, 3);
    EXPECT_EQ(psl3.group.order() / parabolic_psl3(psl3).order(), 13u);
}

TEST(Families, ParabolicAndBorel) {
    auto psl = projective_group(Projective::PSL3, 5);
    PermGroup h = parabolic_psl3(psl);
    EXPECT_EQ(h.order(), 12000u);
    EXPECT_EQ(psl.group.order() / h.order(), 31u);
    PermGroup b = borel_psl3(psl);
    EXPECT_EQ(b.order(), 2000u);
    EXPECT_TRUE(b.is_subgroup_of(h));

    auto pgu = projective_group(Projective::PGU3, 3);
    BorelSubgroup bb = borel_pgu3(pgu);
    EXPECT_FALSE(bb.one_set_valid);
    EXPECT_EQ(bb.variant, "zero");
    EXPECT_TRUE(bb.meets_center_trivially);
    EXPECT_EQ(bb.group.order(), 216u);
    EXPECT_EQ(pgu.group.order() / bb.group.order(), 28u);
    PermGroup q = sylow_2(ElementTable(bb.group));
    EXPECT_EQ(q.order(), 8u);
    EXPECT_TRUE(is_cyclic(q));
}

TEST(Families, BorelAtSeven) {
    auto pgu = projective_group(Projective::PGU3, 7);
    EXPECT_EQ(pgu.group.degree(), 344u);
    BorelSubgroup bb = borel_pgu3(pgu);
    EXPECT_EQ(bb.variant, "zero");
    EXPECT_EQ(pgu.group.order() / bb.group.order(), 344u);
    PermGroup q = sylow_2(ElementTable(bb.group));
    EXPECT_EQ(q.order(), 16u);
    EXPECT_TRUE(is_cyclic(q));
}

TEST(Families, SpecValidation) {
    FamilySpec ok{Family::W6, 2, 3};
    EXPECT_NO_THROW(ok.validate());
    EXPECT_THROW((FamilySpec{Family::W6, 2, 5}.validate()), FamilyError);
    EXPECT_THROW((FamilySpec{Family::W5, 2, 3}.validate()), FamilyError);
    EXPECT_NO_THROW((FamilySpec{Family::W4, 3, 7}.validate()));
    EXPECT_THROW((FamilySpec{Family::W1, 1, 0}.validate()), FamilyError);
    EXPECT_THROW((FamilySpec{Family::W3, 2, 4}.validate()), FamilyError);
    EXPECT_EQ(FamilySpec::parse_family("W5"), Family::W5);
    EXPECT_THROW(FamilySpec::parse_family("w7"), FamilyError);
    EXPECT_EQ(build_family({Family::W4, 2, 3}).group.order(), 96u);
}

TEST(Families, SylowEmbeddings) {
    for (FamilySpec s : {FamilySpec{Family::W1, 2, 0}, FamilySpec{Family::W2, 2, 0}, FamilySpec{Family::W3, 2, 5},
                         FamilySpec{Family::W4, 2, 3}, FamilySpec{Family::W6, 2, 3}, FamilySpec{Family::W4, 3, 7}}) {
        FamilyMember m = build_family(s);
        SylowEmbedding e = sylow_embedding(m.group, s.n);
        EXPECT_EQ(e.sylow.order(), 1ULL << (2 * s.n + 1)) << m.name;
        EXPECT_EQ(e.center_order, 1ULL << s.n) << m.name;
        EXPECT_EQ(e.central_involution.order(), 2u);
    }
}

TEST(Families, SylowPsl35) {
    FamilyMember m = build_family({Family::W5, 2, 5});
    SylowEmbedding e = sylow_embedding(m.group, 2);
    EXPECT_EQ(e.center_order, 4u);
    EXPECT_TRUE(m.group.contains(e.central_involution));
}
