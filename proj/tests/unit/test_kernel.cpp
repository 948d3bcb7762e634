#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wreath/kernel/bitmatrix.hpp"
#include "wreath/kernel/echelon.hpp"
#include "wreath/kernel/field_matrix.hpp"
#include "wreath/kernel/matpoly.hpp"

using namespace wreath;

namespace {
Poly gf2_poly(std::initializer_list<Elem> c) { return Poly(gf2(), std::vector<Elem>(c)); }
}  // namespace

TEST(BitMatrix, IdentityTimesM) {
    std::mt19937_64 rng(1);
    auto m = BitMatrix::random(4, 9, rng);
    EXPECT_EQ(mat_mul(BitMatrix::identity(4), m), m);
    EXPECT_TRUE(mat_mul(m, BitMatrix(9, 5)).is_zero());
}

TEST(BitMatrix, ShapeMismatchNamesBothShapes) {
    try {
        mat_mul(BitMatrix(3, 4), BitMatrix(5, 2));
        FAIL();
    } catch (const DimensionError& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("3x4"), std::string::npos);
        EXPECT_NE(msg.find("5x2"), std::string::npos);
    }
}

TEST(BitMatrix, FourRussians512MatchesNaive) {
    std::mt19937_64 rng(2);
    auto a = BitMatrix::random(512, 512, rng);
    auto b = BitMatrix::random(512, 512, rng);
    EXPECT_EQ(mat_mul(a, b), oracle::naive_product(a, b));
}

TEST(BitMatrix, RandomShapesAgreeWithOracle) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 150, k = 1 + rng() % 150, c = 1 + rng() % 150;
        auto a = BitMatrix::random(r, k, rng);
        auto b = BitMatrix::random(k, c, rng);
        auto expect = oracle::naive_product(a, b);
        ASSERT_EQ(mat_mul_m4rm(a, b), expect);
        ASSERT_EQ(mat_mul_naive(a, b), expect);
    }
}

TEST(BitMatrix, AssociativeAndDistributive) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng() % 90;
        auto a = BitMatrix::random(n, n, rng), b = BitMatrix::random(n, n, rng), c = BitMatrix::random(n, n, rng);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(BitMatrix, HexRoundTripIsWordIndependent) {
    BitMatrix m(2, 6);
    m.set(0, 0);
    m.set(1, 5);
    auto hex = m.to_hex();
    EXPECT_EQ(hex[0], "80");
    EXPECT_EQ(hex[1], "04");
    EXPECT_EQ(BitMatrix::from_hex(2, 6, hex), m);
}

TEST(RowReduce, IdentityAndZero) {
    auto rr = row_reduce(BitMatrix::identity(5));
    EXPECT_EQ(rr.rank, 5u);
    EXPECT_EQ(rr.rref, BitMatrix::identity(5));
    EXPECT_EQ(row_reduce(BitMatrix(4, 7)).rank, 0u);
}

TEST(RowReduce, RandomAgainstColumnOracle) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 80, c = 1 + rng() % 90;
        auto m = BitMatrix::random(r, c, rng);
        if (t % 3 == 0 && r > 2) m.set_row(r - 1, m.row(0));
        auto rr = row_reduce(m);
        ASSERT_EQ(rr.rank, oracle::column_rank(m));
        ASSERT_EQ(rank(m), rr.rank);
        ASSERT_EQ(rr.transform * m, rr.rref);
        ASSERT_EQ(rank(rr.transform), r);
        ASSERT_EQ(row_reduce(m).rref, rr.rref);
        for (std::size_t i = 0; i < rr.rank; ++i) {
            ASSERT_TRUE(rr.rref.get(i, rr.pivots[i]));
            for (std::size_t k = 0; k < r; ++k)
                if (k != i) ASSERT_FALSE(rr.rref.get(k, rr.pivots[i]));
        }
    }
}

TEST(RowReduce, Shape64x80) {
    std::mt19937_64 rng(6);
    auto m = BitMatrix::random(64, 80, rng);
    EXPECT_EQ(row_reduce(m).rank, oracle::column_rank(m));
}

TEST(Nullspace, Basics) {
    EXPECT_EQ(nullspace(BitMatrix::identity(7)).rows(), 0u);
    auto ns = nullspace(BitMatrix(6, 6));
    EXPECT_EQ(ns.rows(), 6u);
    EXPECT_EQ(rank(ns), 6u);
}

TEST(Nullspace, RankNullityOnRandomMatrices) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 70, c = 1 + rng() % 70;
        auto m = BitMatrix::random(r, c, rng);
        if (r > 3) {
            m.set_row(1, m.row(0));
            m.xor_row(2, 0);
        }
        auto ns = nullspace(m);
        ASSERT_EQ(ns.rows() + oracle::column_rank(m.transpose()), r);
        ASSERT_TRUE((ns * m).is_zero());
        ASSERT_EQ(rank(ns), ns.rows());
    }
}

TEST(Echelon, SpanIntersection) {
    BitMatrix a(2, 4), b(2, 4);
    a.set(0, 0), a.set(1, 1);
    b.set(0, 0), b.set(0, 1), b.set(1, 3);
    auto i = span_intersection(a, b);
    ASSERT_EQ(i.rows(), 1u);
    EXPECT_TRUE(i.get(0, 0) && i.get(0, 1));
}

TEST(MinPoly, IdentityAndJordan) {
    EXPECT_EQ(min_poly(BitMatrix::identity(5)), gf2_poly({1, 1}));
    BitMatrix j(3, 3);
    j.set(0, 1), j.set(1, 2);
    EXPECT_EQ(min_poly(j), gf2_poly({0, 0, 0, 1}));
    EXPECT_EQ(char_poly(j), gf2_poly({0, 0, 0, 1}));
}

TEST(MinPoly, RandomMatricesAnnihilate) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + (t == 0 ? 19 : rng() % 30);
        auto m = BitMatrix::random(n, n, rng);
        if (t % 4 == 1) m = m * m.transpose();
        Poly mp = min_poly(m), cp = char_poly(m);
        ASSERT_EQ(cp.degree(), static_cast<int>(n));
        ASSERT_TRUE(oracle::evaluate_by_powers(mp, m).is_zero());
        ASSERT_TRUE(evaluate(cp, m).is_zero());
        ASSERT_TRUE((cp % mp).is_zero());
        for (auto& f : factor_poly(mp)) ASSERT_FALSE(evaluate(mp / f.factor, m).is_zero());
    }
}

TEST(Field, SmallFields) {
    auto f2 = make_field(2, 1);
    EXPECT_EQ(f2->size(), 2u);
    auto f8 = make_field(2, 3);
    EXPECT_EQ(f8->size(), 8u);
    EXPECT_EQ(f8->order(f8->primitive()), 7u);
    EXPECT_EQ(f8->modulus(), (std::vector<Elem>{1, 1, 0, 1}));
    auto f337 = make_field(337, 1);
    EXPECT_EQ(f337->size(), 337u);
    EXPECT_EQ(336 % 168, 0);
    EXPECT_EQ(f337->order(f337->primitive()), 336u);
    EXPECT_EQ(make_field(2, 3).get(), f8.get());
}

TEST(Field, Errors) {
    EXPECT_THROW(make_field(4, 1), FieldError);
    EXPECT_THROW(make_field(2, 21), FieldError);
    EXPECT_THROW(make_field(3, 0), FieldError);
}

TEST(Field, FrobeniusIsARingMap) {
    std::mt19937_64 rng(9);
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 6}, {3, 2}, {5, 2}, {7, 2}, {2, 20}, {1009, 1}}) {
        auto F = make_field(p, m);
        EXPECT_EQ(F->order(F->primitive()), F->size() - 1u);
        for (int t = 0; t < 200; ++t) {
            Elem a = static_cast<Elem>(rng() % F->size()), b = static_cast<Elem>(rng() % F->size());
            ASSERT_EQ(F->frobenius(F->add(a, b)), F->add(F->frobenius(a), F->frobenius(b)));
            ASSERT_EQ(F->frobenius(F->mul(a, b)), F->mul(F->frobenius(a), F->frobenius(b)));
            if (a) ASSERT_EQ(F->mul(a, F->inv(a)), 1u);
        }
    }
}

TEST(FactorPoly, SmallCases) {
    auto f = factor_poly(gf2_poly({0, 1, 1}));
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0].factor, gf2_poly({0, 1}));
    EXPECT_EQ(f[1].factor, gf2_poly({1, 1}));
    auto g = factor_poly(gf2_poly({1, 1, 1}));
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0].multiplicity, 1u);
    EXPECT_THROW(factor_poly(Poly(gf2())), FieldError);
}

TEST(FactorPoly, ConstructThenFactor) {
    std::mt19937_64 rng(10);
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 4}, {3, 1}, {5, 2}, {337, 1}}) {
        auto F = make_field(p, m);
        for (int t = 0; t < 40; ++t) {
            std::vector<PolyFactor> chosen;
            int deg = 0;
            while (deg < 12) {
                int d = 1 + static_cast<int>(rng() % 4);
                std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
                for (auto& x : c) x = static_cast<Elem>(rng() % F->size());
                c.back() = 1;
                Poly cand(F, c);
                if (!is_irreducible(cand)) continue;
                bool dup = false;
                for (auto& pf : chosen)
                    if (pf.factor == cand) pf.multiplicity++, dup = true;
                if (!dup) chosen.push_back({cand, 1});
                deg += d;
            }
            Poly f = product(chosen);
            auto got = factor_poly(f);
            ASSERT_EQ(product(got), f);
            std::sort(chosen.begin(), chosen.end(), [](auto& a, auto& b) { return a.factor < b.factor; });
            ASSERT_EQ(got.size(), chosen.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                ASSERT_EQ(got[i].factor, chosen[i].factor);
                ASSERT_EQ(got[i].multiplicity, chosen[i].multiplicity);
            }
        }
    }
}

TEST(FieldMatrix, CharPolyAgreesWithGf2Krylov) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + rng() % 20;
        auto b = BitMatrix::random(n, n, rng);
        FieldMatrix fm(gf2(), n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) fm.at(i, j) = b.get(i, j);
        ASSERT_EQ(char_poly(fm), char_poly(b));
    }
}

TEST(FieldMatrix, NullspaceOverPrimeField) {
    auto F = make_field(337, 1);
    std::mt19937_64 rng(12);
    FieldMatrix m(F, 6, 4);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = static_cast<Elem>(rng() % 337);
    auto ns = left_nullspace(m);
    EXPECT_EQ(ns.rows(), 2u);
    auto z = ns * m;
    for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < z.cols(); ++j) EXPECT_EQ(z.at(i, j), 0u);
}
