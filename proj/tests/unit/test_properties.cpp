#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

void expect_ok(const property::Result& r) {
    EXPECT_GT(r.instances, 0u) << r.name;
    EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.first_failure;
}

}  // namespace

TEST(KernelProperty, Product) { expect_ok(property::product_oracle()); }
TEST(KernelProperty, Rank) { expect_ok(property::rank_oracle()); }
TEST(KernelProperty, Nullspace) { expect_ok(property::nullspace_oracle()); }
TEST(KernelProperty, MinPoly) { expect_ok(property::min_poly_oracle()); }
TEST(KernelProperty, Hom) { expect_ok(property::hom_oracle()); }
TEST(KernelProperty, FixedSpace) { expect_ok(property::fixed_space_oracle()); }

TEST(ModuleProperty, JordanHolder) { expect_ok(property::jordan_holder()); }
TEST(ModuleProperty, LoewyDualMirror) { expect_ok(property::loewy_dual_mirror()); }
TEST(ModuleProperty, DecomposeReassembles) { expect_ok(property::decompose_reassembles()); }
TEST(ModuleProperty, ScottSelfDual) { expect_ok(property::scott_self_dual()); }
TEST(ModuleProperty, SimpleSocle) {
    auto r = property::simple_socle();
    expect_ok(r);
    EXPECT_EQ(r.instances, 100u);
}
TEST(ModuleProperty, BrauerFixedPoints) { expect_ok(property::brauer_fixed_points()); }

TEST(ModuleProperty, SuitesAreNonTrivial) {
    EXPECT_GE(property::fixtures().size(), 7u);
    property::Result r{"x"};
    r.fail("first");
    r.fail("second");
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.first_failure, "first");
}
