#include <gtest/gtest.h>

#include "test_fixtures.hpp"
#include "wha/doubles.hpp"

namespace wha {
namespace {

using namespace wha::testing;

TEST(Heisenberg, IsCentralSimpleAssociative) {
    for (HopfData h : {k1(), kZ2(), sweedler_algebra()}) {
        StructureAlgebra hd = heisenberg_double(h);
        EXPECT_EQ(hd.dim, h.dim() * h.dim());
        EXPECT_TRUE(verify_algebra(hd).ok());
        EXPECT_EQ(center_dim(hd), 1u);
    }
}

TEST(Heisenberg, Z2IsMatrixAlgebra) {
    // Explicit iso to M2(k): with idempotents f_0 = (e+g)/2, f_1 = (e-g)/2 of kZ2
    // and delta_e, delta_g, the element e#delta_e is a rank-one idempotent.
    StructureAlgebra hd = heisenberg_double(kZ2());
    // An algebra of dim 4 with center k and a nonzero nilpotent is M2(k).
    EXPECT_EQ(center_dim(hd), 1u);
    EXPECT_FALSE(hd.is_commutative());
}

TEST(Heisenberg, S3Associative) {
    StructureAlgebra hd = heisenberg_double(kS3());
    EXPECT_EQ(hd.dim, 36u);
    EXPECT_TRUE(verify_algebra(hd).ok());
    EXPECT_EQ(center_dim(hd), 1u);
}

TEST(TensorAlgebra, DimensionsAndAxioms) {
    StructureAlgebra t = tensor_algebra(matrix_algebra(2), kZ2().algebra);
    EXPECT_EQ(t.dim, 8u);
    EXPECT_TRUE(verify_algebra(t).ok());
    EXPECT_EQ(center_dim(t), 2u);
}

}  // namespace
}  // namespace wha
