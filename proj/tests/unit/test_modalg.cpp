#include <gtest/gtest.h>

#include "test_fixtures.hpp"
#include "wha/doubles.hpp"
#include "wha/modalg.hpp"

namespace wha {
namespace {

using namespace wha::testing;

Tensor3 perturb(const Tensor3& t, std::size_t i, std::size_t j, std::size_t k, const Rat& delta) {
    auto s = t.shape();
    Tensor3::Builder b(s[0], s[1], s[2]);
    for (std::size_t a = 0; a < s[0]; ++a)
        for (const Entry3& e : t.slice(a)) b.add(a, e.j, e.k, e.c);
    b.add(i, j, k, delta);
    return std::move(b).build();
}

TEST(ModuleAlgebra, PermutationActionOnK3) {
    VerificationReport r = verify_module_algebra(k3_over_s3());
    EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(ModuleAlgebra, AdjointActionOnS3) { EXPECT_TRUE(verify_module_algebra(adjoint_module(kS3())).ok()); }

TEST(ModuleAlgebra, FaultInjectedActionFails) {
    ModuleAlgebraData m = k3_over_s3();
    m.action = perturb(m.action, 1, 0, 2, Rat(1));
    VerificationReport r = verify_module_algebra(m);
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(r.passed("measuring"));
}

TEST(ModuleAlgebra, RejectsZeroAlgebra) {
    StructureAlgebra z;
    EXPECT_THROW(make_module_algebra(kZ2(), z, Tensor3(2, 0, 0)), std::invalid_argument);
}

TEST(QuantumCommutative, TrivialRIsCommutativity) {
    QTStructure q = trivial_qt(kS3());
    EXPECT_TRUE(is_quantum_commutative(q, k3_over_s3()).value);
    // kS3 acting trivially on M2(k): noncommutative, so not quantum commutative.
    ModuleAlgebraData m = trivial_module_algebra(kS3(), matrix_algebra(2));
    Witnessed w = is_quantum_commutative(q, m);
    EXPECT_FALSE(w.value);
    EXPECT_EQ(w.witness.size(), 2u);
    Witnessed a = is_quantum_commutative(q, adjoint_module(kS3()));
    EXPECT_FALSE(a.value);  // kS3 is noncommutative
}

TEST(QuantumCommutative, DoubleActsOnH) {
    for (HopfData h : {kZ2(), kS3(), k1()}) {
        QTStructure d = drinfeld_double(h);
        ModuleAlgebraData m = double_module_algebra(h, d);
        EXPECT_TRUE(verify_module_algebra(m).ok());
        EXPECT_TRUE(is_quantum_commutative(d, m).value);
    }
}

TEST(Separability, PointwiseK3) {
    SeparabilityData s = separability(pointwise_algebra(3));
    EXPECT_TRUE(s.report.ok()) << s.report.summary();
    EXPECT_EQ(s.alpha, Vec(3, Rat(1)));
    TensorElem x({3, 3});
    for (std::size_t i = 0; i < 3; ++i) x.at2(i, i) = Rat(1);
    EXPECT_EQ(s.x, x);
}

TEST(Separability, GroupAlgebraZ2) {
    SeparabilityData s = separability(kZ2().algebra);
    EXPECT_TRUE(s.report.ok());
    EXPECT_EQ(s.alpha, (Vec{Rat(2), Rat(0)}));
    TensorElem x({2, 2});
    x.at2(0, 0) = Rat(1, 2), x.at2(1, 1) = Rat(1, 2);
    EXPECT_EQ(s.x, x);
}

TEST(Separability, TrivialAlgebra) {
    SeparabilityData s = separability(pointwise_algebra(1));
    EXPECT_EQ(s.alpha, Vec{Rat(1)});
    EXPECT_EQ(s.x, two_leg(1, 0, 0));
}

TEST(Separability, ModuleIdentities) {
    SeparabilityData s = separability(k3_over_s3());
    EXPECT_TRUE(s.report.ok()) << s.report.summary();
    EXPECT_TRUE(s.report.passed("alpha_invariant"));
    EXPECT_TRUE(s.report.passed("x_antipode_balance"));
}

TEST(Separability, SingularTraceFormRefused) {
    // Dual numbers k[t]/t^2: trace form is degenerate.
    StructureAlgebra a;
    a.dim = 2;
    Tensor3::Builder b(2, 2, 2);
    b.add(0, 0, 0, Rat(1));
    b.add(0, 1, 1, Rat(1));
    b.add(1, 0, 1, Rat(1));
    a.mult = std::move(b).build();
    a.unit = unit_vec(2, 0);
    EXPECT_THROW(separability(a), PreconditionError);
}

TEST(UActsTrivially, Cases) {
    EXPECT_TRUE(u_acts_trivially(trivial_qt(kS3()), k3_over_s3()).value);
    QTStructure d = drinfeld_double(kZ2());
    EXPECT_TRUE(u_acts_trivially(d, double_module_algebra(kZ2(), d)).value);
    ModuleAlgebraData m = k2_over_z2();
    TensorElem R({2, 2});
    R.at2(0, 0) = Rat(1, 2), R.at2(0, 1) = Rat(1, 2), R.at2(1, 0) = Rat(1, 2), R.at2(1, 1) = Rat(-1, 2);
    QTStructure q = make_qt(kZ2(), R);  // u = g acts by the swap
    Witnessed w = u_acts_trivially(q, m);
    EXPECT_FALSE(w.value);
    EXPECT_EQ(w.witness, std::vector<std::size_t>{0});
}

TEST(HSimple, TransitiveActionCertified) {
    SimplicityResult s = is_H_simple(k3_over_s3());
    EXPECT_EQ(s.verdict, Simplicity::certified_simple);
    EXPECT_EQ(s.commutant_dim, 1u);
}

TEST(HSimple, SplitActionNotSimple) {
    // S3 acts on k^4 through the sign: transpositions swap points 0 and 1.
    std::vector<std::vector<std::size_t>> act = {{0, 1, 2, 3}, {1, 0, 2, 3}, {1, 0, 2, 3},
                                                 {1, 0, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}};
    SimplicityResult s = is_H_simple(permutation_module_algebra(symmetric_group_s3(), act));
    ASSERT_EQ(s.verdict, Simplicity::not_simple);
    EXPECT_LT(s.ideal.size(), 4u);
    EXPECT_FALSE(s.ideal.empty());
}

TEST(HSimple, TrivialAlgebra) {
    EXPECT_EQ(is_H_simple(trivial_module_algebra(kS3(), pointwise_algebra(1))).verdict, Simplicity::certified_simple);
}

TEST(Commutant, MatrixUnits) {
    // Commutant of M2 acting on k^2 by left multiplication is the scalars.
    StructureAlgebra m2 = matrix_algebra(2);
    std::vector<Mat> ops;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Mat e(2, 2);
            e(i, j) = Rat(1);
            ops.push_back(e);
        }
    EXPECT_EQ(commutant(ops, 2).size(), 1u);
    EXPECT_EQ(center_dim(m2), 1u);
}

}  // namespace
}  // namespace wha
