#include <gtest/gtest.h>

#include "test_fixtures.hpp"
#include "wha/doubles.hpp"
#include "wha/qtriang.hpp"

namespace wha {
namespace {

using namespace wha::testing;

TEST(VerifyQt, TrivialRMatrixOnGroupAlgebra) {
    QTStructure q = trivial_qt(kS3());
    VerificationReport r = verify_qt(q);
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_EQ(q.Rinv, q.R);
}

TEST(VerifyQt, NontrivialZ2RMatrix) {
    // R = 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g), the standard triangular structure.
    TensorElem R({2, 2});
    R.at2(0, 0) = Rat(1, 2), R.at2(0, 1) = Rat(1, 2), R.at2(1, 0) = Rat(1, 2), R.at2(1, 1) = Rat(-1, 2);
    QTStructure q = make_qt(kZ2(), R);
    EXPECT_TRUE(verify_qt(q).ok());
    EXPECT_EQ(classify_triangularity(q).kind, Triangularity::triangular);
    DrinfeldElement u = drinfeld_element(q);
    // u = S(R^2) R^1 = 1/2 (1 + g + g - 1) = g
    EXPECT_EQ(u.u, e(2, 1));
}

TEST(VerifyQt, WrongSignIsRejectedWithWitness) {
    TensorElem R({2, 2});
    R.at2(0, 0) = Rat(1, 2), R.at2(0, 1) = Rat(1, 2), R.at2(1, 0) = Rat(1, 2), R.at2(1, 1) = Rat(1, 2);
    // 1/2 (1+g) (x) (1+g)... not invertible: make_qt refuses.
    EXPECT_THROW(make_qt(kZ2(), R), PreconditionError);
    TensorElem R2({2, 2});
    R2.at2(0, 0) = Rat(1), R2.at2(1, 1) = Rat(1), R2.at2(0, 1) = Rat(-1);
    QTStructure q = make_qt(kZ2(), R2);
    VerificationReport r = verify_qt(q);
    EXPECT_FALSE(r.ok());
}

TEST(DrinfeldDouble, Z2IsCommutativeQt) {
    QTStructure d = drinfeld_double(kZ2());
    EXPECT_EQ(d.dim(), 4u);
    EXPECT_TRUE(d.host.algebra.is_commutative());
    EXPECT_TRUE(verify_qt(d).ok());
    EXPECT_TRUE(verify_hopf(d.host).ok());
}

TEST(DrinfeldDouble, S3) {
    QTStructure d = drinfeld_double(kS3());
    EXPECT_EQ(d.dim(), 36u);
    VerificationReport r = verify_qt(d);
    EXPECT_TRUE(r.ok()) << r.summary();
    const TensorElem one = pure(std::vector<Vec>{d.host.algebra.unit, d.host.algebra.unit});
    EXPECT_EQ(mul_same(d.host.algebra, d.R, d.Rinv), one);
}

TEST(DrinfeldDouble, TrivialHopfAlgebra) {
    QTStructure d = drinfeld_double(k1());
    EXPECT_EQ(d.dim(), 1u);
    EXPECT_EQ(d.R, two_leg(1, 0, 0));
}

TEST(DrinfeldDouble, SweedlerAlgebraNonInvolutory) {
    HopfData h = sweedler_algebra();
    ASSERT_TRUE(verify_hopf(h).ok());
    EXPECT_FALSE(verify_hopf(h).facts.at("antipode_squared_is_identity"));
    QTStructure d = drinfeld_double(h);
    EXPECT_EQ(d.dim(), 16u);
    EXPECT_TRUE(verify_qt(d).ok());
    ModuleAlgebraData m = double_module_algebra(h, d);
    EXPECT_TRUE(verify_module_algebra(m).ok()) << verify_module_algebra(m).summary();
    EXPECT_TRUE(is_quantum_commutative(d, m).value);
}

TEST(DrinfeldElement, TrivialAndDoubleZ2) {
    EXPECT_EQ(drinfeld_element(trivial_qt(kS3())).u, e(6, 0));
    EXPECT_EQ(drinfeld_element(trivial_qt(k1())).u, e(1, 0));
    QTStructure d = drinfeld_double(kZ2());
    DrinfeldElement u = drinfeld_element(d);
    EXPECT_TRUE(u.fixed_by_antipode);
    EXPECT_TRUE(u.central);
    // Hand expansion: u = sum_i S(p_i bowtie 1)(eps bowtie e_i) = p_e bowtie e + p_g bowtie g.
    Vec expect(4);
    expect[double_index(2, 0, 0)] = Rat(1);
    expect[double_index(2, 1, 1)] = Rat(1);
    EXPECT_EQ(u.u, expect);
}

TEST(Classify, Cases) {
    EXPECT_EQ(classify_triangularity(trivial_qt(kS3())).kind, Triangularity::triangular);
    TriangularityClass z2 = classify_triangularity(drinfeld_double(kZ2()));
    EXPECT_TRUE(z2.first_leg_central);
    EXPECT_TRUE(z2.second_leg_central);
    EXPECT_NE(z2.kind, Triangularity::quasi_triangular_only);
    TriangularityClass s3 = classify_triangularity(drinfeld_double(kS3()));
    EXPECT_EQ(s3.first_leg_central, s3.second_leg_central);
}

TEST(Classify, InvariantUnderBasisRelabeling) {
    // Relabel kS3 by conjugation with (12): an automorphism of the Hopf algebra.
    HopfData h = kS3();
    GroupTable g = symmetric_group_s3();
    std::vector<std::size_t> sigma(6);
    const auto inv = group_inverses(g);
    for (std::size_t x = 0; x < 6; ++x) sigma[x] = g.table[g.table[1][x]][inv[1]];
    Mat P(6, 6);
    for (std::size_t x = 0; x < 6; ++x) P(sigma[x], x) = Rat(1);
    EXPECT_TRUE(check_map(P, h, h, {true, true, true, true}).ok());
    QTStructure a = make_qt(h, TensorElem(pure(std::vector<Vec>{h.algebra.unit, h.algebra.unit})));
    QTStructure b = make_qt(h, apply_on_leg(apply_on_leg(a.R, 0, P), 1, P));
    EXPECT_EQ(classify_triangularity(a).kind, classify_triangularity(b).kind);
}

TEST(Transmute, TrivialRCollapsesToH) {
    HopfData h = kS3();
    BraidedGroupData bg = transmute(trivial_qt(h));
    EXPECT_TRUE(bg.report.ok()) << bg.report.summary();
    EXPECT_TRUE(bg.comult_R == h.coalgebra.comult);
    EXPECT_EQ(bg.antipode_R, h.antipode);
}

TEST(Transmute, AdjointActionOfS3IsConjugation) {
    GroupTable g = symmetric_group_s3();
    const auto inv = group_inverses(g);
    Tensor3 ad = adjoint_action(kS3());
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(ad.fiber_vec(a, x), e(6, g.table[g.table[a][x]][inv[a]]));
}

TEST(Transmute, DoubleZ2AndS3InvariantsPass) {
    BraidedGroupData z2 = transmute(drinfeld_double(kZ2()));
    EXPECT_TRUE(z2.report.ok()) << z2.report.summary();
    BraidedGroupData sw = transmute(drinfeld_double(sweedler_algebra()));
    EXPECT_TRUE(sw.report.ok()) << sw.report.summary();
}

TEST(Muger, TrivialRAndAdjoint) {
    QTStructure q = trivial_qt(kS3());
    MugerResult m = muger_membership(q, k3_over_s3());
    EXPECT_TRUE(m.value.value);
    EXPECT_TRUE(m.consistent());
    MugerResult ad = muger_membership(q, adjoint_module(kS3()));
    EXPECT_TRUE(ad.value.value);
    EXPECT_TRUE(ad.consistent());
}

TEST(Muger, FakeRFailsWithWitness) {
    // R = g (x) 1 gives R21 R = g (x) g, which moves the idempotents of k^2.
    QTStructure q = make_qt(kZ2(), two_leg(2, 1, 0));
    MugerResult m = muger_membership(q, k2_over_z2());
    EXPECT_FALSE(m.value.value);
    EXPECT_EQ(m.value.witness, std::vector<std::size_t>{0});
    EXPECT_TRUE(m.consistent());
}

TEST(HrDualSeparability, Z2AndS3TrivialR) {
    for (HopfData h : {kZ2(), kS3()}) {
        const std::size_t n = h.dim();
        DualSeparability ds = hr_dual_separability(transmute(trivial_qt(h)), integrals(h));
        EXPECT_TRUE(ds.report.ok()) << ds.report.summary();
        TensorElem expect({n, n});
        for (std::size_t g = 0; g < n; ++g) expect.at2(g, g) = Rat(1);
        EXPECT_EQ(ds.x, expect);
    }
}

TEST(HrDualSeparability, DoubleZ2) {
    QTStructure d = drinfeld_double(kZ2());
    DualSeparability ds = hr_dual_separability(transmute(d), integrals(d.host));
    EXPECT_TRUE(ds.report.ok()) << ds.report.summary();
}

TEST(Prop42, ConditionsAgree) {
    for (const QTStructure& q : {trivial_qt(kS3()), trivial_qt(kZ2()), drinfeld_double(kZ2())}) {
        VerificationReport r = prop42_report(q);
        EXPECT_TRUE(r.ok()) << r.summary();
    }
    VerificationReport t = prop42_report(trivial_qt(kS3()));
    EXPECT_TRUE(t.facts.at("cond2_almost_triangular"));
    EXPECT_TRUE(t.facts.at("cond3_hr_dual_quantum_commutative"));
    EXPECT_TRUE(t.facts.at("cond4_adjoint_in_muger_center"));
}

TEST(Prop42, DoubleS3) {
    VerificationReport r = prop42_report(drinfeld_double(kS3()));
    EXPECT_TRUE(r.ok()) << r.summary();
}

}  // namespace
}  // namespace wha
