#include <gtest/gtest.h>

#include "test_fixtures.hpp"
#include "wha/doubles.hpp"
#include "wha/weakhopf.hpp"

namespace wha {
namespace {

using namespace wha::testing;

std::vector<Vec> diagonal_units(std::size_t t) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < t; ++i) out.push_back(e(t * t, i * t + i));
    return out;
}

TEST(WeakBialgebra, HopfInputsAgreeWithHopfVerifier) {
    for (HopfData h : {k1(), kZ2(), kS3(), sweedler_algebra(), drinfeld_double(kZ2()).host}) {
        const bool hopf = verify_hopf(h).ok();
        VerificationReport w = verify_weak_hopf(h);
        EXPECT_EQ(w.ok(), hopf) << w.summary();
        EXPECT_TRUE(w.ok());
        CounitalData cd = counital_data(h);
        Mat eta_eps(h.dim(), h.dim());
        for (std::size_t i = 0; i < h.dim(); ++i)
            for (std::size_t j = 0; j < h.dim(); ++j) eta_eps(i, j) = h.algebra.unit[i] * h.coalgebra.counit[j];
        EXPECT_EQ(cd.eps_s, eta_eps);
        EXPECT_EQ(cd.eps_t, eta_eps);
        EXPECT_EQ(cd.source_basis.size(), 1u);
        EXPECT_EQ(cd.target_basis.size(), 1u);
    }
}

TEST(WeakBialgebra, CorruptedHopfDisagreesConsistently) {
    HopfData h = kS3();
    h.antipode = Mat::identity(6);
    EXPECT_FALSE(verify_hopf(h).ok());
    EXPECT_FALSE(verify_weak_hopf(h).ok());
}

TEST(Groupoid, PairGroupoidIsMatrixAlgebra) {
    WeakHopfData w = groupoid_wha(pair_groupoid(3));
    StructureAlgebra m3 = matrix_algebra(3);
    EXPECT_EQ(w.algebra.mult, m3.mult);
    EXPECT_EQ(w.algebra.unit, m3.unit);
    for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(w.coalgebra.coprod(e(9, i)), two_leg(9, i, i));
    VerificationReport r = verify_weak_hopf(w);
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_FALSE(verify_hopf(w).ok());  // Delta(1) != 1 (x) 1
    CounitalData cd = counital_data(w);
    EXPECT_TRUE(same_span(cd.source_basis, diagonal_units(3), 9));
    EXPECT_TRUE(same_span(cd.target_basis, diagonal_units(3), 9));
    EXPECT_TRUE(r.facts.at("eps_t_S_equals_eps_t_eps_s"));
    EXPECT_TRUE(r.facts.at("S_eps_s_equals_eps_t_S"));
    EXPECT_TRUE(r.facts.at("eps_s_S_equals_S_eps_t"));
    EXPECT_TRUE(r.facts.at("antipode_anti_algebra"));
    // S(E_ij) = E_ji
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(w.antipode.column(i * 3 + j), e(9, j * 3 + i));
}

TEST(Groupoid, OneObjectIsGroupAlgebra) {
    WeakHopfData w = groupoid_wha(group_groupoid(symmetric_group_s3()));
    HopfData h = kS3();
    EXPECT_EQ(w.algebra.mult, h.algebra.mult);
    EXPECT_EQ(w.algebra.unit, h.algebra.unit);
    EXPECT_EQ(w.coalgebra.comult, h.coalgebra.comult);
    EXPECT_EQ(w.antipode, h.antipode);
    EXPECT_TRUE(verify_hopf(w).ok());
}

TEST(Groupoid, TransformationGroupoid) {
    GroupoidData g = transformation_groupoid(symmetric_group_s3(), s3_on_three_points());
    EXPECT_EQ(g.morphisms.size(), 18u);
    WeakHopfData w = groupoid_wha(g);
    VerificationReport r = verify_weak_hopf(w);
    EXPECT_TRUE(r.ok()) << r.summary();
    CounitalData cd = counital_data(w);
    EXPECT_EQ(cd.source_basis.size(), 3u);
    EXPECT_EQ(cd.target_basis.size(), 3u);
}

TEST(Groupoid, InvalidRejected) {
    GroupoidData g = pair_groupoid(2);
    g.compose[0][0] = 1;  // E_00 E_00 = E_01 has the wrong endpoints
    EXPECT_THROW(groupoid_wha(g), std::invalid_argument);
    GroupoidData h = pair_groupoid(2);
    h.compose[0][1].reset();
    EXPECT_THROW(validate_groupoid(h), std::invalid_argument);
}

TEST(WeakBialgebra, FaultInjectedComultFails) {
    // Transport the coalgebra of M_2 along T = id + (E_00 -> E_01): still a
    // coalgebra, but no longer compatible with the product.
    WeakHopfData w = groupoid_wha(pair_groupoid(2));
    Mat T = Mat::identity(4);
    T(1, 0) = Rat(1);
    Mat Ti = *inverse(T);
    Tensor3::Builder b(4, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        TensorElem d = apply_on_leg(apply_on_leg(w.coalgebra.coprod(Ti.column(i)), 0, T), 1, T);
        for (std::size_t f : d.support()) b.add(i, f / 4, f % 4, d.coeffs()[f]);
    }
    w.coalgebra.comult = std::move(b).build();
    w.coalgebra.counit = Ti.transpose().apply(w.coalgebra.counit);
    VerificationReport r = verify_weak_bialgebra(w);
    EXPECT_TRUE(r.passed("coalgebra.coassociativity"));
    EXPECT_TRUE(r.passed("coalgebra.left_counit"));
    EXPECT_FALSE(r.ok());
    const Check* c = r.find("counit_weak_mult_first");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->passed);
    EXPECT_EQ(c->witness.size(), 3u);
}

TEST(WeakQT, HopfReductionMatchesVerifyQt) {
    for (QTStructure q : {trivial_qt(kS3()), drinfeld_double(kZ2()), drinfeld_double(sweedler_algebra())}) {
        EXPECT_EQ(verify_weak_qt(as_weak_qt(q)).ok(), verify_qt(q).ok());
        EXPECT_TRUE(verify_weak_qt(as_weak_qt(q)).ok());
    }
    QTStructure bad = trivial_qt(kS3());
    bad.R = two_leg(6, 1, 0);  // (12) (x) e
    bad.Rinv = bad.R;
    EXPECT_FALSE(verify_weak_qt(as_weak_qt(bad)).ok());
    EXPECT_EQ(verify_weak_qt(as_weak_qt(bad)).ok(), verify_qt(bad).ok());
}

TEST(WeakQT, GroupoidWithUnitCoproductR) {
    WeakHopfData w = groupoid_wha(transformation_groupoid(symmetric_group_s3(), s3_on_three_points()));
    TensorElem d1 = w.coalgebra.coprod(w.algebra.unit);
    WeakQTStructure wq{w, d1, d1};
    VerificationReport r = verify_weak_qt(wq);
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_TRUE(r.facts.at("triangular"));
    VerificationReport at = almost_triangular_wha_report(wq);
    EXPECT_TRUE(at.ok()) << at.summary();
    for (const char* c : {"cond2", "cond3", "cond4", "cond5", "cond6"}) EXPECT_TRUE(at.facts.at(c)) << c;
}

TEST(WeakQT, AlmostTriangularMatchesHopfReport) {
    for (QTStructure q : {trivial_qt(kS3()), drinfeld_double(kZ2()), drinfeld_double(kS3())}) {
        VerificationReport w = almost_triangular_wha_report(as_weak_qt(q));
        VerificationReport h = prop42_report(q);
        EXPECT_TRUE(w.ok()) << w.summary();
        EXPECT_EQ(w.facts.at("cond2"), h.facts.at("first_leg_central"));
        EXPECT_EQ(w.facts.at("cond3"), h.facts.at("second_leg_central"));
        EXPECT_EQ(w.facts.at("cond6"), h.facts.at("cond2_almost_triangular"));
        EXPECT_EQ(w.facts.at("cond5"), h.facts.at("cond4_adjoint_in_muger_center"));
    }
    EXPECT_FALSE(almost_triangular_wha_report(as_weak_qt(drinfeld_double(kS3()))).facts.at("cond6"));
}

TEST(Morphism, IdentityAndCounit) {
    WeakHopfData m3 = groupoid_wha(pair_groupoid(3));
    EXPECT_TRUE(check_wha_morphism(Mat::identity(9), m3, m3).ok());
    HopfData h = kS3();
    Mat f(9, 6);  // g -> eps(g) 1
    for (std::size_t g = 0; g < 6; ++g) f.set_column(g, m3.algebra.unit);
    VerificationReport r = check_wha_morphism(f, h, m3);
    EXPECT_FALSE(r.passed("coalgebra_map.comultiplicative"));
    EXPECT_FALSE(r.passed("injective"));
}

TEST(Centralizer, DiagonalInMatrixAlgebra) {
    StructureAlgebra m3 = matrix_algebra(3);
    EXPECT_TRUE(same_span(centralizer(m3, diagonal_units(3)), diagonal_units(3), 9));
    std::vector<Vec> none;
    EXPECT_EQ(centralizer(m3, none).size(), 9u);
    std::vector<Vec> all;
    for (std::size_t i = 0; i < 9; ++i) all.push_back(e(9, i));
    EXPECT_EQ(centralizer(m3, all).size(), 1u);
}

}  // namespace
}  // namespace wha
