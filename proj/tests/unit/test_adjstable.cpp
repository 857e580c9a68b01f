#include <gtest/gtest.h>

#include <algorithm>

#include "test_fixtures.hpp"
#include "wha/adjstable.hpp"
#include "wha/doubles.hpp"
#include "wha/repdim.hpp"

namespace wha {
namespace {

using namespace wha::testing;

std::vector<Vec> units(std::size_t n, std::initializer_list<std::size_t> idx) {
    std::vector<Vec> out;
    for (std::size_t i : idx) out.push_back(unit_vec(n, i));
    return out;
}

std::vector<Vec> all_units(std::size_t n) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vec(n, i));
    return out;
}

// Sweedler's algebra with R = 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g) + a/2 (x(x)x - x(x)gx + gx(x)gx + gx(x)x).
QTStructure sweedler_qt(Rat a) {
    TensorElem R({4, 4});
    const Rat half(1, 2), s = a * half;
    R.at2(0, 0) = half, R.at2(0, 1) = half, R.at2(1, 0) = half, R.at2(1, 1) = -half;
    R.at2(2, 2) = s, R.at2(2, 3) = -s, R.at2(3, 3) = s, R.at2(3, 2) = s;
    return make_qt(sweedler_algebra(), R);
}

ComoduleData comodule_of(const BraidedGroupData& bg, std::span<const Vec> D) { return subcoalgebra_comodule(bg, D); }

TEST(Comodule, RegularAndRestriction) {
    BraidedGroupData bg = transmute(trivial_qt(kS3()));
    ComoduleData h = comodule_of(bg, all_units(6));
    EXPECT_TRUE(verify_comodule(h).ok());
    ComoduleData t = comodule_of(bg, units(6, {1, 2, 3}));
    EXPECT_TRUE(verify_comodule(t).ok());
    EXPECT_EQ(restrict_comodule(t, units(3, {0})).dim, 1u);
    EXPECT_THROW(restrict_comodule(h, std::vector<Vec>{add(unit_vec(6, 0), unit_vec(6, 1))}), std::invalid_argument);
    ComoduleData s = direct_sum(t, comodule_of(bg, units(6, {0})));
    EXPECT_EQ(s.dim, 4u);
    EXPECT_TRUE(verify_comodule(s).ok());
}

TEST(Comodule, FaultInjectedCoactionFails) {
    BraidedGroupData bg = transmute(trivial_qt(kZ2()));
    ComoduleData w = comodule_of(bg, all_units(2));
    Tensor3::Builder b(2, 2, 2);
    b.add(0, 0, 0, Rat(1));
    b.add(1, 1, 1, Rat(2));  // should be e_g (x) w_1
    w.coaction = std::move(b).build();
    VerificationReport r = verify_comodule(w);
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(r.passed("coassociative"));
}

TEST(YetterDrinfeld, RegularAndBlocks) {
    for (HopfData h : {kS3(), kZ2(), sweedler_algebra()}) EXPECT_TRUE(verify_yd(regular_yd(h)).ok());
    YetterDrinfeldData t = regular_yd(kS3(), units(6, {1, 2, 3}));
    EXPECT_EQ(t.dim, 3u);
    EXPECT_TRUE(verify_yd(t).ok());
}

TEST(YetterDrinfeld, GeneratedSubcoalgebra) {
    QTStructure q = trivial_qt(kS3());
    GeneratedComodule whole = yd_to_comodule(regular_yd(kS3()), q);
    EXPECT_TRUE(whole.report.ok()) << whole.report.summary();
    EXPECT_EQ(whole.subcoalgebra.size(), 6u);
    GeneratedComodule e = yd_to_comodule(regular_yd(kS3(), units(6, {0})), q);
    EXPECT_TRUE(e.report.ok());
    EXPECT_TRUE(same_span(e.subcoalgebra, units(6, {0}), 6));
    GeneratedComodule t = yd_to_comodule(regular_yd(kS3(), units(6, {4, 5})), q);
    EXPECT_TRUE(same_span(t.subcoalgebra, units(6, {4, 5}), 6));
}

TEST(YetterDrinfeld, GeneratedOverDouble) {
    QTStructure d = drinfeld_double(kZ2());
    GeneratedComodule g = yd_to_comodule(regular_yd(d.host), d);
    EXPECT_TRUE(g.report.ok()) << g.report.summary();
    EXPECT_EQ(g.subcoalgebra.size(), 4u);
}

TEST(HTensorW, DimensionsAndLaws) {
    BraidedGroupData bg = transmute(trivial_qt(kS3()));
    HTensorW a = build_h_tensor_w(comodule_of(bg, units(6, {1})), bg);
    EXPECT_EQ(a.object.dim, 6u);
    EXPECT_TRUE(a.report.ok()) << a.report.summary();
    HTensorW b = build_h_tensor_w(comodule_of(bg, units(6, {1, 2, 3})), bg);
    EXPECT_EQ(b.object.dim, 18u);
    EXPECT_TRUE(b.report.ok()) << b.report.summary();
}

TEST(HTensorW, FaultInjectedCoactionFails) {
    BraidedGroupData bg = transmute(trivial_qt(kS3()));
    HTensorW a = build_h_tensor_w(comodule_of(bg, units(6, {1, 2, 3})), bg);
    HComodule bad = a.object;
    Tensor3::Builder b(18, 6, 18);
    for (std::size_t x = 0; x < 18; ++x)
        for (const Entry3& e : bad.comodule.coaction.slice(x)) b.add(x, x == 5 ? (e.j + 1) % 6 : e.j, e.k, e.c);
    bad.comodule.coaction = std::move(b).build();
    EXPECT_FALSE(verify_h_comodule(bad, bg).ok());
}

TEST(Cotensor, Dimensions) {
    BraidedGroupData bg = transmute(trivial_qt(kS3()));
    ComoduleData w = comodule_of(bg, units(6, {1}));
    EXPECT_EQ(cotensor(w, build_h_tensor_w(w, bg).object.comodule).size(), 2u);
    ComoduleData d = comodule_of(bg, units(6, {1, 2, 3}));
    EXPECT_EQ(cotensor(d, build_h_tensor_w(d, bg).object.comodule).size(), 18u);
}

TEST(AdjointStable, GroupCases) {
    BraidedGroupData bg = transmute(trivial_qt(kS3()));
    // W = k(12): N_W is the group algebra of the centraliser {e, (12)}.
    AdjointStableAlgebra n12 = adjoint_stable_algebra(comodule_of(bg, units(6, {1})), bg);
    EXPECT_TRUE(n12.report.ok()) << n12.report.summary();
    EXPECT_EQ(n12.carrier.dim, 2u);
    EXPECT_TRUE(n12.carrier.is_commutative());
    EXPECT_EQ(wedderburn_blocks(n12.carrier).blocks, (std::vector<std::size_t>{1, 1}));
    AdjointStableAlgebra ne = adjoint_stable_algebra(comodule_of(bg, units(6, {0})), bg);
    EXPECT_EQ(ne.carrier.dim, 6u);
    EXPECT_EQ(wedderburn_blocks(ne.carrier).blocks, (std::vector<std::size_t>{1, 1, 2}));
    AdjointStableAlgebra n3 = adjoint_stable_algebra(comodule_of(bg, units(6, {4})), bg);
    EXPECT_EQ(n3.carrier.dim, 3u);
}

TEST(AdjointStable, DimensionIdentity) {
    // dim N_W * dim D = dim H * (dim W)^2 for W simple inside a minimal D.
    BraidedGroupData bg = transmute(trivial_qt(kS3()));
    struct Case {
        std::size_t w;
        std::size_t dimD;
    };
    for (Case c : {Case{0, 1}, Case{1, 3}, Case{4, 2}}) {
        AdjointStableAlgebra n = adjoint_stable_algebra(comodule_of(bg, units(6, {c.w})), bg);
        EXPECT_EQ(n.carrier.dim * c.dimD, 6u);
    }
}

TEST(AdjointStable, DirectSumAcrossBlocks) {
    BraidedGroupData bg = transmute(trivial_qt(kS3()));
    ComoduleData a = comodule_of(bg, units(6, {0})), b = comodule_of(bg, units(6, {1}));
    const std::size_t da = adjoint_stable_algebra(a, bg).carrier.dim, db = adjoint_stable_algebra(b, bg).carrier.dim;
    // W_1 (+) W_2 in different blocks: the off-diagonal cotensors vanish.
    AdjointStableAlgebra s = adjoint_stable_algebra(direct_sum(a, b), bg);
    EXPECT_TRUE(s.report.ok());
    EXPECT_EQ(s.carrier.dim, da + db);
}

TEST(RightModule, LawsAndFault) {
    BraidedGroupData bg = transmute(trivial_qt(kS3()));
    ComoduleData w = comodule_of(bg, units(6, {1, 2, 3}));
    AdjointStableAlgebra n = adjoint_stable_algebra(w, bg);
    HTensorW v = build_h_tensor_w(comodule_of(bg, units(6, {1})), bg);
    CotensorModule m = cotensor_right_module(v.object, n);
    EXPECT_TRUE(m.report.ok()) << m.report.summary();
    EXPECT_FALSE(m.basis.empty());
    CotensorModule bad = m;
    bad.action[1] = bad.action[1] + Mat::identity(bad.basis.size());
    EXPECT_FALSE(verify_right_module(bad, n.carrier).ok());
}

TEST(PsiPhi, GroupAlgebraCases) {
    QTStructure q = trivial_qt(kS3());
    PsiPhi e = psi_phi(units(6, {0}), q);
    EXPECT_TRUE(e.report.ok()) << e.report.summary();
    EXPECT_EQ(e.N.carrier.dim, 6u);
    PsiPhi t = psi_phi(units(6, {1, 2, 3}), q);
    EXPECT_TRUE(t.report.ok()) << t.report.summary();
    EXPECT_EQ(t.N.carrier.dim, 18u);
    EXPECT_TRUE(t.report.passed("psi_phi_identity"));
    EXPECT_TRUE(t.report.passed("phi_psi_identity"));
    PsiPhi h = psi_phi(all_units(6), q);
    EXPECT_TRUE(h.report.ok()) << h.report.summary();
    EXPECT_EQ(h.N.carrier.dim, 36u);
}

TEST(PsiPhi, BothConventionsOnCocommutativeDeltaR) {
    QTStructure q = trivial_qt(kS3());
    for (DualCoaction c : {DualCoaction::from_first_leg, DualCoaction::from_second_leg})
        EXPECT_TRUE(psi_phi(units(6, {1, 2, 3}), q, c).report.ok()) << to_string(c);
}

bool cocommutative(const StructureCoalgebra& c) {
    for (std::size_t i = 0; i < c.dim; ++i) {
        const TensorElem t = c.coprod(unit_vec(c.dim, i));
        if (!(t == flip(t))) return false;
    }
    return true;
}

TEST(PsiPhi, TriangularSweedlerAcceptsBoth) {
    // Triangular R: Delta_R is cocommutative, so the two dual coactions coincide.
    QTStructure q = sweedler_qt(Rat(1));
    ASSERT_TRUE(verify_qt(q).ok());
    EXPECT_TRUE(cocommutative(transmute(q).coalgebra()));
    for (DualCoaction c : {DualCoaction::from_first_leg, DualCoaction::from_second_leg})
        EXPECT_TRUE(psi_phi(all_units(4), q, c).report.ok()) << to_string(c);
}

TEST(PsiPhi, DoubleOfSweedlerSelectsOneConvention) {
    QTStructure q = drinfeld_double(sweedler_algebra());
    BraidedGroupData bg = transmute(q);
    HRDecomposition d = decompose_hr(bg);
    ASSERT_TRUE(d.report.ok()) << d.report.summary();
    const auto& D = d.blocks.front();
    ASSERT_EQ(D.size(), 4u);
    const bool first = psi_phi(D, q, DualCoaction::from_first_leg).report.ok();
    const bool second = psi_phi(D, q, DualCoaction::from_second_leg).report.ok();
    EXPECT_TRUE(first);
    EXPECT_FALSE(second);
    PsiPhi chosen = psi_phi(D, q);
    EXPECT_TRUE(chosen.report.ok()) << chosen.report.summary();
    EXPECT_EQ(chosen.convention, DualCoaction::from_first_leg);
}

TEST(PsiPhi, RefusesNonSubcoalgebra) {
    QTStructure q = trivial_qt(kS3());
    try {
        psi_phi(units(6, {1}), q);
        FAIL() << "expected PreconditionError";
    } catch (const PreconditionError& err) {
        EXPECT_EQ(err.hypothesis(), "H-module subcoalgebra D");
    }
}

TEST(DecomposeHR, GroupCases) {
    struct Case {
        HopfData h;
        std::vector<std::size_t> dims;
    };
    for (const Case& c : {Case{kS3(), {1, 2, 3}}, Case{kZ2(), {1, 1}}, Case{k1(), {1}}}) {
        HRDecomposition d = decompose_hr(transmute(trivial_qt(c.h)));
        EXPECT_TRUE(d.complete);
        EXPECT_TRUE(d.report.ok()) << d.report.summary();
        std::vector<std::size_t> dims;
        for (const auto& b : d.blocks) dims.push_back(b.size());
        EXPECT_EQ(dims, c.dims);
    }
}

TEST(DecomposeHR, AgreesWithClassIdempotents) {
    const HopfData h = kS3();
    const QTStructure q = trivial_qt(h);
    HRDecomposition d = decompose_hr(transmute(q));
    ClassIdempotents ci = class_idempotents(h, q, integrals(h));
    ASSERT_EQ(ci.items.size(), d.blocks.size());
    for (const auto& it : ci.items)
        EXPECT_TRUE(std::any_of(d.blocks.begin(), d.blocks.end(), [&](const auto& b) { return same_span(b, it.block, 6); }));
}

TEST(DecomposeHR, DoubleZ2) {
    HRDecomposition d = decompose_hr(transmute(drinfeld_double(kZ2())));
    EXPECT_TRUE(d.report.ok()) << d.report.summary();
    std::size_t total = 0;
    for (const auto& b : d.blocks) total += b.size();
    EXPECT_EQ(total, 4u);
}

TEST(NDTransport, TranspositionsInS3) {
    NDTransport t = nd_transport_report(units(6, {1, 2, 3}), trivial_qt(kS3()));
    EXPECT_TRUE(t.report.ok()) << t.report.summary();
    EXPECT_EQ(t.nd.host.dim(), 18u);
    EXPECT_EQ(t.nd_blocks, (std::vector<std::size_t>{3, 3}));
    ASSERT_EQ(t.nw_blocks.size(), 3u);
    for (const auto& b : t.nw_blocks) EXPECT_EQ(b, (std::vector<std::size_t>{1, 1}));
    EXPECT_TRUE(t.report.passed("dim_identity"));
}

TEST(NDTransport, Z2) {
    NDTransport t = nd_transport_report(units(2, {1}), trivial_qt(kZ2()));
    EXPECT_TRUE(t.report.ok()) << t.report.summary();
    EXPECT_EQ(t.nd.host.dim(), 2u);
}

TEST(NDTransport, RefusesQuasiTriangularOnly) {
    QTStructure q = drinfeld_double(kS3());
    try {
        nd_transport_report(all_units(36), q);
        FAIL() << "expected PreconditionError";
    } catch (const PreconditionError& err) {
        EXPECT_EQ(err.hypothesis(), "almost-triangular (H, R)");
    }
}

}  // namespace
}  // namespace wha
