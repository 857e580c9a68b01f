#include <gtest/gtest.h>

#include "wha/hopfcore.hpp"

namespace wha {
namespace {

TEST(Groups, S3TableMatchesPermutationComposition) {
    // Independent oracle: compose permutations written as image arrays.
    const int p[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    GroupTable g = symmetric_group_s3();
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            const int c = static_cast<int>(g.table[a][b]);
            for (int x = 0; x < 3; ++x) EXPECT_EQ(p[c][x], p[a][p[b][x]]);
        }
    EXPECT_EQ(validate_group(g), 0u);
}

TEST(Groups, RejectsCorruptedTables) {
    GroupTable g = cyclic_group(3);
    g.table[1][1] = 1;
    EXPECT_THROW(validate_group(g), std::invalid_argument);
    GroupTable h = cyclic_group(2);
    h.table[1][1] = 1;
    h.table[1][0] = 0;
    EXPECT_THROW(validate_group(h), std::invalid_argument);
}

TEST(VerifyAlgebra, PointwiseAndGroupAlgebras) {
    EXPECT_TRUE(verify_algebra(pointwise_algebra(3)).ok());
    EXPECT_TRUE(verify_algebra(group_algebra(symmetric_group_s3()).algebra).ok());
    EXPECT_TRUE(verify_algebra(matrix_algebra(3)).ok());
}

TEST(VerifyAlgebra, InjectedFaultGivesWitness) {
    StructureAlgebra a = group_algebra(cyclic_group(3)).algebra;
    Tensor3::Builder b(3, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (const Entry3& e : a.mult.fiber(i, j)) b.add(i, j, e.k, (i == 1 && j == 2) ? Rat(2) : e.c);
    a.mult = std::move(b).build();
    VerificationReport r = verify_algebra(a);
    EXPECT_FALSE(r.ok());
    const Check* c = r.find("associativity");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->passed);
    EXPECT_EQ(c->witness.size(), 3u);
}

TEST(VerifyHopf, Z2HasIdentityAntipode) {
    HopfData h = group_algebra(cyclic_group(2));
    VerificationReport r = verify_hopf(h);
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_EQ(h.antipode, Mat::identity(2));
}

TEST(VerifyHopf, S3AndItsDual) {
    HopfData h = group_algebra(symmetric_group_s3());
    VerificationReport r = verify_hopf(h);
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_TRUE(r.facts.at("antipode_squared_is_identity"));
    HopfData d = dual_hopf(h);
    EXPECT_TRUE(verify_hopf(d).ok());
    EXPECT_TRUE(d.algebra.is_commutative());
    // Non-cocommutative: Delta(delta_(12)) has a term delta_(13) (x) delta_(123)
    // but not its flip, by direct inspection of the product table.
    bool cocomm = true;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            for (std::size_t k = 0; k < 6; ++k)
                if (d.coalgebra.comult.get(i, j, k) != d.coalgebra.comult.get(i, k, j)) cocomm = false;
    EXPECT_FALSE(cocomm);
}

TEST(VerifyHopf, TrivialGroup) {
    HopfData h = group_algebra(trivial_group());
    EXPECT_EQ(h.dim(), 1u);
    EXPECT_TRUE(verify_hopf(h).ok());
    EXPECT_EQ(h.antipode, Mat::identity(1));
}

TEST(VerifyHopf, CorruptedAntipodeFails) {
    HopfData h = group_algebra(cyclic_group(3));
    h.antipode = Mat::identity(3);
    VerificationReport r = verify_hopf(h);
    EXPECT_FALSE(r.passed("antipode_left"));
}

TEST(Dual, DualOfZ2IsIsomorphicToZ2) {
    HopfData h = group_algebra(cyclic_group(2));
    HopfData d = dual_hopf(h);
    // e -> delta_e + delta_g, g -> delta_e - delta_g (characters of Z2).
    Mat f(2, 2);
    f(0, 0) = Rat(1), f(1, 0) = Rat(1), f(0, 1) = Rat(1), f(1, 1) = Rat(-1);
    VerificationReport r = check_map(f, h, d, {true, true, true, true});
    EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(Dual, DoubleDualIsCanonicallyTheIdentity) {
    HopfData h = group_algebra(symmetric_group_s3());
    HopfData dd = dual_hopf(dual_hopf(h));
    EXPECT_TRUE(dd.algebra.mult == h.algebra.mult);
    EXPECT_TRUE(dd.coalgebra.comult == h.coalgebra.comult);
    EXPECT_EQ(dd.antipode, h.antipode);
    EXPECT_TRUE(check_map(Mat::identity(6), h, dd, {true, true, true, true}).ok());
}

TEST(Opposites, Involutions) {
    HopfData h = group_algebra(symmetric_group_s3());
    HopfData oo = opposites(opposites(h, Opposite::op), Opposite::op);
    EXPECT_TRUE(oo.algebra.mult == h.algebra.mult);
    EXPECT_EQ(oo.antipode, h.antipode);
    HopfData c = opposites(h, Opposite::cop);
    EXPECT_TRUE(c.coalgebra.comult == h.coalgebra.comult);
    HopfData ab = group_algebra(cyclic_group(3));
    EXPECT_TRUE(opposites(ab, Opposite::op).algebra.mult == ab.algebra.mult);
    HopfData d = dual_hopf(h);
    EXPECT_TRUE(verify_hopf(opposites(d, Opposite::cop)).ok());
    EXPECT_TRUE(verify_hopf(opposites(h, Opposite::op)).ok());
    EXPECT_TRUE(verify_hopf(opposites(d, Opposite::opcop)).ok());
}

TEST(Integrals, Z2) {
    IntegralPair ip = integrals(group_algebra(cyclic_group(2)));
    EXPECT_EQ(ip.Lambda, (Vec{Rat(1), Rat(1)}));
    EXPECT_EQ(ip.lambda, (Vec{Rat(1), Rat(0)}));
}

TEST(Integrals, S3) {
    HopfData h = group_algebra(symmetric_group_s3());
    IntegralPair ip = integrals(h);
    EXPECT_EQ(ip.Lambda, Vec(6, Rat(1)));
    EXPECT_EQ(ip.lambda, unit_vec(6, 0));
    for (std::size_t g = 0; g < 6; ++g) {
        EXPECT_EQ(h.algebra.mul(unit_vec(6, g), ip.Lambda), ip.Lambda);
        EXPECT_EQ(h.algebra.mul(ip.Lambda, unit_vec(6, g)), ip.Lambda);
    }
}

TEST(Integrals, TrivialAndNonSemisimple) {
    IntegralPair ip = integrals(group_algebra(trivial_group()));
    EXPECT_EQ(ip.Lambda, Vec{Rat(1)});
    EXPECT_EQ(ip.lambda, Vec{Rat(1)});
}

TEST(CheckMap, CounitAndFlip) {
    HopfData h = group_algebra(symmetric_group_s3());
    HopfData k = group_algebra(trivial_group());
    Mat eps(1, 6);
    for (std::size_t i = 0; i < 6; ++i) eps(0, i) = Rat(1);
    EXPECT_TRUE(check_algebra_map(eps, h.algebra, k.algebra).ok());
    Mat flip(3, 3);
    flip(1, 0) = flip(0, 1) = flip(2, 2) = Rat(1);
    StructureAlgebra p = pointwise_algebra(3);
    EXPECT_TRUE(check_algebra_map(flip, p, p).ok());
    Mat bad = Mat::identity(3);
    bad(0, 1) = Rat(1);
    EXPECT_FALSE(check_algebra_map(bad, p, p).ok());
}

TEST(MultiLeg, EmbedAndMultiply) {
    HopfData h = group_algebra(cyclic_group(2));
    TensorElem R({2, 2});
    R.at2(1, 1) = Rat(1);
    const std::size_t pos[] = {0, 2};
    const Vec ones[] = {h.algebra.unit, h.algebra.unit, h.algebra.unit};
    TensorElem r13 = embed(R, pos, ones);
    EXPECT_EQ(r13.dims(), (std::vector<std::size_t>{2, 2, 2}));
    const std::size_t idx[] = {1, 0, 1};
    EXPECT_EQ(r13.at(idx), Rat(1));
    TensorElem sq = mul_same(h.algebra, r13, r13);
    const std::size_t id0[] = {0, 0, 0};
    EXPECT_EQ(sq.at(id0), Rat(1));
    EXPECT_EQ(flip(R), R);
    EXPECT_EQ(multiply_out(h.algebra, R), unit_vec(2, 0));
    TensorElem d = comult_on_leg(R, 1, h.coalgebra);
    const std::size_t i3[] = {1, 1, 1};
    EXPECT_EQ(d.at(i3), Rat(1));
}

}  // namespace
}  // namespace wha
