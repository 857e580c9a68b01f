#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "test_fixtures.hpp"
#include "wha/doubles.hpp"
#include "wha/repdim.hpp"
#include "wha/smashcons.hpp"

namespace wha {
namespace {

using namespace wha::testing;

// Exact oracle: central primitive idempotents e_i give blocks with d_i^2 = rank L_{e_i}.
std::vector<std::size_t> exact_blocks(const StructureAlgebra& a) {
    const std::size_t n = a.dim;
    Mat sys(n * n, n);
    for (std::size_t b = 0; b < n; ++b) {
        Mat d = a.right_mult(unit_vec(n, b)) - a.left_mult(unit_vec(n, b));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) sys(b * n + r, c) = d(r, c);
    }
    const auto z = kernel_basis(sys);
    const auto idem = split_commutative(restrict_algebra(a, z));
    EXPECT_TRUE(idem.has_value());
    std::vector<std::size_t> out;
    for (const Vec& c : *idem) {
        Vec e(n);
        for (std::size_t i = 0; i < c.size(); ++i) axpy(e, c[i], z[i]);
        const std::size_t r = rank(a.left_mult(e));
        out.push_back(std::size_t(std::llround(std::sqrt(double(r)))));
    }
    std::sort(out.begin(), out.end());
    return out;
}

TEST(Wedderburn, GroupAlgebraS3) {
    BlockReport b = wedderburn_blocks(kS3().algebra);
    EXPECT_EQ(b.blocks, (std::vector<std::size_t>{1, 1, 2}));
    EXPECT_EQ(b.blocks, exact_blocks(kS3().algebra));
    EXPECT_LT(b.residual, 1e-8);
    EXPECT_EQ(b.center_dim, 3u);
}

TEST(Wedderburn, SmashK3S3) {
    SmashProduct s = smash_algebra(k3_over_s3());
    BlockReport b = wedderburn_blocks(s.carrier);
    EXPECT_EQ(b.blocks, (std::vector<std::size_t>{3, 3}));
    EXPECT_EQ(b.blocks, exact_blocks(s.carrier));
}

TEST(Wedderburn, MatrixAlgebra) {
    EXPECT_EQ(wedderburn_blocks(matrix_algebra(2)).blocks, std::vector<std::size_t>{2});
}

TEST(Wedderburn, ReproducibleForSeed) {
    BlockReport a = wedderburn_blocks(kS3().algebra, 1e-8, 7), b = wedderburn_blocks(kS3().algebra, 1e-8, 7);
    EXPECT_EQ(a.blocks, b.blocks);
    EXPECT_EQ(a.residual, b.residual);
}

TEST(Wedderburn, RadicalRefused) {
    EXPECT_THROW(wedderburn_blocks(sweedler_algebra().algebra), PreconditionError);
}

TEST(FPdim, Demos) {
    ModuleAlgebraData m = k3_over_s3();
    SmashWeakHopf w = smash_weak_structure(smash_algebra(m), trivial_qt(m.host), separability(m));
    FPdimReport r = fpdim_report(w.wha, m);
    EXPECT_TRUE(r.report.ok());
    EXPECT_EQ(r.fpdims, (std::vector<std::size_t>{1, 1}));

    ModuleAlgebraData z = k2_over_z2();
    SmashWeakHopf wz = smash_weak_structure(smash_algebra(z), trivial_qt(z.host), separability(z));
    FPdimReport rz = fpdim_report(wz.wha, z);
    EXPECT_EQ(rz.blocks.blocks, std::vector<std::size_t>{2});
    EXPECT_EQ(rz.fpdims, std::vector<std::size_t>{1});

    ModuleAlgebraData k = trivial_module_algebra(kS3(), pointwise_algebra(1));
    SmashWeakHopf wk = smash_weak_structure(smash_algebra(k), trivial_qt(k.host), separability(k));
    FPdimReport rk = fpdim_report(wk.wha, k);
    EXPECT_EQ(rk.fpdims, (std::vector<std::size_t>{1, 1, 2}));
}

TEST(FPdim, NonSimpleRefused) {
    ModuleAlgebraData m = trivial_module_algebra(kZ2(), pointwise_algebra(2));
    SmashWeakHopf w = smash_weak_structure(smash_algebra(m), trivial_qt(m.host), separability(m));
    EXPECT_THROW(fpdim_report(w.wha, m), PreconditionError);
}

TEST(RationalSpectrum, Diagonalizable) {
    Mat m(2, 2);
    m(0, 0) = Rat(1), m(0, 1) = Rat(1), m(1, 1) = Rat(3);
    auto es = rational_eigenspaces(m);
    ASSERT_TRUE(es.has_value());
    EXPECT_EQ(es->size(), 2u);
    Mat rot(2, 2);
    rot(0, 1) = Rat(-1), rot(1, 0) = Rat(1);
    EXPECT_FALSE(rational_eigenspaces(rot).has_value());
    Mat jordan(2, 2);
    jordan(0, 1) = Rat(1);
    EXPECT_FALSE(rational_eigenspaces(jordan).has_value());
}

TEST(ClassIdempotents, S3Z2Trivial) {
    struct Case {
        HopfData h;
        std::vector<std::size_t> dims;
    };
    for (const Case& c : {Case{kS3(), {1, 2, 3}}, Case{kZ2(), {1, 1}}, Case{k1(), {1}}}) {
        QTStructure q = trivial_qt(c.h);
        ClassIdempotents ci = class_idempotents(c.h, q, integrals(c.h));
        EXPECT_TRUE(ci.report.ok()) << ci.report.summary();
        std::vector<std::size_t> dims;
        for (const auto& it : ci.items) dims.push_back(it.block.size());
        std::sort(dims.begin(), dims.end());
        EXPECT_EQ(dims, c.dims);
    }
}

TEST(ClassIdempotents, DoubleZ2) {
    HopfData h = kZ2();
    QTStructure d = drinfeld_double(h);
    ClassIdempotents ci = class_idempotents(d.host, d, integrals(d.host));
    EXPECT_TRUE(ci.report.ok()) << ci.report.summary();
}

TEST(Divisibility, S3Summands) {
    const HopfData h = kS3();
    const QTStructure q = trivial_qt(h);
    HRDecomposition dec = decompose_hr(transmute(q));
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& b : dec.blocks) {
        DivisibilityReport r = dv_divisibility(regular_yd(h, b), q);
        EXPECT_TRUE(r.report.ok()) << r.report.summary();
        seen.emplace_back(r.dim_dv, r.dim_v);
    }
    using P = std::pair<std::size_t, std::size_t>;
    EXPECT_EQ(seen, (std::vector<P>{{1, 1}, {2, 2}, {3, 3}}));
}

TEST(Divisibility, ReducibleRefused) {
    const HopfData h = kS3();
    try {
        dv_divisibility(regular_yd(h), trivial_qt(h));
        FAIL() << "expected PreconditionError";
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.hypothesis(), "irreducible Yetter-Drinfeld module");
    }
}

}  // namespace
}  // namespace wha
