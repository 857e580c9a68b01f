#include <gtest/gtest.h>

#include <random>

#include "wha/exactlin/linalg.hpp"
#include "wha/exactlin/rat.hpp"
#include "wha/exactlin/tensor.hpp"

namespace wha {
namespace {

Mat random_mat(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rat(d(rng), 1 + (d(rng) + 8) % 3);
    return m;
}

TEST(Rat, LowestTermsAndSign) {
    Rat a(6, -4);
    EXPECT_EQ(a.str(), "-3/2");
    EXPECT_EQ(Rat(4, 2).str(), "2");
    EXPECT_EQ(Rat::parse("-10/4"), Rat(-5, 2));
    EXPECT_THROW(Rat::parse("10/-4"), std::invalid_argument);
    EXPECT_EQ(Rat::parse(" 7 "), Rat(7));
    EXPECT_THROW(Rat::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rat::parse("abc"), std::invalid_argument);
}

TEST(Rat, PromotesOnOverflowWithoutRounding) {
    Rat big(std::int64_t{1} << 62);
    Rat sq = big * big;
    EXPECT_FALSE(sq.is_small());
    EXPECT_EQ(sq / big, big);
    Rat frac = Rat(1, std::int64_t{1} << 62) * Rat(1, 3);
    EXPECT_EQ(frac * Rat(3) * big, Rat(1));
    EXPECT_EQ((sq - sq), Rat(0));
}

TEST(Rat, OrderingMatchesDoubles) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int t = 0; t < 200; ++t) {
        Rat a(d(rng), 1 + std::abs(d(rng)));
        Rat b(d(rng), 1 + std::abs(d(rng)));
        if (a.to_double() < b.to_double() - 1e-12) EXPECT_LT(a, b);
        EXPECT_EQ(a + b - b, a);
        if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    }
}

TEST(KernelBasis, IdentityHasTrivialKernel) { EXPECT_TRUE(kernel_basis(Mat::identity(2)).empty()); }

TEST(KernelBasis, RankOneTwoByTwo) {
    Mat m(2, 2);
    m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = Rat(1);
    auto k = kernel_basis(m);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_TRUE(same_span(k, std::vector<Vec>{{Rat(1), Rat(-1)}}, 2));
}

TEST(KernelBasis, ZeroMatrixHasFullKernel) { EXPECT_EQ(kernel_basis(Mat(3, 3)).size(), 3u); }

TEST(KernelBasis, VectorsAreExactlyAnnihilated) {
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        Mat m = random_mat(rng, r, c);
        if (t % 3 == 0 && r > 1)  // force dependent rows
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rat(2);
        auto k = kernel_basis(m);
        EXPECT_EQ(k.size() + rank(m), c);
        for (const Vec& v : k) EXPECT_TRUE(is_zero(m.apply(v)));
    }
}

TEST(Solve, Scalar) {
    Mat m(1, 1);
    m(0, 0) = Rat(2);
    auto x = solve(m, Vec{Rat(3)});
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], Rat(3, 2));
}

TEST(Solve, IdentityReturnsRightHandSide) {
    Vec b{Rat(1, 2), Rat(-7), Rat(0)};
    auto x = solve(Mat::identity(3), b);
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, b);
}

TEST(Solve, InconsistentSystem) {
    Mat m(2, 1);
    m(0, 0) = m(1, 0) = Rat(1);
    EXPECT_FALSE(solve(m, Vec{Rat(1), Rat(2)}));
}

TEST(Solve, DimensionMismatchThrows) { EXPECT_THROW(solve(Mat::identity(2), Vec{Rat(1)}), std::invalid_argument); }

TEST(Solve, RecoversVectorForInjectiveMatrices) {
    std::mt19937 rng(3);
    int tested = 0;
    for (int t = 0; t < 60 && tested < 25; ++t) {
        const std::size_t c = 1 + rng() % 5, r = c + rng() % 3;
        Mat m = random_mat(rng, r, c);
        if (rank(m) != c) continue;
        ++tested;
        Vec v(c);
        for (auto& e : v) e = Rat(static_cast<int>(rng() % 19) - 9, 1 + rng() % 4);
        auto x = solve(m, m.apply(v));
        ASSERT_TRUE(x);
        EXPECT_EQ(*x, v);
    }
    EXPECT_GE(tested, 10);
}

TEST(Inverse, ProductIsIdentity) {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        Mat m = random_mat(rng, 4, 4);
        auto inv = inverse(m);
        if (rank(m) < 4) {
            EXPECT_FALSE(inv);
            continue;
        }
        ASSERT_TRUE(inv);
        EXPECT_EQ(m * *inv, Mat::identity(4));
    }
}

TEST(Spans, IntersectionAndMembership) {
    std::vector<Vec> a{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}};
    std::vector<Vec> b{{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    auto i = intersect(a, b, 3);
    ASSERT_EQ(i.size(), 1u);
    EXPECT_TRUE(same_span(i, std::vector<Vec>{{Rat(0), Rat(2), Rat(0)}}, 3));
    EXPECT_TRUE(in_span(a, Vec{Rat(3), Rat(-1), Rat(0)}));
    EXPECT_FALSE(in_span(a, Vec{Rat(0), Rat(0), Rat(1)}));
    auto c = coordinates(a, Vec{Rat(3), Rat(-1), Rat(0)});
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (Vec{Rat(3), Rat(-1)}));
}

TEST(Contract, IdentityMatrixWithVector) {
    TensorElem id = TensorElem::from_matrix(Mat::identity(3));
    TensorElem v({3}, Vec{Rat(1), Rat(2, 3), Rat(-5)});
    const std::pair<std::size_t, std::size_t> p[] = {{1, 0}};
    EXPECT_EQ(contract(id, v, p), v);
}

TEST(Contract, TrivialRTimesTrivialInverse) {
    // R = Rbar = 1 (x) 1 in kZ2 (x) kZ2; (R Rbar)_{kl} = R_{ab} Rbar_{cd} m_{ack} m_{bdl}.
    TensorElem one({2, 2});
    one.at2(0, 0) = Rat(1);
    TensorElem m({2, 2, 2});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.coeffs()[(i * 2 + j) * 2 + ((i + j) % 2)] = Rat(1);
    const std::pair<std::size_t, std::size_t> p0[] = {{0, 0}};
    TensorElem t = contract(one, m, p0);  // legs b, c, k
    const std::pair<std::size_t, std::size_t> p1[] = {{1, 0}};
    t = contract(t, one, p1);  // legs b, k, d
    const std::pair<std::size_t, std::size_t> p2[] = {{0, 0}, {2, 1}};
    t = contract(t, m, p2);  // legs k, l
    EXPECT_EQ(t, one);
}

TEST(Contract, CasimirOfPointwiseAlgebraMultipliesToUnit) {
    const std::size_t n = 3;
    TensorElem x({n, n});
    for (std::size_t i = 0; i < n; ++i) x.at2(i, i) = Rat(1);
    TensorElem m({n, n, n});
    for (std::size_t i = 0; i < n; ++i) m.coeffs()[(i * n + i) * n + i] = Rat(1);
    const std::pair<std::size_t, std::size_t> p[] = {{0, 0}, {1, 1}};
    TensorElem r = contract(x, m, p);
    EXPECT_EQ(r, TensorElem({n}, Vec(n, Rat(1))));
}

TEST(Contract, IsMultilinear) {
    std::mt19937 rng(9);
    auto rnd = [&](std::vector<std::size_t> dims) {
        TensorElem t(dims);
        for (auto& c : t.coeffs()) c = Rat(static_cast<int>(rng() % 7) - 3, 1 + rng() % 2);
        return t;
    };
    for (int t = 0; t < 10; ++t) {
        TensorElem a = rnd({2, 3, 2}), a2 = rnd({2, 3, 2}), b = rnd({3, 2});
        const std::pair<std::size_t, std::size_t> p[] = {{1, 0}};
        EXPECT_EQ(contract(a + a2, b, p), contract(a, b, p) + contract(a2, b, p));
    }
}

TEST(Contract, MismatchedLegsThrow) {
    const std::pair<std::size_t, std::size_t> p[] = {{0, 0}};
    EXPECT_THROW(contract(TensorElem({2}), TensorElem({3}), p), std::invalid_argument);
}

TEST(Tensor3, BuilderMergesAndDropsZeros) {
    Tensor3::Builder b(2, 2, 2);
    b.add(0, 1, 1, Rat(1));
    b.add(0, 1, 1, Rat(-1));
    b.add(1, 0, 1, Rat(2));
    b.add(1, 0, 0, Rat(3));
    Tensor3 t = std::move(b).build();
    EXPECT_EQ(t.nonzeros(), 2u);
    EXPECT_EQ(t.get(1, 0, 1), Rat(2));
    EXPECT_EQ(t.fiber(1, 0).size(), 2u);
    EXPECT_TRUE(t.fiber(0, 1).empty());
}

TEST(TensorElem, PermuteRoundTrip) {
    TensorElem t({2, 3, 4});
    for (std::size_t f = 0; f < t.size(); ++f) t.coeffs()[f] = Rat(static_cast<std::int64_t>(f));
    const std::size_t p[] = {2, 0, 1}, q[] = {1, 2, 0};
    TensorElem u = t.permute(p);
    EXPECT_EQ(u.dims(), (std::vector<std::size_t>{4, 2, 3}));
    EXPECT_EQ(u.permute(q), t);
}

}  // namespace
}  // namespace wha
