#include "wha/hopfcore.hpp"

#include <algorithm>
#include <stdexcept>

namespace wha {

// --- StructureAlgebra / StructureCoalgebra ------------------------------------

Vec StructureAlgebra::mul(std::span<const Rat> x, std::span<const Rat> y) const {
    if (x.size() != dim || y.size() != dim) throw std::invalid_argument("StructureAlgebra::mul: dimension mismatch");
    Vec out(dim);
    const SparseVec ys = nonzeros(y);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& [j, yj] : ys) {
            const Rat c = x[i] * yj;
            for (const Entry3& e : mult.fiber(i, j)) out[e.k] += c * e.c;
        }
    }
    return out;
}

Mat StructureAlgebra::left_mult(std::span<const Rat> x) const {
    Mat m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (const Entry3& e : mult.slice(i)) m(e.k, e.j) += x[i] * e.c;
    }
    return m;
}

Mat StructureAlgebra::right_mult(std::span<const Rat> x) const {
    Mat m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (const Entry3& e : mult.slice(i))
            if (!x[e.j].is_zero()) m(e.k, i) += x[e.j] * e.c;
    return m;
}

bool StructureAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (mul_basis(i, j) != mul_basis(j, i)) return false;
    return true;
}

TensorElem StructureCoalgebra::coprod(std::span<const Rat> x) const {
    TensorElem t({dim, dim});
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (const Entry3& e : comult.slice(i)) t.at2(e.j, e.k) += x[i] * e.c;
    }
    return t;
}

// --- Groups --------------------------------------------------------------------

std::size_t validate_group(const GroupTable& g) {
    const std::size_t n = g.elements.size();
    if (n == 0) throw std::invalid_argument("group table: no elements");
    if (g.table.size() != n) throw std::invalid_argument("group table: wrong number of rows");
    for (const auto& row : g.table) {
        if (row.size() != n) throw std::invalid_argument("group table: ragged row");
        for (std::size_t v : row)
            if (v >= n) throw std::invalid_argument("group table: entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
                    throw std::invalid_argument("group table: associativity fails at (" + g.elements[a] + "," +
                                                g.elements[b] + "," + g.elements[c] + ")");
    std::size_t e = n;
    for (std::size_t c = 0; c < n && e == n; ++c) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = g.table[c][a] == a && g.table[a][c] == a;
        if (ok) e = c;
    }
    if (e == n) throw std::invalid_argument("group table: no identity element");
    for (std::size_t a = 0; a < n; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < n && !found; ++b) found = g.table[a][b] == e && g.table[b][a] == e;
        if (!found) throw std::invalid_argument("group table: element " + g.elements[a] + " has no inverse");
    }
    return e;
}

std::vector<std::size_t> group_inverses(const GroupTable& g) {
    const std::size_t e = validate_group(g);
    const std::size_t n = g.elements.size();
    std::vector<std::size_t> inv(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (g.table[a][b] == e) inv[a] = b;
    return inv;
}

GroupTable cyclic_group(std::size_t n) {
    GroupTable g;
    for (std::size_t i = 0; i < n; ++i) g.elements.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    g.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
    return g;
}

GroupTable symmetric_group_s3() {
    // Permutations of {0,1,2} as images; product (p*q)(x) = p(q(x)).
    const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    GroupTable g;
    g.elements = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    g.table.assign(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            g.table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return g;
}

GroupTable trivial_group() { return GroupTable{{"e"}, {{0}}}; }

StructureAlgebra pointwise_algebra(std::size_t n) {
    StructureAlgebra a;
    a.dim = n;
    Tensor3::Builder b(n, n, n);
    for (std::size_t i = 0; i < n; ++i) b.add(i, i, i, Rat(1));
    a.mult = std::move(b).build();
    a.unit = Vec(n, Rat(1));
    return a;
}

StructureAlgebra matrix_algebra(std::size_t n) {
    // Basis E_ij at index i*n + j.
    StructureAlgebra a;
    a.dim = n * n;
    Tensor3::Builder b(a.dim, a.dim, a.dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) b.add(i * n + j, j * n + l, i * n + l, Rat(1));
    a.mult = std::move(b).build();
    a.unit = Vec(a.dim);
    for (std::size_t i = 0; i < n; ++i) a.unit[i * n + i] = Rat(1);
    return a;
}

StructureAlgebra opposite_algebra(const StructureAlgebra& a) {
    StructureAlgebra o;
    o.dim = a.dim;
    Tensor3::Builder b(a.dim, a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (const Entry3& e : a.mult.slice(i)) b.add(e.j, i, e.k, e.c);
    o.mult = std::move(b).build();
    o.unit = a.unit;
    return o;
}

StructureAlgebra tensor_algebra(const StructureAlgebra& a, const StructureAlgebra& b) {
    StructureAlgebra t;
    const std::size_t m = b.dim;
    t.dim = a.dim * m;
    Tensor3::Builder tb(t.dim, t.dim, t.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (const Entry3& x : a.mult.slice(i))
            for (std::size_t j = 0; j < m; ++j)
                for (const Entry3& y : b.mult.slice(j))
                    tb.add(i * m + j, x.j * m + y.j, x.k * m + y.k, x.c * y.c);
    t.mult = std::move(tb).build();
    t.unit = Vec(t.dim);
    for (const auto& [i, u] : nonzeros(a.unit))
        for (const auto& [j, v] : nonzeros(b.unit)) t.unit[i * m + j] = u * v;
    return t;
}

StructureAlgebra restrict_algebra(const StructureAlgebra& a, std::span<const Vec> basis) {
    const BasisCoords coords(basis, a.dim);
    const std::size_t k = basis.size();
    StructureAlgebra r;
    r.dim = k;
    Tensor3::Builder b(k, k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const auto x = coords(a.mul(basis[i], basis[j]));
            if (!x) throw std::invalid_argument("restrict_algebra: span not closed under multiplication");
            for (const auto& [t, c] : nonzeros(*x)) b.add(i, j, t, c);
        }
    r.mult = std::move(b).build();
    const auto u = coords(a.unit);
    if (!u) throw std::invalid_argument("restrict_algebra: unit outside the span");
    r.unit = *u;
    return r;
}

// --- Verifiers -----------------------------------------------------------------

namespace {

void add_fiber_to(SparseAcc& acc, const Tensor3& t, std::size_t i, std::size_t j, const Rat& c) {
    for (const Entry3& e : t.fiber(i, j)) acc.add(e.k, c * e.c);
}

}  // namespace

VerificationReport verify_algebra(const StructureAlgebra& a) {
    VerificationReport r;
    const std::size_t n = a.dim;
    if (a.mult.shape() != std::array<std::size_t, 3>{n, n, n} || a.unit.size() != n) {
        r.add("shape", false, {}, "tensor or unit does not match dim");
        return r;
    }
    CheckAccumulator assoc("associativity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto ij = a.mult.fiber(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                SparseAcc diff;
                for (const Entry3& e : ij) add_fiber_to(diff, a.mult, e.k, k, e.c);
                for (const Entry3& e : a.mult.fiber(j, k)) add_fiber_to(diff, a.mult, i, e.k, -e.c);
                if (!diff.is_zero()) assoc.fail({i, j, k});
            }
        }
    r.add(std::move(assoc).done());
    CheckAccumulator lu("left_unit"), ru("right_unit");
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ei = unit_vec(n, i);
        lu.expect(a.mul(a.unit, ei) == ei, {i});
        ru.expect(a.mul(ei, a.unit) == ei, {i});
    }
    r.add(std::move(lu).done());
    r.add(std::move(ru).done());
    return r;
}

VerificationReport verify_coalgebra(const StructureCoalgebra& c) {
    VerificationReport r;
    const std::size_t n = c.dim;
    if (c.comult.shape() != std::array<std::size_t, 3>{n, n, n} || c.counit.size() != n) {
        r.add("shape", false, {}, "tensor or counit does not match dim");
        return r;
    }
    CheckAccumulator coassoc("coassociativity"), lc("left_counit"), rc("right_counit");
    for (std::size_t i = 0; i < n; ++i) {
        SparseAcc diff;
        Vec left(n), right(n);
        for (const Entry3& e : c.comult.slice(i)) {
            for (const Entry3& f : c.comult.slice(e.j))
                diff.add((std::uint64_t(f.j) * n + f.k) * n + e.k, e.c * f.c);
            for (const Entry3& f : c.comult.slice(e.k))
                diff.add((std::uint64_t(e.j) * n + f.j) * n + f.k, -(e.c * f.c));
            left[e.k] += c.counit[e.j] * e.c;
            right[e.j] += c.counit[e.k] * e.c;
        }
        coassoc.expect(diff.is_zero(), {i});
        lc.expect(left == unit_vec(n, i), {i});
        rc.expect(right == unit_vec(n, i), {i});
    }
    r.add(std::move(coassoc).done());
    r.add(std::move(lc).done());
    r.add(std::move(rc).done());
    return r;
}

VerificationReport verify_hopf(const HopfData& h) {
    VerificationReport r;
    r.merge(verify_algebra(h.algebra), "algebra");
    r.merge(verify_coalgebra(h.coalgebra), "coalgebra");
    const std::size_t n = h.dim();
    if (!r.ok()) return r;
    if (h.coalgebra.dim != n || h.antipode.rows() != n || h.antipode.cols() != n) {
        r.add("shape", false, {}, "algebra, coalgebra and antipode dimensions differ");
        return r;
    }
    const auto& A = h.algebra;
    const auto& C = h.coalgebra;

    CheckAccumulator dm("comult_multiplicative");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SparseAcc diff;
            for (const Entry3& e : A.mult.fiber(i, j))
                for (const Entry3& f : C.comult.slice(e.k)) diff.add(std::uint64_t(f.j) * n + f.k, e.c * f.c);
            for (const Entry3& a : C.comult.slice(i))
                for (const Entry3& b : C.comult.slice(j)) {
                    const Rat c = -(a.c * b.c);
                    for (const Entry3& x : A.mult.fiber(a.j, b.j))
                        for (const Entry3& y : A.mult.fiber(a.k, b.k))
                            diff.add(std::uint64_t(x.k) * n + y.k, c * x.c * y.c);
                }
            dm.expect(diff.is_zero(), {i, j});
        }
    r.add(std::move(dm).done());

    TensorElem one2 = pure(std::vector<Vec>{A.unit, A.unit});
    r.add("comult_unit", C.coprod(A.unit) == one2);

    CheckAccumulator em("counit_multiplicative");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) em.expect(C.eps(A.mul_basis(i, j)) == C.counit[i] * C.counit[j], {i, j});
    r.add(std::move(em).done());
    r.add("counit_unit", C.eps(A.unit) == Rat(1));

    CheckAccumulator sl("antipode_left"), sr("antipode_right");
    for (std::size_t i = 0; i < n; ++i) {
        Vec left(n), right(n);
        for (const Entry3& e : C.comult.slice(i)) {
            axpy(left, e.c, A.mul(h.antipode.column(e.j), unit_vec(n, e.k)));
            axpy(right, e.c, A.mul(unit_vec(n, e.j), h.antipode.column(e.k)));
        }
        const Vec expect = scale(A.unit, C.counit[i]);
        sl.expect(left == expect, {i});
        sr.expect(right == expect, {i});
    }
    r.add(std::move(sl).done());
    r.add(std::move(sr).done());
    r.facts["antipode_squared_is_identity"] = h.antipode * h.antipode == Mat::identity(n);
    return r;
}

// --- Constructors ----------------------------------------------------------------

HopfData group_algebra(const GroupTable& g) {
    const std::size_t e = validate_group(g);
    const auto inv = group_inverses(g);
    const std::size_t n = g.elements.size();
    HopfData h;
    h.algebra.dim = n;
    Tensor3::Builder m(n, n, n), d(n, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) m.add(a, b, g.table[a][b], Rat(1));
        d.add(a, a, a, Rat(1));
    }
    h.algebra.mult = std::move(m).build();
    h.algebra.unit = unit_vec(n, e);
    h.coalgebra.dim = n;
    h.coalgebra.comult = std::move(d).build();
    h.coalgebra.counit = Vec(n, Rat(1));
    h.antipode = Mat(n, n);
    for (std::size_t a = 0; a < n; ++a) h.antipode(inv[a], a) = Rat(1);
    return h;
}

HopfData dual_hopf(const HopfData& h) {
    const std::size_t n = h.dim();
    HopfData d;
    d.algebra.dim = d.coalgebra.dim = n;
    Tensor3::Builder m(n, n, n), c(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (const Entry3& e : h.coalgebra.comult.slice(i)) m.add(e.j, e.k, i, e.c);
    for (std::size_t i = 0; i < n; ++i)
        for (const Entry3& e : h.algebra.mult.slice(i)) c.add(e.k, i, e.j, e.c);
    d.algebra.mult = std::move(m).build();
    d.coalgebra.comult = std::move(c).build();
    d.algebra.unit = h.coalgebra.counit;
    d.coalgebra.counit = h.algebra.unit;
    d.antipode = h.antipode.transpose();
    return d;
}

HopfData sweedler_algebra() {
    // Basis 0 = 1, 1 = g, 2 = x, 3 = gx.
    HopfData h;
    h.algebra.dim = h.coalgebra.dim = 4;
    Tensor3::Builder m(4, 4, 4);
    auto word = [](int gpow, int xpow) { return static_cast<std::size_t>(xpow * 2 + gpow); };
    for (int g1 = 0; g1 < 2; ++g1)
        for (int x1 = 0; x1 < 2; ++x1)
            for (int g2 = 0; g2 < 2; ++g2)
                for (int x2 = 0; x2 < 2; ++x2) {
                    if (x1 + x2 > 1) continue;
                    // g^g1 x^x1 g^g2 x^x2 = (-1)^(x1 g2) g^(g1+g2) x^(x1+x2)
                    const Rat sign = (x1 == 1 && g2 == 1) ? Rat(-1) : Rat(1);
                    m.add(word(g1, x1), word(g2, x2), word((g1 + g2) % 2, x1 + x2), sign);
                }
    h.algebra.mult = std::move(m).build();
    h.algebra.unit = unit_vec(4, 0);
    Tensor3::Builder c(4, 4, 4);
    c.add(0, 0, 0, Rat(1));
    c.add(1, 1, 1, Rat(1));
    c.add(2, 2, 0, Rat(1));
    c.add(2, 1, 2, Rat(1));
    c.add(3, 3, 1, Rat(1));
    c.add(3, 0, 3, Rat(1));
    h.coalgebra.comult = std::move(c).build();
    h.coalgebra.counit = Vec{Rat(1), Rat(1), Rat(0), Rat(0)};
    h.antipode = Mat(4, 4);
    h.antipode(0, 0) = Rat(1);
    h.antipode(1, 1) = Rat(1);
    h.antipode(3, 2) = Rat(-1);
    h.antipode(2, 3) = Rat(1);
    return h;
}

std::optional<Mat> antipode_inverse(const HopfData& h) { return inverse(h.antipode); }

HopfData opposites(const HopfData& h, Opposite which) {
    const std::size_t n = h.dim();
    HopfData o = h;
    if (which == Opposite::op || which == Opposite::opcop) {
        Tensor3::Builder m(n, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (const Entry3& e : h.algebra.mult.slice(i)) m.add(e.j, i, e.k, e.c);
        o.algebra.mult = std::move(m).build();
    }
    if (which == Opposite::cop || which == Opposite::opcop) {
        Tensor3::Builder c(n, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (const Entry3& e : h.coalgebra.comult.slice(i)) c.add(i, e.k, e.j, e.c);
        o.coalgebra.comult = std::move(c).build();
    }
    if (which != Opposite::opcop) {
        auto inv = antipode_inverse(h);
        if (!inv) throw PreconditionError("invertible antipode");
        o.antipode = *inv;
    }
    return o;
}

namespace {

// Basis of {v : x v = eps(x) v and v x = eps(x) v for all basis x}.
std::vector<Vec> two_sided_integrals(const StructureAlgebra& a, const Vec& counit) {
    const std::size_t n = a.dim;
    Mat stacked(2 * n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ei = unit_vec(n, i);
        Mat l = a.left_mult(ei), r = a.right_mult(ei);
        for (std::size_t t = 0; t < n; ++t) {
            l(t, t) -= counit[i];
            r(t, t) -= counit[i];
        }
        for (std::size_t row = 0; row < n; ++row)
            for (std::size_t col = 0; col < n; ++col) {
                stacked(2 * i * n + row, col) = l(row, col);
                stacked((2 * i + 1) * n + row, col) = r(row, col);
            }
    }
    return kernel_basis(stacked);
}

}  // namespace

IntegralPair integrals(const HopfData& h) {
    const auto big = two_sided_integrals(h.algebra, h.coalgebra.counit);
    if (big.size() != 1)
        throw PreconditionError("one-dimensional space of two-sided integrals in H", {big.size()});
    const HopfData d = dual_hopf(h);
    const auto small = two_sided_integrals(d.algebra, d.coalgebra.counit);
    if (small.size() != 1)
        throw PreconditionError("one-dimensional space of two-sided integrals in H*", {small.size()});
    IntegralPair ip;
    ip.Lambda = big[0];
    ip.lambda = small[0];
    if (h.coalgebra.eps(ip.Lambda).is_zero()) throw PreconditionError("semisimple H (epsilon(Lambda) != 0)");
    const Rat l1 = dot(ip.lambda, h.algebra.unit);
    if (l1.is_zero()) throw PreconditionError("cosemisimple H (<lambda, 1> != 0)");
    ip.lambda = scale(ip.lambda, l1.inverse());
    const Rat lL = dot(ip.lambda, ip.Lambda);
    if (lL.is_zero()) throw PreconditionError("<lambda, Lambda> != 0");
    ip.Lambda = scale(ip.Lambda, lL.inverse());
    return ip;
}

// --- Maps ------------------------------------------------------------------------------

VerificationReport check_algebra_map(const Mat& f, const StructureAlgebra& src, const StructureAlgebra& dst) {
    VerificationReport r;
    if (f.rows() != dst.dim || f.cols() != src.dim) {
        r.add("shape", false, {}, "map shape does not match source and target");
        return r;
    }
    std::vector<Vec> img(src.dim);
    for (std::size_t i = 0; i < src.dim; ++i) img[i] = f.column(i);
    CheckAccumulator mult("algebra_map.multiplicative");
    for (std::size_t i = 0; i < src.dim; ++i)
        for (std::size_t j = 0; j < src.dim; ++j) {
            Vec lhs(dst.dim);
            for (const Entry3& e : src.mult.fiber(i, j)) axpy(lhs, e.c, img[e.k]);
            mult.expect(lhs == dst.mul(img[i], img[j]), {i, j});
        }
    r.add(std::move(mult).done());
    r.add("algebra_map.unital", f.apply(src.unit) == dst.unit);
    return r;
}

VerificationReport check_map(const Mat& f, const HopfData& src, const HopfData& dst, MapKinds kinds) {
    VerificationReport r;
    if (f.rows() != dst.dim() || f.cols() != src.dim()) {
        r.add("shape", false, {}, "map shape does not match source and target");
        return r;
    }
    if (kinds.algebra) r.merge(check_algebra_map(f, src.algebra, dst.algebra));
    if (kinds.coalgebra) {
        CheckAccumulator cm("coalgebra_map.comultiplicative"), ce("coalgebra_map.counital");
        for (std::size_t i = 0; i < src.dim(); ++i) {
            TensorElem lhs = dst.coalgebra.coprod(f.column(i));
            TensorElem rhs = apply_on_leg(apply_on_leg(src.coalgebra.coprod(unit_vec(src.dim(), i)), 0, f), 1, f);
            cm.expect(lhs == rhs, {i});
            ce.expect(dst.coalgebra.eps(f.column(i)) == src.coalgebra.counit[i], {i});
        }
        r.add(std::move(cm).done());
        r.add(std::move(ce).done());
    }
    if (kinds.antipode) {
        const Mat d = f * src.antipode - dst.antipode * f;
        std::vector<std::size_t> w;
        for (std::size_t c = 0; c < d.cols() && w.empty(); ++c)
            if (!is_zero(d.column(c))) w.push_back(c);
        r.add("antipode_commutes", w.empty(), w);
    }
    if (kinds.injective) {
        const std::size_t rk = rank(f);
        r.add("injective", rk == src.dim(), {}, "rank " + std::to_string(rk) + " of " + std::to_string(src.dim()));
    }
    return r;
}

// --- Multi-leg arithmetic --------------------------------------------------------------

TensorElem mul_legs(std::span<const StructureAlgebra* const> algs, const TensorElem& x, const TensorElem& y) {
    const std::size_t r = x.legs();
    if (y.legs() != r || algs.size() != r) throw std::invalid_argument("mul_legs: leg count mismatch");
    for (std::size_t t = 0; t < r; ++t)
        if (x.dims()[t] != algs[t]->dim || y.dims()[t] != algs[t]->dim)
            throw std::invalid_argument("mul_legs: leg dimension mismatch");
    TensorElem out(x.dims());
    const auto sy = y.support();
    std::vector<std::vector<std::size_t>> yidx;
    yidx.reserve(sy.size());
    for (std::size_t f : sy) yidx.push_back(y.unflat(f));
    std::vector<std::pair<std::size_t, Rat>> cur, next;
    for (std::size_t fx : x.support()) {
        const auto xi = x.unflat(fx);
        for (std::size_t s = 0; s < sy.size(); ++s) {
            cur.assign(1, {0, x.coeffs()[fx] * y.coeffs()[sy[s]]});
            for (std::size_t t = 0; t < r && !cur.empty(); ++t) {
                next.clear();
                const auto fib = algs[t]->mult.fiber(xi[t], yidx[s][t]);
                for (const auto& [f, c] : cur)
                    for (const Entry3& e : fib) next.emplace_back(f * algs[t]->dim + e.k, c * e.c);
                std::swap(cur, next);
            }
            for (const auto& [f, c] : cur) out.coeffs()[f] += c;
        }
    }
    return out;
}

TensorElem mul_same(const StructureAlgebra& a, const TensorElem& x, const TensorElem& y) {
    std::vector<const StructureAlgebra*> algs(x.legs(), &a);
    return mul_legs(algs, x, y);
}

TensorElem apply_on_leg(const TensorElem& x, std::size_t leg, const Mat& f) {
    if (leg >= x.legs() || f.cols() != x.dims()[leg]) throw std::invalid_argument("apply_on_leg: shape mismatch");
    std::vector<SparseVec> cols(f.cols());
    for (std::size_t c = 0; c < f.cols(); ++c) cols[c] = nonzeros(f.column(c));
    std::vector<std::size_t> nd = x.dims();
    nd[leg] = f.rows();
    TensorElem out(nd);
    for (std::size_t fx : x.support()) {
        auto idx = x.unflat(fx);
        const std::size_t src = idx[leg];
        for (const auto& [row, c] : cols[src]) {
            idx[leg] = row;
            out.coeffs()[out.flat(idx)] += x.coeffs()[fx] * c;
        }
    }
    return out;
}

TensorElem comult_on_leg(const TensorElem& x, std::size_t leg, const StructureCoalgebra& c) {
    if (leg >= x.legs() || x.dims()[leg] != c.dim) throw std::invalid_argument("comult_on_leg: shape mismatch");
    std::vector<std::size_t> nd = x.dims();
    nd.insert(nd.begin() + static_cast<std::ptrdiff_t>(leg) + 1, c.dim);
    TensorElem out(nd);
    std::vector<std::size_t> ni(nd.size());
    for (std::size_t fx : x.support()) {
        const auto idx = x.unflat(fx);
        for (std::size_t t = 0, u = 0; t < idx.size(); ++t, ++u) {
            ni[u] = idx[t];
            if (t == leg) ++u;
        }
        for (const Entry3& e : c.comult.slice(idx[leg])) {
            ni[leg] = e.j;
            ni[leg + 1] = e.k;
            out.coeffs()[out.flat(ni)] += x.coeffs()[fx] * e.c;
        }
    }
    return out;
}

TensorElem pure(std::span<const Vec> factors) {
    std::vector<std::size_t> dims;
    for (const Vec& v : factors) dims.push_back(v.size());
    TensorElem out(dims);
    std::vector<std::pair<std::size_t, Rat>> cur{{0, Rat(1)}}, next;
    for (const Vec& v : factors) {
        next.clear();
        const auto nz = nonzeros(v);
        for (const auto& [f, c] : cur)
            for (const auto& [i, vi] : nz) next.emplace_back(f * v.size() + i, c * vi);
        std::swap(cur, next);
    }
    for (const auto& [f, c] : cur) out.coeffs()[f] += c;
    return out;
}

TensorElem embed(const TensorElem& x, std::span<const std::size_t> positions, std::span<const Vec> fill) {
    const std::size_t r = fill.size();
    if (positions.size() != x.legs()) throw std::invalid_argument("embed: positions do not match legs");
    std::vector<int> leg_of(r, -1);
    for (std::size_t t = 0; t < positions.size(); ++t) {
        if (positions[t] >= r || leg_of[positions[t]] != -1) throw std::invalid_argument("embed: bad positions");
        leg_of[positions[t]] = static_cast<int>(t);
    }
    std::vector<std::size_t> dims(r);
    for (std::size_t p = 0; p < r; ++p) dims[p] = leg_of[p] >= 0 ? x.dims()[leg_of[p]] : fill[p].size();
    TensorElem out(dims);
    std::vector<SparseVec> fills(r);
    for (std::size_t p = 0; p < r; ++p)
        if (leg_of[p] < 0) fills[p] = nonzeros(fill[p]);
    for (std::size_t fx : x.support()) {
        const auto idx = x.unflat(fx);
        std::vector<std::pair<std::size_t, Rat>> cur{{0, x.coeffs()[fx]}}, next;
        for (std::size_t p = 0; p < r; ++p) {
            next.clear();
            if (leg_of[p] >= 0) {
                for (const auto& [f, c] : cur) next.emplace_back(f * dims[p] + idx[leg_of[p]], c);
            } else {
                for (const auto& [f, c] : cur)
                    for (const auto& [i, v] : fills[p]) next.emplace_back(f * dims[p] + i, c * v);
            }
            std::swap(cur, next);
        }
        for (const auto& [f, c] : cur) out.coeffs()[f] += c;
    }
    return out;
}

TensorElem flip(const TensorElem& x) {
    const std::size_t perm[2] = {1, 0};
    return x.permute(perm);
}

Vec multiply_out(const StructureAlgebra& a, const TensorElem& x) {
    if (x.legs() != 2 || x.dims()[0] != a.dim || x.dims()[1] != a.dim)
        throw std::invalid_argument("multiply_out: shape mismatch");
    Vec out(a.dim);
    for (std::size_t f : x.support()) {
        const std::size_t i = f / a.dim, j = f % a.dim;
        for (const Entry3& e : a.mult.fiber(i, j)) out[e.k] += x.coeffs()[f] * e.c;
    }
    return out;
}

}  // namespace wha
