#include "wha/doubles.hpp"

#include <stdexcept>

namespace wha {

namespace {

struct Triple {
    std::size_t a, b, c;
    Rat coef;
};

// (Delta (x) id) Delta(e_i) as a list of basis triples.
std::vector<Triple> double_coproduct(const StructureCoalgebra& c, std::size_t i) {
    std::vector<Triple> out;
    for (const Entry3& e : c.comult.slice(i))
        for (const Entry3& f : c.comult.slice(e.j)) out.push_back({f.j, f.k, e.k, e.c * f.c});
    return out;
}

// For each i, the pairs (j, k) with mult[j][k][i] != 0, i.e. the coproduct of p_i in H^*.
std::vector<std::vector<Triple>> dual_coproducts(const StructureAlgebra& a) {
    std::vector<std::vector<Triple>> out(a.dim);
    for (std::size_t j = 0; j < a.dim; ++j)
        for (const Entry3& e : a.mult.slice(j)) out[e.k].push_back({j, e.j, 0, e.c});
    return out;
}

}  // namespace

QTStructure drinfeld_double(const HopfData& h) {
    const std::size_t n = h.dim(), N = n * n;
    const auto Sinv_opt = antipode_inverse(h);
    if (!Sinv_opt) throw PreconditionError("invertible antipode");
    const Mat& Sinv = *Sinv_opt;
    const StructureAlgebra& A = h.algebra;
    const StructureCoalgebra& C = h.coalgebra;
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };

    // T[b3][b1](c, k) = coefficient of e_c in S^{-1}(e_b3) e_k e_b1.
    std::vector<std::vector<Mat>> T(n, std::vector<Mat>(n));
    auto get_T = [&](std::size_t b3, std::size_t b1) -> const Mat& {
        Mat& m = T[b3][b1];
        if (m.rows() == 0) {
            m = Mat(n, n);
            const Vec s = Sinv.column(b3);
            for (std::size_t k = 0; k < n; ++k) m.set_column(k, A.mul(A.mul(s, unit_vec(n, k)), unit_vec(n, b1)));
        }
        return m;
    };

    HopfData D;
    D.algebra.dim = D.coalgebra.dim = N;
    Tensor3::Builder mb(N, N, N);
    for (std::size_t b = 0; b < n; ++b) {
        const auto d2 = double_coproduct(C, b);
        for (std::size_t c = 0; c < n; ++c) {
            // g^{(t)}_y = <(b1 -> p_c <- S^{-1} b3), e_y> for each triple t of Delta^2(e_b).
            for (const Triple& t : d2) {
                const Mat& Tm = get_T(t.c, t.a);
                Vec g(n);
                for (std::size_t y = 0; y < n; ++y) g[y] = Tm(c, y);
                const SparseVec gs = nonzeros(g);
                if (gs.empty()) continue;
                for (std::size_t a = 0; a < n; ++a) {
                    // r_k = (p_a * g)(e_k) = sum_y Delta[k][a][y] g_y
                    Vec r(n);
                    for (std::size_t k = 0; k < n; ++k)
                        for (const Entry3& e : C.comult.fiber(k, a)) r[k] += e.c * g[e.k];
                    const SparseVec rs = nonzeros(r);
                    for (std::size_t d = 0; d < n; ++d)
                        for (const Entry3& z : A.mult.fiber(t.b, d))
                            for (const auto& [k, rk] : rs) mb.add(idx(a, b), idx(c, d), idx(k, z.k), t.coef * rk * z.c);
                }
            }
        }
    }
    D.algebra.mult = std::move(mb).build();
    D.algebra.unit = Vec(N);
    for (const auto& [i, ci] : nonzeros(C.counit))
        for (const auto& [j, uj] : nonzeros(A.unit)) D.algebra.unit[idx(i, j)] = ci * uj;

    const auto dco = dual_coproducts(A);
    Tensor3::Builder cb(N, N, N);
    for (std::size_t i = 0; i < n; ++i)
        for (const Triple& p : dco[i])  // Delta(p_i) = sum p_j (x) p_k, with j = p.a, k = p.b
            for (std::size_t b = 0; b < n; ++b)
                for (const Entry3& e : C.comult.slice(b)) cb.add(idx(i, b), idx(p.b, e.j), idx(p.a, e.k), p.coef * e.c);
    D.coalgebra.comult = std::move(cb).build();
    D.coalgebra.counit = Vec(N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < n; ++b) D.coalgebra.counit[idx(i, b)] = A.unit[i] * C.counit[b];

    D.antipode = Mat(N, N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < n; ++b) {
            Vec left(N), right(N);
            for (const auto& [a, ca] : nonzeros(C.counit))
                for (const auto& [j, sj] : nonzeros(h.antipode.column(b))) left[idx(a, j)] += ca * sj;
            for (std::size_t k = 0; k < n; ++k)
                if (!Sinv(i, k).is_zero())
                    for (const auto& [j, uj] : nonzeros(A.unit)) right[idx(k, j)] += Sinv(i, k) * uj;
            D.antipode.set_column(idx(i, b), D.algebra.mul(left, right));
        }

    TensorElem R({N, N});
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [a, ca] : nonzeros(C.counit))
            for (const auto& [j, uj] : nonzeros(A.unit)) R.at2(idx(a, i), idx(i, j)) += ca * uj;

    const VerificationReport hr = verify_hopf(D);
    if (!hr.ok()) throw std::logic_error("drinfeld_double: constructed double fails the Hopf axioms\n" + hr.summary());
    QTStructure q = make_qt(std::move(D), std::move(R));
    const VerificationReport qr = verify_qt(q);
    if (!qr.ok()) throw std::logic_error("drinfeld_double: canonical R fails the QT axioms\n" + qr.summary());
    return q;
}

ModuleAlgebraData double_module_algebra(const HopfData& h, const QTStructure& dh) {
    const std::size_t n = h.dim();
    if (dh.dim() != n * n) throw std::invalid_argument("double_module_algebra: dh is not the double of h");
    const auto Sinv = antipode_inverse(h);
    if (!Sinv) throw PreconditionError("invertible antipode");
    const Tensor3 ad = adjoint_action(h);
    // P[a] = matrix of l -> <p_a, S^{-1}(l_(1))> l_(2)
    std::vector<Mat> P(n, Mat(n, n));
    for (std::size_t l = 0; l < n; ++l)
        for (const Entry3& e : h.coalgebra.comult.slice(l))
            for (std::size_t a = 0; a < n; ++a)
                if (!(*Sinv)(a, e.j).is_zero()) P[a](e.k, l) += e.c * (*Sinv)(a, e.j);
    Tensor3::Builder b(n * n, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t hh = 0; hh < n; ++hh)
            for (std::size_t l = 0; l < n; ++l)
                b.add_fiber(a * n + hh, l, P[a].apply(ad.fiber_vec(hh, l)));
    return make_module_algebra(dh.host, h.algebra, std::move(b).build());
}

StructureAlgebra heisenberg_double(const HopfData& h) {
    const std::size_t n = h.dim(), N = n * n;
    const StructureAlgebra& A = h.algebra;
    const StructureCoalgebra& C = h.coalgebra;
    const auto dco = dual_coproducts(A);
    // Dual product p_k p_d = sum_i Delta[i][k][d] p_i.
    std::vector<std::vector<std::vector<std::pair<std::size_t, Rat>>>> pp(n, std::vector<std::vector<std::pair<std::size_t, Rat>>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (const Entry3& e : C.comult.slice(i)) pp[e.j][e.k].emplace_back(i, e.c);
    // hit[j](c) = p_j . e_c = sum Delta[c][c1][j] e_c1
    std::vector<std::vector<std::vector<std::pair<std::size_t, Rat>>>> hit(n, std::vector<std::vector<std::pair<std::size_t, Rat>>>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (const Entry3& e : C.comult.slice(c)) hit[e.k][c].emplace_back(e.j, e.c);

    StructureAlgebra H;
    H.dim = N;
    Tensor3::Builder b(N, N, N);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t bb = 0; bb < n; ++bb)
            for (const Triple& t : dco[bb])  // p_bb -> p_j (x) p_k
                for (std::size_t c = 0; c < n; ++c)
                    for (const auto& [c1, hc] : hit[t.a][c])
                        for (const Entry3& ac : A.mult.fiber(a, c1))
                            for (std::size_t d = 0; d < n; ++d)
                                for (const auto& [i, pc] : pp[t.b][d])
                                    b.add(a * n + bb, c * n + d, ac.k * n + i, t.coef * hc * ac.c * pc);
    H.mult = std::move(b).build();
    H.unit = Vec(N);
    for (const auto& [i, ui] : nonzeros(A.unit))
        for (const auto& [j, cj] : nonzeros(C.counit)) H.unit[i * n + j] = ui * cj;
    return H;
}

}  // namespace wha
