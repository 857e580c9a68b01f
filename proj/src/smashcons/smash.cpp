#include <stdexcept>

#include "wha/smashcons.hpp"

namespace wha {

namespace {

Vec h_mul(const HopfData& h, std::span<const Rat> x, std::span<const Rat> y) { return h.algebra.mul(x, y); }

// Two-leg element sum_ab t[a][b] u_a (x) v_b for families u, v of vectors of length n.
TensorElem two_leg_from(std::size_t n, const std::vector<std::pair<Vec, Vec>>& terms) {
    TensorElem out({n, n});
    for (const auto& [u, v] : terms) {
        const auto us = nonzeros(u), vs = nonzeros(v);
        for (const auto& [i, a] : us)
            for (const auto& [j, b] : vs) out.at2(i, j) += a * b;
    }
    return out;
}

void require_shapes(const SmashProduct& s, const QTStructure& q, const SeparabilityData& sep) {
    const std::size_t na = s.dim_a(), nh = s.dim_h();
    if (q.dim() != nh) throw std::invalid_argument("smash: R-matrix lives on a Hopf algebra of the wrong dimension");
    if (sep.x.dims() != std::vector<std::size_t>{na, na} || sep.alpha.size() != na)
        throw std::invalid_argument("smash: separability data does not match A");
}

}  // namespace

Vec SmashProduct::pure(std::span<const Rat> a, std::span<const Rat> h) const {
    Vec out(dim_a() * dim_h());
    const auto hs = nonzeros(h);
    for (const auto& [i, ai] : nonzeros(a))
        for (const auto& [j, hj] : hs) out[index(i, j)] += ai * hj;
    return out;
}

Vec hit_left(const StructureAlgebra& A, std::span<const Rat> a, std::span<const Rat> f) {
    const Mat r = A.right_mult(a);  // b -> b a
    return r.transpose().apply(f);
}

Vec hit_right(const StructureAlgebra& A, std::span<const Rat> f, std::span<const Rat> a) {
    const Mat l = A.left_mult(a);  // b -> a b
    return l.transpose().apply(f);
}

Vec transpose_action(const ModuleAlgebraData& m, std::span<const Rat> f, std::span<const Rat> h) {
    Mat act(m.A.dim, m.A.dim);
    for (std::size_t i = 0; i < h.size(); ++i)
        if (!h[i].is_zero()) {
            const Mat ai = m.action_matrix(i);
            for (std::size_t r = 0; r < act.rows(); ++r)
                for (std::size_t c = 0; c < act.cols(); ++c) act(r, c) += h[i] * ai(r, c);
        }
    return act.transpose().apply(f);
}

SmashProduct smash_algebra(const ModuleAlgebraData& A) {
    const HopfData& H = A.host;
    const std::size_t na = A.A.dim, nh = H.dim(), n = na * nh;
    SmashProduct s{A, {}};
    Tensor3::Builder b(n, n, n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            for (const Entry3& d : H.coalgebra.comult.slice(j))
                for (std::size_t k = 0; k < na; ++k)
                    for (const Entry3& act : A.action.fiber(d.j, k))
                        for (const Entry3& am : A.A.mult.fiber(i, act.k)) {
                            const Rat c = d.c * act.c * am.c;
                            for (std::size_t l = 0; l < nh; ++l)
                                for (const Entry3& hm : H.algebra.mult.fiber(d.k, l))
                                    b.add(s.index(i, j), s.index(k, l), s.index(am.k, hm.k), c * hm.c);
                        }
    s.carrier.dim = n;
    s.carrier.mult = std::move(b).build();
    s.carrier.unit = s.pure(A.A.unit, H.algebra.unit);
    return s;
}

SmashWeakHopf smash_weak_structure(const SmashProduct& s, const QTStructure& q, const SeparabilityData& sep,
                                   AntipodeGuard guard) {
    require_shapes(s, q, sep);
    const Witnessed qc = is_quantum_commutative(q, s.A);
    if (!qc) throw PreconditionError("quantum commutative", qc.witness, "A is not quantum commutative over R");
    const Witnessed ut = u_acts_trivially(q, s.A);
    if (!ut && guard == AntipodeGuard::require)
        throw PreconditionError("u acts trivially", ut.witness, "the Drinfeld element acts nontrivially on A");

    const HopfData& H = s.A.host;
    const StructureAlgebra& A = s.A.A;
    const StructureAlgebra& C = s.carrier;
    const std::size_t na = s.dim_a(), nh = s.dim_h(), n = C.dim;
    const std::vector<std::size_t> rs = q.R.support(), xs = sep.x.support();
    auto hb = [&](std::size_t i) { return unit_vec(nh, i); };
    auto ab = [&](std::size_t i) { return unit_vec(na, i); };

    SmashWeakHopf w{s, q, sep, {}, {}, bool(ut)};
    WeakHopfData& out = w.wha;
    out.algebra = C;

    // Delta~ straight from its defining formula.
    Tensor3::Builder cb(n, n, n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            for (std::size_t fr : rs) {
                const std::size_t rc = fr / nh, rd = fr % nh;
                const Rat& rcoef = q.R.coeffs()[fr];
                for (std::size_t fx : xs) {
                    const std::size_t xa = fx / na, xb = fx % na;
                    const Vec left_a = A.mul(ab(i), s.A.act(hb(rd), ab(xa)));
                    const Rat c0 = rcoef * sep.x.coeffs()[fx];
                    for (const Entry3& d : H.coalgebra.comult.slice(j)) {
                        const Vec left = s.pure(left_a, h_mul(H, hb(rc), hb(d.j)));
                        const std::size_t right = s.index(xb, d.k);
                        for (const auto& [l, lc] : nonzeros(left)) cb.add(s.index(i, j), l, right, c0 * d.c * lc);
                    }
                }
            }
    out.coalgebra.dim = n;
    out.coalgebra.comult = std::move(cb).build();
    out.coalgebra.counit = Vec(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nh; ++j) out.coalgebra.counit[s.index(i, j)] = sep.alpha[i] * H.coalgebra.counit[j];

    // sigma(a) = R^2 . a # R^1
    std::vector<Vec> sigma(na, Vec(n));
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t fr : rs)
            axpy(sigma[a], q.R.coeffs()[fr], s.pure(s.A.act(hb(fr % nh), ab(a)), hb(fr / nh)));
    auto sigma_of = [&](std::span<const Rat> v) {
        Vec o(n);
        for (const auto& [a, c] : nonzeros(v)) axpy(o, c, sigma[a]);
        return o;
    };

    if (w.has_antipode) {
        out.antipode = Mat(n, n);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nh; ++j)
                out.antipode.set_column(s.index(i, j), C.mul(s.pure(A.unit, H.antipode.column(j)), sigma[i]));
    }

    // Helper identities.
    auto& r = w.identities;
    const Vec one_h = H.algebra.unit;
    CheckAccumulator e11("sigma_commutes_with_A"), e12("sigma_anti_multiplicative");
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < na; ++b) {
            const Vec a1 = s.pure(ab(a), one_h);
            e11.expect(C.mul(a1, sigma[b]) == C.mul(sigma[b], a1), {a, b});
            e12.expect(C.mul(sigma[a], sigma[b]) == sigma_of(A.mul(ab(b), ab(a))), {a, b});
        }
    r.add(std::move(e11).done());
    r.add(std::move(e12).done());

    const TensorElem D = out.coalgebra.coprod(C.unit);
    {
        std::vector<std::pair<Vec, Vec>> t;
        for (std::size_t fx : xs) t.emplace_back(scale(sigma[fx / na], sep.x.coeffs()[fx]), s.pure(ab(fx % na), one_h));
        r.add("unit_comult_closed_form", two_leg_from(n, t) == D);
    }
    r.add("unit_comult_idempotent", mul_same(C, D, D) == D);

    auto h_split = [&](std::size_t j, std::span<const Rat> a) {
        std::vector<std::pair<Vec, Vec>> t;
        for (const Entry3& d : H.coalgebra.comult.slice(j))
            t.emplace_back(scale(s.pure(a, hb(d.j)), d.c), s.pure(A.unit, hb(d.k)));
        return two_leg_from(n, t);
    };
    CheckAccumulator e13("comult_factors_through_unit"), e14("unit_comult_commutes_with_H");
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            e13.expect(out.coalgebra.coprod(unit_vec(n, s.index(i, j))) == mul_same(C, D, h_split(j, ab(i))), {i, j});
    for (std::size_t j = 0; j < nh; ++j) {
        const TensorElem hs = h_split(j, A.unit);
        e14.expect(mul_same(C, D, hs) == mul_same(C, hs, D), {j});
    }
    r.add(std::move(e13).done());
    r.add(std::move(e14).done());

    // Closed forms of the counital maps.
    const CounitalData cd = counital_data(out);
    Mat es(n, n), et(n, n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nh; ++j) {
            Vec v(n);
            for (std::size_t fr : rs)
                axpy(v, q.R.coeffs()[fr],
                     s.pure(s.A.act(h_mul(H, hb(fr % nh), H.antipode.column(j)), ab(i)), hb(fr / nh)));
            es.set_column(s.index(i, j), v);
            et.set_column(s.index(i, j), s.pure(scale(ab(i), H.coalgebra.counit[j]), one_h));
        }
    r.add("eps_s_closed_form", es == cd.eps_s);
    r.add("eps_t_closed_form", et == cd.eps_t);
    std::vector<Vec> tgt, src;
    for (std::size_t a = 0; a < na; ++a) tgt.push_back(s.pure(ab(a), one_h)), src.push_back(sigma[a]);
    r.add("target_is_A_hash_1", same_span(cd.target_basis, tgt, n) && span_basis(tgt, n).size() == na);
    r.add("source_is_sigma_A", same_span(cd.source_basis, src, n));
    return w;
}

SmashQT smash_qt(const SmashWeakHopf& w) {
    const MugerResult mg = muger_membership(w.q, w.smash.A);
    if (!mg) throw PreconditionError("Mueger centre", mg.value.witness, "A is not in the Mueger centre");
    const SmashProduct& s = w.smash;
    const StructureAlgebra& C = s.carrier;
    const HopfData& H = s.A.host;
    const std::size_t nh = s.dim_h(), n = C.dim;
    const TensorElem D = w.wha.coalgebra.coprod(C.unit);
    const TensorElem Dop = flip(D);

    auto lift = [&](const TensorElem& r) {
        std::vector<std::pair<Vec, Vec>> t;
        for (std::size_t f : r.support())
            t.emplace_back(scale(s.pure(s.A.A.unit, unit_vec(nh, f / nh)), r.coeffs()[f]),
                           s.pure(s.A.A.unit, unit_vec(nh, f % nh)));
        return two_leg_from(n, t);
    };
    const TensorElem Rs = lift(w.q.R);
    const TensorElem Rsbar = lift(apply_on_leg(w.q.R, 0, H.antipode));

    SmashQT out;
    out.wq.host = w.wha;
    out.wq.Rw = mul_same(C, mul_same(C, Dop, Rs), D);
    out.wq.Rw_bar = mul_same(C, mul_same(C, D, Rsbar), Dop);
    auto& r = out.identities;
    r.add("R_simplified_right", mul_same(C, Rs, D) == out.wq.Rw);
    r.add("R_simplified_left", mul_same(C, Dop, Rs) == out.wq.Rw);
    r.add("Rbar_simplified_left", mul_same(C, D, Rsbar) == out.wq.Rw_bar);
    r.add("Rbar_simplified_right", mul_same(C, Rsbar, Dop) == out.wq.Rw_bar);
    if (w.has_antipode) r.facts["Rbar_is_S_R"] = apply_on_leg(out.wq.Rw, 0, w.wha.antipode) == out.wq.Rw_bar;
    return out;
}

ThetaEmbedding theta_embed(const SmashProduct& s) {
    const HopfData& H = s.A.host;
    const auto sinv = antipode_inverse(H);
    if (!sinv) throw PreconditionError("invertible antipode");
    const StructureAlgebra& A = s.A.A;
    const std::size_t na = s.dim_a(), nh = s.dim_h();
    ThetaEmbedding t;
    t.target = tensor_algebra(matrix_algebra(na), H.algebra);
    t.map = Mat(t.target.dim, s.carrier.dim);
    // theta(a # h)_{m,k} = [S^-1(h) . (e_m a)]_k
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nh; ++j) {
            Vec col(t.target.dim);
            for (const Entry3& d : H.coalgebra.comult.slice(j)) {
                const Vec sh = sinv->column(d.j);
                for (std::size_t m = 0; m < na; ++m) {
                    const Vec img = s.A.act(sh, A.mul(unit_vec(na, m), unit_vec(na, i)));
                    for (const auto& [k, c] : nonzeros(img)) col[(m * na + k) * nh + d.k] += d.c * c;
                }
            }
            t.map.set_column(s.index(i, j), col);
        }
    t.report.merge(check_algebra_map(t.map, s.carrier, t.target));
    const std::size_t rk = rank(t.map);
    t.report.add("injective", rk == s.carrier.dim, {}, "rank " + std::to_string(rk));
    return t;
}

}  // namespace wha
