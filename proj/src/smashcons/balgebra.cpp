#include <stdexcept>

#include "wha/smashcons.hpp"

namespace wha {

namespace {

struct BContext {
    const ModuleAlgebraData& M;
    const QTStructure& q;
    const SeparabilityData& sep;
    std::size_t na, nh, nb;
    std::vector<std::size_t> rs, xs;
    /// dual_comult[k]: (u, v, c) with Delta(p_k) = sum c p_u (x) p_v
    std::vector<std::vector<Entry3>> dual_comult;
    /// tr[h]: matrix of p -> p <| e_h
    std::vector<Mat> tr;

    BContext(const ModuleAlgebraData& m, const QTStructure& qq, const SeparabilityData& s)
        : M(m), q(qq), sep(s), na(m.A.dim), nh(m.host.dim()), nb(na * nh * na), rs(qq.R.support()), xs(s.x.support()) {
        dual_comult.resize(na);
        for (std::size_t u = 0; u < na; ++u)
            for (std::size_t v = 0; v < na; ++v)
                for (const Entry3& e : M.A.mult.fiber(u, v))
                    dual_comult[e.k].push_back({std::uint32_t(u), std::uint32_t(v), e.c});
        for (std::size_t h = 0; h < nh; ++h) tr.push_back(M.action_matrix(h).transpose());
    }

    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * nh + j) * na + k; }
    Vec ab(std::size_t i) const { return unit_vec(na, i); }
    Vec hb(std::size_t i) const { return unit_vec(nh, i); }
    std::size_t r1(std::size_t f) const { return f / nh; }
    std::size_t r2(std::size_t f) const { return f % nh; }
    const Rat& rc(std::size_t f) const { return q.R.coeffs()[f]; }
    std::size_t x1(std::size_t f) const { return f / na; }
    std::size_t x2(std::size_t f) const { return f % na; }
    const Rat& xc(std::size_t f) const { return sep.x.coeffs()[f]; }

    Vec act(std::size_t h, std::span<const Rat> a) const { return M.act(hb(h), a); }
    Vec amul(std::span<const Rat> a, std::span<const Rat> b) const { return M.A.mul(a, b); }
    Vec hmul(std::span<const Rat> a, std::span<const Rat> b) const { return M.host.algebra.mul(a, b); }
    /// e_b -> alpha, coefficients alpha(e_c e_b)
    Vec hit_alpha(std::span<const Rat> b) const { return hit_left(M.A, b, sep.alpha); }

    Vec pure(std::span<const Rat> a, std::span<const Rat> h, std::span<const Rat> f) const {
        Vec out(nb);
        const auto hs = nonzeros(h), fs = nonzeros(f);
        for (const auto& [i, x] : nonzeros(a))
            for (const auto& [j, y] : hs)
                for (const auto& [k, z] : fs) out[index(i, j, k)] += x * y * z;
        return out;
    }
};

void add_outer(TensorElem& t, const Vec& u, const Vec& v, const Rat& c) {
    const auto vs = nonzeros(v);
    for (const auto& [i, a] : nonzeros(u))
        for (const auto& [j, b] : vs) t.at2(i, j) += c * a * b;
}

}  // namespace

BAlgebra build_B(const ModuleAlgebraData& M, const QTStructure& q, const SeparabilityData& sep) {
    if (q.dim() != M.host.dim()) throw std::invalid_argument("build_B: R-matrix on the wrong Hopf algebra");
    if (sep.x.dims() != std::vector<std::size_t>{M.A.dim, M.A.dim})
        throw std::invalid_argument("build_B: separability data does not match A");
    const Witnessed qc = is_quantum_commutative(q, M);
    if (!qc) throw PreconditionError("quantum commutative", qc.witness, "A is not quantum commutative over R");

    const BContext cx(M, q, sep);
    const std::size_t na = cx.na, nh = cx.nh, nb = cx.nb;
    const HopfData& H = M.host;
    BAlgebra B{M, q, sep, {}, TensorElem({nb, nb}), TensorElem({nb, nb}), {}, {}, {}};
    WeakHopfData& w = B.wha;

    // (a (x) h (x) p_k)(b (x) g (x) p_n) = <p_n, a> b (x) hg (x) p_k
    Tensor3::Builder mb(nb, nb, nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < na; ++l)
                    for (std::size_t m = 0; m < nh; ++m)
                        for (const Entry3& e : H.algebra.mult.fiber(j, m))
                            mb.add(cx.index(i, j, k), cx.index(l, m, i), cx.index(l, e.k, k), e.c);
    w.algebra.dim = nb;
    w.algebra.mult = std::move(mb).build();
    w.algebra.unit = Vec(nb);
    for (std::size_t f : cx.xs)
        axpy(w.algebra.unit, cx.xc(f), cx.pure(cx.ab(cx.x1(f)), H.algebra.unit, cx.hit_alpha(cx.ab(cx.x2(f)))));

    // Delta_B(a (x) h (x) a*) = (R1^2 . x^1) a (x) R2^1 h_(1) R1^1 (x) a*_(2)
    //                          (x) x^2 (x) h_(2) (x) a*_(1) <| R2^2
    Tensor3::Builder cb(nb, nb, nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            for (std::size_t k = 0; k < na; ++k) {
                const std::size_t src = cx.index(i, j, k);
                SparseAcc acc;
                for (std::size_t f1 : cx.rs)
                    for (std::size_t fx : cx.xs) {
                        const Vec a_left = cx.amul(cx.act(cx.r2(f1), cx.ab(cx.x1(fx))), cx.ab(i));
                        const Rat c1 = cx.rc(f1) * cx.xc(fx);
                        for (std::size_t f2 : cx.rs)
                            for (const Entry3& d : H.coalgebra.comult.slice(j)) {
                                const Vec h_left = cx.hmul(cx.hmul(cx.hb(cx.r1(f2)), cx.hb(d.j)), cx.hb(cx.r1(f1)));
                                const Rat c2 = c1 * cx.rc(f2) * d.c;
                                for (const Entry3& dp : cx.dual_comult[k]) {
                                    const Vec left = cx.pure(a_left, h_left, cx.ab(dp.k));
                                    const Vec right = cx.pure(cx.ab(cx.x2(fx)), cx.hb(d.k),
                                                              cx.tr[cx.r2(f2)].column(dp.j));
                                    const Rat c3 = c2 * dp.c;
                                    const auto rsv = nonzeros(right);
                                    for (const auto& [l, lc] : nonzeros(left))
                                        for (const auto& [rr, rcf] : rsv)
                                            acc.add(std::uint64_t(l) * nb + rr, c3 * lc * rcf);
                                }
                            }
                    }
                for (const auto& [key, c] : acc.entries())
                    if (!c.is_zero()) cb.add(src, key / nb, key % nb, c);
            }
    w.coalgebra.dim = nb;
    w.coalgebra.comult = std::move(cb).build();
    w.coalgebra.counit = Vec(nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            for (std::size_t k = 0; k < na; ++k)
                w.coalgebra.counit[cx.index(i, j, k)] = sep.alpha[i] * H.coalgebra.counit[j] * M.A.unit[k];

    // S_B(a (x) h (x) a*) = <a* <| R2^2, x^1> x^2 (x) R1^1 S(R2^1 h) (x) alpha <- (R1^2 . a)
    w.antipode = Mat(nb, nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            for (std::size_t k = 0; k < na; ++k) {
                Vec col(nb);
                for (std::size_t f1 : cx.rs) {
                    const Vec alpha_part = hit_right(M.A, sep.alpha, cx.act(cx.r2(f1), cx.ab(i)));
                    for (std::size_t f2 : cx.rs) {
                        const Vec h_part =
                            cx.hmul(cx.hb(cx.r1(f1)), H.antipode.apply(cx.hmul(cx.hb(cx.r1(f2)), cx.hb(j))));
                        const Vec pk = cx.tr[cx.r2(f2)].column(k);
                        for (std::size_t fx : cx.xs) {
                            const Rat pair = pk[cx.x1(fx)];
                            if (pair.is_zero()) continue;
                            axpy(col, cx.rc(f1) * cx.rc(f2) * cx.xc(fx) * pair,
                                 cx.pure(cx.ab(cx.x2(fx)), h_part, alpha_part));
                        }
                    }
                }
                w.antipode.set_column(cx.index(i, j, k), col);
            }

    // R_B = ((R3^2 . x2^1) x1^1 (x) R2^1 R3^1 (x) alpha_(1) <| R1^2)
    //       (x) (x2^2 (x) R1^1 R2^2 (x) x1^2 -> alpha_(2))
    std::vector<Entry3> dual_alpha;
    for (std::size_t k = 0; k < na; ++k)
        if (!sep.alpha[k].is_zero())
            for (const Entry3& e : cx.dual_comult[k]) dual_alpha.push_back({e.j, e.k, e.c * sep.alpha[k]});
    for (std::size_t f1 : cx.rs)
        for (std::size_t f2 : cx.rs)
            for (std::size_t f3 : cx.rs) {
                const Rat cr = cx.rc(f1) * cx.rc(f2) * cx.rc(f3);
                const Vec h1 = cx.hmul(cx.hb(cx.r1(f2)), cx.hb(cx.r1(f3)));
                const Vec h2 = cx.hmul(cx.hb(cx.r1(f1)), cx.hb(cx.r2(f2)));
                for (std::size_t fx1 : cx.xs)
                    for (std::size_t fx2 : cx.xs) {
                        const Vec a1 = cx.amul(cx.act(cx.r2(f3), cx.ab(cx.x1(fx2))), cx.ab(cx.x1(fx1)));
                        const Rat cxx = cr * cx.xc(fx1) * cx.xc(fx2);
                        for (const Entry3& da : dual_alpha) {
                            const Vec left = cx.pure(a1, h1, cx.tr[cx.r2(f1)].column(da.j));
                            const Vec right =
                                cx.pure(cx.ab(cx.x2(fx2)), h2, hit_left(M.A, cx.ab(cx.x2(fx1)), cx.ab(da.k)));
                            add_outer(B.R, left, right, cxx * da.c);
                        }
                    }
            }
    B.Rbar = apply_on_leg(B.R, 0, w.antipode);

    // Counital subalgebras against their closed forms.
    const CounitalData cd = counital_data(w);
    B.source_basis = cd.source_basis;
    B.target_basis = cd.target_basis;
    Mat to_t(nb, na), to_s(nb, na);
    for (std::size_t a = 0; a < na; ++a) {
        Vec t(nb), s(nb);
        for (std::size_t fx : cx.xs) {
            const Vec alpha_part = cx.hit_alpha(cx.ab(cx.x2(fx)));
            axpy(t, cx.xc(fx), cx.pure(cx.amul(cx.ab(cx.x1(fx)), cx.ab(a)), H.algebra.unit, alpha_part));
            for (std::size_t fr : cx.rs)
                axpy(s, cx.xc(fx) * cx.rc(fr),
                     cx.pure(cx.amul(cx.act(cx.r2(fr), cx.ab(a)), cx.ab(cx.x1(fx))), cx.hb(cx.r1(fr)), alpha_part));
        }
        to_t.set_column(a, t);
        to_s.set_column(a, s);
    }
    auto cols = [](const Mat& m) {
        std::vector<Vec> out;
        for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
        return out;
    };
    B.report.add("target_closed_form", same_span(cols(to_t), cd.target_basis, nb));
    B.report.add("source_closed_form", same_span(cols(to_s), cd.source_basis, nb));
    B.report.merge(check_algebra_map(to_t, M.A, w.algebra), "target_iso_A");
    B.report.merge(check_algebra_map(to_s, opposite_algebra(M.A), w.algebra), "source_iso_A_op");
    B.report.add("target_injective", rank(to_t) == na);
    B.report.add("source_injective", rank(to_s) == na);
    return B;
}

PhiEmbedding phi_embed(const SmashWeakHopf& w, const BAlgebra& B) {
    const Witnessed ut = u_acts_trivially(w.q, w.smash.A);
    if (!ut) throw PreconditionError("u acts trivially", ut.witness, "the Drinfeld element acts nontrivially on A");
    const BContext cx(B.A, B.q, B.sep);
    const HopfData& H = B.A.host;
    const std::size_t na = cx.na, nh = cx.nh, nb = cx.nb;
    const SmashProduct& s = w.smash;
    PhiEmbedding p;
    p.map = Mat(nb, s.carrier.dim);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nh; ++j) {
            Vec col(nb);
            for (const Entry3& d : H.coalgebra.comult.slice(j))
                for (std::size_t fx : cx.xs) {
                    const Vec a0 = cx.amul(cx.ab(cx.x1(fx)), cx.ab(i));
                    const Vec a = B.A.act(H.antipode.column(d.j), a0);
                    axpy(col, d.c * cx.xc(fx), cx.pure(a, cx.hb(d.k), cx.hit_alpha(cx.ab(cx.x2(fx)))));
                }
            p.map.set_column(s.index(i, j), col);
        }
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < p.map.cols(); ++c) cols.push_back(p.map.column(c));
    p.image = span_basis(cols, nb);

    // a b = b <| a, with (a_i (x) h (x) f) <| a = a_i (x) h_(2) (x) f <- (h_(1) . a).
    Mat sys(na * nb, nb);
    for (std::size_t t = 0; t < na; ++t)
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nh; ++j)
                for (std::size_t k = 0; k < na; ++k) {
                    Vec diff = cx.pure(cx.amul(cx.ab(t), cx.ab(i)), cx.hb(j), cx.ab(k));
                    for (const Entry3& d : H.coalgebra.comult.slice(j))
                        axpy(diff, -d.c, cx.pure(cx.ab(i), cx.hb(d.k), hit_right(B.A.A, cx.ab(k), cx.act(d.j, cx.ab(t)))));
                    const std::size_t col = cx.index(i, j, k);
                    for (std::size_t r = 0; r < nb; ++r) sys(t * nb + r, col) = diff[r];
                }
    p.equalizer = kernel_basis(sys);
    p.report.merge(check_wha_morphism(p.map, w.wha, B.wha));
    p.report.add("image_is_equalizer", same_span(p.image, p.equalizer, nb), {},
                 "image " + std::to_string(p.image.size()) + ", equalizer " + std::to_string(p.equalizer.size()));
    return p;
}

ImageMuger rb_in_image_iff_muger(const BAlgebra& B, const PhiEmbedding& phi) {
    ImageMuger out;
    const Mat m = B.R.as_matrix();
    bool in = true;
    for (std::size_t c = 0; c < m.cols() && in; ++c) in = in_span(phi.image, m.column(c));
    for (std::size_t r = 0; r < m.rows() && in; ++r) in = in_span(phi.image, m.row(r));
    out.r_in_image = in;
    out.muger = muger_membership(B.q, B.A).value.value;
    out.report.add("equivalence", out.r_in_image == out.muger, {},
                   std::string("R_B in image: ") + (in ? "yes" : "no") + ", Mueger: " + (out.muger ? "yes" : "no"));
    return out;
}

}  // namespace wha
