#include "wha/qtriang.hpp"

#include <stdexcept>

#include "wha/modalg.hpp"

namespace wha {

namespace {

TensorElem one_one(const HopfData& h) { return pure(std::vector<Vec>{h.algebra.unit, h.algebra.unit}); }

TensorElem basis_pair(const Vec& a, const Vec& b) { return pure(std::vector<Vec>{a, b}); }

std::vector<Mat> action_matrices(const Tensor3& action, std::size_t n_acting, std::size_t n_acted) {
    std::vector<Mat> out(n_acting, Mat(n_acted, n_acted));
    for (std::size_t h = 0; h < n_acting; ++h)
        for (const Entry3& e : action.slice(h)) out[h](e.k, e.j) = e.c;
    return out;
}

}  // namespace

QTStructure make_qt(HopfData host, TensorElem R) {
    const std::size_t n = host.dim();
    if (R.legs() != 2 || R.dims()[0] != n || R.dims()[1] != n)
        throw std::invalid_argument("make_qt: R must be an element of H (x) H");
    QTStructure q;
    q.host = std::move(host);
    q.R = std::move(R);
    const TensorElem one = one_one(q.host);
    TensorElem cand = apply_on_leg(q.R, 0, q.host.antipode);
    if (mul_same(q.host.algebra, q.R, cand) == one && mul_same(q.host.algebra, cand, q.R) == one) {
        q.Rinv = std::move(cand);
        return q;
    }
    if (n * n > 400) throw PreconditionError("invertible R", {}, "(S (x) id)(R) is not an inverse of R");
    // Solve R X = 1 (x) 1 directly; column f of the system is R (e_f).
    const std::size_t N = n * n;
    Mat sys(N, N);
    for (std::size_t f = 0; f < N; ++f) {
        TensorElem ef({n, n});
        ef.coeffs()[f] = Rat(1);
        TensorElem col = mul_same(q.host.algebra, q.R, ef);
        for (std::size_t r = 0; r < N; ++r) sys(r, f) = col.coeffs()[r];
    }
    auto x = solve(sys, one.coeffs());
    if (!x) throw PreconditionError("invertible R");
    TensorElem inv({n, n}, *x);
    if (mul_same(q.host.algebra, inv, q.R) != one) throw PreconditionError("invertible R", {}, "no two-sided inverse");
    q.Rinv = std::move(inv);
    return q;
}

QTStructure trivial_qt(HopfData host) {
    TensorElem R = one_one(host);
    return make_qt(std::move(host), std::move(R));
}

VerificationReport verify_qt(const QTStructure& q) {
    VerificationReport r;
    const HopfData& h = q.host;
    const std::size_t n = h.dim();
    const StructureAlgebra& A = h.algebra;
    const TensorElem one = one_one(h);
    r.add("R_invertible", mul_same(A, q.R, q.Rinv) == one && mul_same(A, q.Rinv, q.R) == one);

    CheckAccumulator inter("R_intertwines_comult");
    for (std::size_t i = 0; i < n; ++i) {
        TensorElem d = h.coalgebra.coprod(unit_vec(n, i));
        inter.expect(mul_same(A, q.R, d) == mul_same(A, flip(d), q.R), {i});
    }
    r.add(std::move(inter).done());

    const Vec ones[] = {A.unit, A.unit, A.unit};
    const std::size_t p13[] = {0, 2}, p23[] = {1, 2}, p12[] = {0, 1};
    const TensorElem R13 = embed(q.R, p13, ones), R23 = embed(q.R, p23, ones), R12 = embed(q.R, p12, ones);
    {
        TensorElem lhs = comult_on_leg(q.R, 0, h.coalgebra);
        TensorElem diff = lhs - mul_same(A, R13, R23);
        auto s = diff.support();
        r.add("comult_first_leg", s.empty(), s.empty() ? std::vector<std::size_t>{} : diff.unflat(s[0]),
              "(Delta (x) id)R = R13 R23");
    }
    {
        TensorElem lhs = comult_on_leg(q.R, 1, h.coalgebra);
        TensorElem diff = lhs - mul_same(A, R13, R12);
        auto s = diff.support();
        r.add("comult_second_leg", s.empty(), s.empty() ? std::vector<std::size_t>{} : diff.unflat(s[0]),
              "(id (x) Delta)R = R13 R12");
    }
    return r;
}

DrinfeldElement drinfeld_element(const QTStructure& q) {
    const HopfData& h = q.host;
    const std::size_t n = h.dim();
    DrinfeldElement d;
    d.u = Vec(n);
    for (std::size_t f : q.R.support()) {
        const std::size_t a = f / n, b = f % n;
        axpy(d.u, q.R.coeffs()[f], h.algebra.mul(h.antipode.column(b), unit_vec(n, a)));
    }
    d.fixed_by_antipode = h.antipode.apply(d.u) == d.u;
    d.central = true;
    for (std::size_t i = 0; i < n && d.central; ++i) {
        const Vec e = unit_vec(n, i);
        d.central = h.algebra.mul(d.u, e) == h.algebra.mul(e, d.u);
    }
    return d;
}

TensorElem monodromy(const QTStructure& q) { return mul_same(q.host.algebra, flip(q.R), q.R); }

std::string to_string(Triangularity t) {
    switch (t) {
        case Triangularity::triangular: return "triangular";
        case Triangularity::almost_triangular_strict: return "almost_triangular_strict";
        case Triangularity::quasi_triangular_only: return "quasi_triangular_only";
    }
    return "?";
}

TriangularityClass classify_triangularity(const QTStructure& q) {
    const HopfData& h = q.host;
    const std::size_t n = h.dim();
    const StructureAlgebra& A = h.algebra;
    TriangularityClass c;
    const TensorElem Q = monodromy(q);
    c.first_leg_central = c.second_leg_central = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec e = unit_vec(n, i);
        const TensorElem left = basis_pair(e, A.unit), right = basis_pair(A.unit, e);
        if (c.first_leg_central && mul_same(A, Q, left) != mul_same(A, left, Q)) {
            c.first_leg_central = false;
            if (c.witness.empty()) c.witness = {i, 0};
        }
        if (c.second_leg_central && mul_same(A, Q, right) != mul_same(A, right, Q)) {
            c.second_leg_central = false;
            if (c.witness.empty()) c.witness = {i, 1};
        }
    }
    if (Q == one_one(h))
        c.kind = Triangularity::triangular;
    else if (c.first_leg_central && c.second_leg_central)
        c.kind = Triangularity::almost_triangular_strict;
    else
        c.kind = Triangularity::quasi_triangular_only;
    return c;
}

Tensor3 adjoint_action(const HopfData& h) {
    const std::size_t n = h.dim();
    Tensor3::Builder b(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < n; ++x) {
            Vec out(n);
            for (const Entry3& e : h.coalgebra.comult.slice(i))
                axpy(out, e.c, h.algebra.mul(h.algebra.mul_basis(e.j, x), h.antipode.column(e.k)));
            b.add_fiber(i, x, out);
        }
    return std::move(b).build();
}

StructureAlgebra BraidedGroupData::dual_algebra() const {
    const std::size_t n = host.dim();
    StructureAlgebra a;
    a.dim = n;
    Tensor3::Builder b(n, n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (const Entry3& e : comult_R.slice(k)) b.add(e.j, e.k, k, e.c);
    a.mult = std::move(b).build();
    a.unit = host.host.coalgebra.counit;
    return a;
}

BraidedGroupData transmute(const QTStructure& q) {
    const HopfData& h = q.host;
    const std::size_t n = h.dim();
    BraidedGroupData bg;
    bg.host = q;
    bg.adjoint_action = adjoint_action(h);
    const auto ad = action_matrices(bg.adjoint_action, n, n);
    const auto Rs = q.R.support();

    Tensor3::Builder cb(n, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        TensorElem acc({n, n});
        for (const Entry3& e : h.coalgebra.comult.slice(i))
            for (std::size_t f : Rs) {
                const std::size_t c = f / n, d = f % n;
                const Vec left = h.algebra.mul(unit_vec(n, e.j), h.antipode.column(d));
                const Vec right = ad[c].column(e.k);
                acc = acc + (e.c * q.R.coeffs()[f]) * basis_pair(left, right);
            }
        for (std::size_t t : acc.support()) cb.add(i, t / n, t % n, acc.coeffs()[t]);
    }
    bg.comult_R = std::move(cb).build();

    bg.antipode_R = Mat(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec out(n);
        for (std::size_t f : Rs) {
            const std::size_t c = f / n, d = f % n;
            axpy(out, q.R.coeffs()[f], h.algebra.mul(unit_vec(n, d), h.antipode.apply(ad[c].column(i))));
        }
        bg.antipode_R.set_column(i, out);
    }

    VerificationReport& r = bg.report;
    const StructureCoalgebra hr = bg.coalgebra();
    r.merge(verify_coalgebra(hr), "coalgebra_R");

    CheckAccumulator mc("module_coalgebra"), me("counit_invariant");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < n; ++x) {
            const Vec hx = ad[i].column(x);
            TensorElem lhs = hr.coprod(hx);
            TensorElem rhs({n, n});
            const TensorElem dx = hr.coprod(unit_vec(n, x));
            for (const Entry3& e : h.coalgebra.comult.slice(i))
                rhs = rhs + e.c * apply_on_leg(apply_on_leg(dx, 0, ad[e.j]), 1, ad[e.k]);
            mc.expect(lhs == rhs, {i, x});
            me.expect(h.coalgebra.eps(hx) == h.coalgebra.counit[i] * h.coalgebra.counit[x], {i, x});
        }
    r.add(std::move(mc).done());
    r.add(std::move(me).done());

    CheckAccumulator ba("braided_antipode");
    for (std::size_t i = 0; i < n; ++i) {
        Vec out(n);
        for (const Entry3& e : hr.comult.slice(i))
            axpy(out, e.c, h.algebra.mul(bg.antipode_R.column(e.j), unit_vec(n, e.k)));
        ba.expect(out == scale(h.algebra.unit, h.coalgebra.counit[i]), {i});
    }
    r.add(std::move(ba).done());
    return bg;
}

MugerResult muger_membership(const QTStructure& q, const ModuleAlgebraData& act) {
    const HopfData& h = q.host;
    const std::size_t n = h.dim(), m = act.A.dim;
    if (act.host.dim() != n) throw std::invalid_argument("muger_membership: module over a different host");
    const auto L = action_matrices(act.action, n, m);
    const TensorElem Q = monodromy(q);
    const auto Qs = Q.support();
    const auto Rs = q.R.support();
    MugerResult res;
    for (std::size_t a = 0; a < m; ++a) {
        TensorElem lhs({m, n});
        for (std::size_t f : Qs)
            lhs = lhs + Q.coeffs()[f] * basis_pair(L[f / n].column(a), unit_vec(n, f % n));
        if (res.value.value && lhs != basis_pair(unit_vec(m, a), h.algebra.unit)) {
            res.value.value = false;
            res.value.witness = {a};
            res.value.detail = "(R21 R) . a differs from a (x) 1";
        }
        TensorElem l2({m, n}), r2({m, n});
        for (std::size_t f : Rs) {
            const std::size_t c = f / n, d = f % n;
            l2 = l2 + q.R.coeffs()[f] * basis_pair(L[c].column(a), unit_vec(n, d));
            r2 = r2 + q.R.coeffs()[f] * basis_pair(L[d].column(a), h.antipode.column(c));
        }
        if (res.alternate.value && l2 != r2) {
            res.alternate.value = false;
            res.alternate.witness = {a};
            res.alternate.detail = "R^1 . a (x) R^2 differs from R^2 . a (x) S(R^1)";
        }
    }
    return res;
}

DualSeparability hr_dual_separability(const BraidedGroupData& bg, const IntegralPair& ip) {
    const QTStructure& q = bg.host;
    const HopfData& h = q.host;
    const std::size_t n = h.dim();
    const auto ad = action_matrices(bg.adjoint_action, n, n);
    DualSeparability ds;
    ds.hr_dual = bg.dual_algebra();
    ds.x = TensorElem({n, n});
    for (std::size_t g = 0; g < n; ++g) {
        // y = sum R^2 S(R^1 .ad e_g); then x[hh][g] = lambda(e_hh y).
        Vec y(n);
        for (std::size_t f : q.R.support()) {
            const std::size_t c = f / n, d = f % n;
            axpy(y, q.R.coeffs()[f], h.algebra.mul(unit_vec(n, d), h.antipode.apply(ad[c].column(g))));
        }
        for (std::size_t hh = 0; hh < n; ++hh) ds.x.at2(hh, g) = dot(ip.lambda, h.algebra.mul(unit_vec(n, hh), y));
    }
    const StructureAlgebra& A = ds.hr_dual;
    VerificationReport& r = ds.report;
    r.add("symmetric", flip(ds.x) == ds.x);
    CheckAccumulator sep("separability");
    for (std::size_t a = 0; a < n; ++a) {
        const Vec e = unit_vec(n, a);
        sep.expect(mul_same(A, basis_pair(e, A.unit), ds.x) == mul_same(A, ds.x, basis_pair(A.unit, e)), {a});
    }
    r.add(std::move(sep).done());
    r.add("multiplies_to_unit", multiply_out(A, ds.x) == A.unit);
    const StructureAlgebra Aop = opposite_algebra(A);
    const StructureAlgebra* legs[] = {&A, &Aop};
    r.add("idempotent", mul_legs(legs, ds.x, ds.x) == ds.x);
    return ds;
}

ModuleAlgebraData adjoint_module(const HopfData& h) { return make_module_algebra(h, h.algebra, adjoint_action(h)); }

ModuleAlgebraData hr_dual_module(const BraidedGroupData& bg) {
    const std::size_t n = bg.host.dim();
    Tensor3::Builder b(n, n, n);
    for (std::size_t hh = 0; hh < n; ++hh)
        for (const Entry3& e : bg.adjoint_action.slice(hh)) b.add(hh, e.k, e.j, e.c);
    return make_module_algebra(opposites(bg.host.host, Opposite::op), bg.dual_algebra(), std::move(b).build());
}

QTStructure op_qt(const QTStructure& q) { return make_qt(opposites(q.host, Opposite::op), flip(q.R)); }

VerificationReport prop42_report(const QTStructure& q) {
    VerificationReport r;
    const TriangularityClass tc = classify_triangularity(q);
    const bool c2 = tc.kind != Triangularity::quasi_triangular_only;

    const BraidedGroupData bg = transmute(q);
    const ModuleAlgebraData dual_mod = hr_dual_module(bg);
    const QTStructure opq = op_qt(q);
    r.merge(verify_qt(opq), "op_R21");
    r.merge(verify_module_algebra(dual_mod), "hr_dual_module");
    const Witnessed c3 = is_quantum_commutative(opq, dual_mod);

    const MugerResult c4 = muger_membership(q, adjoint_module(q.host));

    r.facts["cond2_almost_triangular"] = c2;
    r.facts["cond3_hr_dual_quantum_commutative"] = c3.value;
    r.facts["cond4_adjoint_in_muger_center"] = c4.value.value;
    r.facts["first_leg_central"] = tc.first_leg_central;
    r.facts["second_leg_central"] = tc.second_leg_central;
    r.add("mueger_forms_agree", c4.consistent(), c4.value.value ? c4.alternate.witness : c4.value.witness);
    r.add("central_legs_agree", tc.first_leg_central == tc.second_leg_central, tc.witness);
    r.add("conditions_agree", c2 == c3.value && c3.value == c4.value.value, {},
          "(2)=" + std::string(c2 ? "1" : "0") + " (3)=" + (c3.value ? "1" : "0") + " (4)=" +
              (c4.value.value ? "1" : "0"));
    return r;
}

}  // namespace wha
