#include "wha/modalg.hpp"

#include <stdexcept>

namespace wha {

Vec ModuleAlgebraData::act(std::span<const Rat> h, std::span<const Rat> a) const {
    Vec out(A.dim);
    const SparseVec as = nonzeros(a);
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i].is_zero()) continue;
        for (const auto& [j, aj] : as) {
            const Rat c = h[i] * aj;
            for (const Entry3& e : action.fiber(i, j)) out[e.k] += c * e.c;
        }
    }
    return out;
}

Mat ModuleAlgebraData::action_matrix(std::size_t h) const {
    Mat m(A.dim, A.dim);
    for (const Entry3& e : action.slice(h)) m(e.k, e.j) = e.c;
    return m;
}

ModuleAlgebraData make_module_algebra(HopfData host, StructureAlgebra A, Tensor3 action) {
    if (A.dim == 0 || is_zero(A.unit)) throw std::invalid_argument("module algebra: A must be nonzero");
    if (action.shape() != std::array<std::size_t, 3>{host.dim(), A.dim, A.dim})
        throw std::invalid_argument("module algebra: action tensor must have shape dim H x dim A x dim A");
    return ModuleAlgebraData{std::move(host), std::move(A), std::move(action)};
}

ModuleAlgebraData trivial_module_algebra(HopfData host, StructureAlgebra A) {
    Tensor3::Builder b(host.dim(), A.dim, A.dim);
    for (std::size_t h = 0; h < host.dim(); ++h)
        for (std::size_t a = 0; a < A.dim; ++a) b.add(h, a, a, host.coalgebra.counit[h]);
    return make_module_algebra(std::move(host), std::move(A), std::move(b).build());
}

ModuleAlgebraData permutation_module_algebra(const GroupTable& g, const std::vector<std::vector<std::size_t>>& act) {
    HopfData h = group_algebra(g);
    if (act.size() != h.dim() || act.empty()) throw std::invalid_argument("permutation action: one row per group element");
    const std::size_t t = act[0].size();
    Tensor3::Builder b(h.dim(), t, t);
    for (std::size_t gi = 0; gi < h.dim(); ++gi) {
        if (act[gi].size() != t) throw std::invalid_argument("permutation action: ragged rows");
        for (std::size_t x = 0; x < t; ++x) {
            if (act[gi][x] >= t) throw std::invalid_argument("permutation action: point out of range");
            b.add(gi, x, act[gi][x], Rat(1));
        }
    }
    return make_module_algebra(std::move(h), pointwise_algebra(t), std::move(b).build());
}

VerificationReport verify_module_algebra(const ModuleAlgebraData& m) {
    VerificationReport r;
    const HopfData& H = m.host;
    const std::size_t n = H.dim(), d = m.A.dim;
    if (m.action.shape() != std::array<std::size_t, 3>{n, d, d}) {
        r.add("shape", false, {}, "action tensor shape");
        return r;
    }
    std::vector<Mat> L(n);
    for (std::size_t h = 0; h < n; ++h) L[h] = m.action_matrix(h);
    auto combo = [&](std::span<const Rat> v) {
        Mat out(d, d);
        for (const auto& [i, c] : nonzeros(v))
            for (std::size_t row = 0; row < d; ++row)
                for (std::size_t col = 0; col < d; ++col)
                    if (!L[i](row, col).is_zero()) out(row, col) += c * L[i](row, col);
        return out;
    };

    CheckAccumulator assoc("module_associativity");
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g) {
            const Mat lhs = combo(H.algebra.mul_basis(h, g));
            const Mat rhs = L[h] * L[g];
            if (lhs != rhs) {
                std::size_t a = 0;
                while (a < d && lhs.column(a) == rhs.column(a)) ++a;
                assoc.fail({h, g, a});
            }
        }
    r.add(std::move(assoc).done());
    {
        const Mat u = combo(H.algebra.unit);
        std::vector<std::size_t> w;
        for (std::size_t a = 0; a < d && w.empty(); ++a)
            if (u.column(a) != unit_vec(d, a)) w = {a};
        r.add("module_unit", w.empty(), w);
    }
    CheckAccumulator meas("measuring"), mu("measuring_unit");
    for (std::size_t h = 0; h < n; ++h) {
        const auto dh = H.coalgebra.comult.slice(h);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                const Vec lhs = L[h].apply(m.A.mul_basis(a, b));
                Vec rhs(d);
                for (const Entry3& e : dh) axpy(rhs, e.c, m.A.mul(L[e.j].column(a), L[e.k].column(b)));
                meas.expect(lhs == rhs, {h, a, b});
            }
        mu.expect(L[h].apply(m.A.unit) == scale(m.A.unit, H.coalgebra.counit[h]), {h});
    }
    r.add(std::move(meas).done());
    r.add(std::move(mu).done());
    return r;
}

Witnessed is_quantum_commutative(const QTStructure& q, const ModuleAlgebraData& m) {
    const std::size_t n = q.dim(), d = m.A.dim;
    if (m.host.dim() != n) throw std::invalid_argument("is_quantum_commutative: module over a different host");
    std::vector<Mat> L(n);
    for (std::size_t h = 0; h < n; ++h) L[h] = m.action_matrix(h);
    const auto Rs = q.R.support();
    Witnessed w;
    for (std::size_t a = 0; a < d && w.value; ++a)
        for (std::size_t b = 0; b < d && w.value; ++b) {
            Vec rhs(d);
            for (std::size_t f : Rs)
                axpy(rhs, q.R.coeffs()[f], m.A.mul(L[f % n].column(b), L[f / n].column(a)));
            if (rhs != m.A.mul_basis(a, b)) {
                w.value = false;
                w.witness = {a, b};
                w.detail = "e_a e_b differs from (R^2 . e_b)(R^1 . e_a)";
            }
        }
    return w;
}

namespace {

SeparabilityData separability_core(const StructureAlgebra& A) {
    const std::size_t d = A.dim;
    SeparabilityData s;
    s.alpha = Vec(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) s.alpha[a] += A.mult.get(a, b, b);
    Mat G(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) G(a, b) = dot(s.alpha, A.mul_basis(a, b));
    const auto Gi = inverse(G);
    if (!Gi) throw PreconditionError("strongly separable A (nondegenerate trace form)", {}, "trace form Gram matrix is singular");
    s.x = TensorElem::from_matrix(*Gi);

    VerificationReport& r = s.report;
    r.add("symmetric", flip(s.x) == s.x);
    CheckAccumulator sep("separability");
    for (std::size_t a = 0; a < d; ++a) {
        const Vec e = unit_vec(d, a);
        const TensorElem l = mul_same(A, pure(std::vector<Vec>{e, A.unit}), s.x);
        const TensorElem rr = mul_same(A, s.x, pure(std::vector<Vec>{A.unit, e}));
        sep.expect(l == rr, {a});
    }
    r.add(std::move(sep).done());
    r.add("multiplies_to_unit", multiply_out(A, s.x) == A.unit);
    {
        Vec v(d);
        for (std::size_t f : s.x.support()) v[f % d] += s.x.coeffs()[f] * s.alpha[f / d];
        r.add("alpha_x1_x2_is_unit", v == A.unit);
    }
    CheckAccumulator left("x1_pairing_recovers_a"), right("pairing_recovers_functional");
    for (std::size_t a = 0; a < d; ++a) {
        // x^1 <x^2 -> alpha, a> = x^1 alpha(a x^2)
        Vec v(d);
        for (std::size_t f : s.x.support())
            v[f / d] += s.x.coeffs()[f] * dot(s.alpha, A.mul_basis(a, f % d));
        left.expect(v == unit_vec(d, a), {a});
        // <p_a, x^1> (x^2 -> alpha) evaluated on each e_c
        for (std::size_t c = 0; c < d; ++c) {
            Rat t;
            for (std::size_t b = 0; b < d; ++b) t += s.x.at2(a, b) * G(c, b);
            right.expect(t == (a == c ? Rat(1) : Rat(0)), {a, c});
        }
    }
    r.add(std::move(left).done());
    r.add(std::move(right).done());
    return s;
}

}  // namespace

SeparabilityData separability(const StructureAlgebra& A) { return separability_core(A); }

SeparabilityData separability(const ModuleAlgebraData& m) {
    SeparabilityData s = separability_core(m.A);
    const HopfData& H = m.host;
    const std::size_t n = H.dim(), d = m.A.dim;
    CheckAccumulator inv("alpha_invariant");
    for (std::size_t h = 0; h < n; ++h) {
        const Mat L = m.action_matrix(h);
        for (std::size_t a = 0; a < d; ++a)
            inv.expect(dot(s.alpha, L.column(a)) == H.coalgebra.counit[h] * s.alpha[a], {h, a});
    }
    s.report.add(std::move(inv).done());
    const bool involutory = H.antipode * H.antipode == Mat::identity(n);
    s.report.facts["host_involutory"] = involutory;
    if (involutory) {
        CheckAccumulator bal("x_antipode_balance");
        for (std::size_t h = 0; h < n; ++h) {
            Mat Lh = m.action_matrix(h);
            Mat LS(d, d);
            for (const auto& [i, c] : nonzeros(H.antipode.column(h))) {
                const Mat Li = m.action_matrix(i);
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t k = 0; k < d; ++k) LS(r, k) += c * Li(r, k);
            }
            bal.expect(apply_on_leg(s.x, 0, Lh) == apply_on_leg(s.x, 1, LS), {h});
        }
        s.report.add(std::move(bal).done());
    }
    return s;
}

Witnessed u_acts_trivially(const QTStructure& q, const ModuleAlgebraData& m) {
    const DrinfeldElement u = drinfeld_element(q);
    Witnessed w;
    for (std::size_t a = 0; a < m.A.dim && w.value; ++a)
        if (m.act(u.u, unit_vec(m.A.dim, a)) != unit_vec(m.A.dim, a)) {
            w.value = false;
            w.witness = {a};
            w.detail = "u . e_a differs from e_a";
        }
    return w;
}

std::string to_string(Simplicity s) {
    switch (s) {
        case Simplicity::certified_simple: return "certified_simple";
        case Simplicity::not_simple: return "not_simple";
        case Simplicity::inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<Vec> operator_closure(std::span<const Mat> ops, std::span<const Vec> seed, std::size_t n) {
    std::vector<Vec> basis;
    std::vector<Vec> queue(seed.begin(), seed.end());
    while (!queue.empty()) {
        Vec v = std::move(queue.back());
        queue.pop_back();
        if (is_zero(v) || (!basis.empty() && in_span(basis, v))) continue;
        basis.push_back(v);
        if (basis.size() == n) break;
        for (const Mat& op : ops) queue.push_back(op.apply(v));
    }
    return span_basis(basis, n);
}

std::vector<Vec> commutant(std::span<const Mat> ops, std::size_t n) {
    // Unknown X flattened row-major: X(i,j) at i*n + j. Equation (XM - MX)(i,j) = 0.
    Mat sys(ops.size() * n * n, n * n);
    std::size_t row = 0;
    for (const Mat& M : ops)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row)
                for (std::size_t k = 0; k < n; ++k) {
                    if (!M(k, j).is_zero()) sys(row, i * n + k) += M(k, j);
                    if (!M(i, k).is_zero()) sys(row, k * n + j) -= M(i, k);
                }
    return kernel_basis(sys);
}

SimplicityResult is_H_simple(const ModuleAlgebraData& m) {
    const std::size_t d = m.A.dim;
    std::vector<Mat> ops;
    for (std::size_t a = 0; a < d; ++a) {
        ops.push_back(m.A.left_mult(unit_vec(d, a)));
        ops.push_back(m.A.right_mult(unit_vec(d, a)));
    }
    for (std::size_t h = 0; h < m.host.dim(); ++h) ops.push_back(m.action_matrix(h));

    SimplicityResult res;
    res.commutant_dim = commutant(ops, d).size();

    // Algebra generated by the operators, as flattened matrices.
    auto flat = [d](const Mat& M) {
        Vec v(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) v[i * d + j] = M(i, j);
        return v;
    };
    std::vector<Mat> left_ops;
    for (const Mat& g : ops) {
        Mat L(d * d, d * d);  // X -> g X on flattened matrices
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                if (!g(i, k).is_zero())
                    for (std::size_t j = 0; j < d; ++j) L(i * d + j, k * d + j) = g(i, k);
        left_ops.push_back(std::move(L));
    }
    const Vec seed[] = {flat(Mat::identity(d))};
    const auto span = operator_closure(left_ops, seed, d * d);
    res.operator_span_dim = span.size();

    if (res.operator_span_dim == d * d) {
        res.verdict = Simplicity::certified_simple;
        res.detail = "operators generate End(A)";
        return res;
    }
    for (std::size_t a = 0; a < d; ++a) {
        const Vec s[] = {unit_vec(d, a)};
        auto ideal = operator_closure(ops, s, d);
        if (!ideal.empty() && ideal.size() < d) {
            res.verdict = Simplicity::not_simple;
            res.ideal = std::move(ideal);
            res.detail = "ideal generated by basis vector " + std::to_string(a);
            return res;
        }
    }
    res.verdict = Simplicity::inconclusive;
    res.detail = "operator algebra has dim " + std::to_string(res.operator_span_dim) + " < " +
                 std::to_string(d * d) + ", commutant dim " + std::to_string(res.commutant_dim) +
                 ", every basis vector generates A";
    return res;
}

}  // namespace wha
