#include <algorithm>
#include <stdexcept>

#include "wha/doubles.hpp"
#include "wha/smashcons.hpp"

namespace wha {

namespace {

std::vector<std::vector<std::size_t>> orbits(const std::vector<std::vector<std::size_t>>& act, std::size_t nx) {
    std::vector<int> seen(nx, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t x = 0; x < nx; ++x) {
        if (seen[x] >= 0) continue;
        std::vector<std::size_t> orb{x};
        seen[x] = int(out.size());
        for (std::size_t t = 0; t < orb.size(); ++t)
            for (const auto& g : act)
                if (seen[g[orb[t]]] < 0) {
                    seen[g[orb[t]]] = int(out.size());
                    orb.push_back(g[orb[t]]);
                }
        std::sort(orb.begin(), orb.end());
        out.push_back(orb);
    }
    return out;
}

}  // namespace

CaseStudyReport groupoid_case_study(const GroupTable& grp, const std::vector<std::vector<std::size_t>>& act) {
    validate_group(grp);
    const ModuleAlgebraData A = permutation_module_algebra(grp, act);
    const std::size_t ng = grp.elements.size(), nx = A.A.dim;
    const auto orbs = orbits(act, nx);
    if (orbs.size() != 1) {
        std::string detail = "orbits:";
        for (const auto& o : orbs) {
            detail += " {";
            for (std::size_t i = 0; i < o.size(); ++i) detail += (i ? "," : "") + std::to_string(o[i]);
            detail += "}";
        }
        throw PreconditionError("transitive action", orbs[0], detail);
    }
    const std::vector<std::size_t> inv = group_inverses(grp);
    const auto mul = [&](std::size_t a, std::size_t b) { return grp.table[a][b]; };

    CaseStudyReport cs;
    cs.t = nx;
    for (std::size_t g = 0; g < ng; ++g)
        if (act[g][0] == 0) cs.stabilizer.push_back(g);
    for (std::size_t x = 0; x < nx; ++x) {
        cs.points.push_back(x);
        for (std::size_t g = 0; g < ng; ++g)
            if (act[g][0] == x) {
                cs.coset_reps.push_back(g);
                break;
            }
    }
    // G_1 as a group in its own right, elements in the order of cs.stabilizer.
    const std::size_t n1 = cs.stabilizer.size();
    cs.stabilizer_group.table.assign(n1, std::vector<std::size_t>(n1));
    for (std::size_t a = 0; a < n1; ++a) {
        cs.stabilizer_group.elements.push_back(grp.elements[cs.stabilizer[a]]);
        for (std::size_t b = 0; b < n1; ++b) {
            const std::size_t p = mul(cs.stabilizer[a], cs.stabilizer[b]);
            cs.stabilizer_group.table[a][b] =
                std::size_t(std::find(cs.stabilizer.begin(), cs.stabilizer.end(), p) - cs.stabilizer.begin());
        }
    }
    validate_group(cs.stabilizer_group);

    const SmashProduct s = smash_algebra(A);
    const StructureAlgebra& C = s.carrier;
    const std::size_t n = C.dim, t = cs.t;
    auto basis = [&](std::size_t x, std::size_t g) { return unit_vec(n, s.index(x, g)); };

    cs.units.assign(t, std::vector<Vec>(t));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            cs.units[i][j] = basis(cs.points[i], mul(cs.coset_reps[i], inv[cs.coset_reps[j]]));
    for (std::size_t h : cs.stabilizer) {
        Vec v(n);
        for (std::size_t i = 0; i < t; ++i)
            v[s.index(cs.points[i], mul(mul(cs.coset_reps[i], h), inv[cs.coset_reps[i]]))] += Rat(1);
        cs.phi.push_back(v);
    }

    auto& r = cs.report;
    CheckAccumulator mu("matrix_units");
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            for (std::size_t k = 0; k < t; ++k)
                for (std::size_t l = 0; l < t; ++l) {
                    const Vec want = j == k ? cs.units[i][l] : Vec(n);
                    mu.expect(C.mul(cs.units[i][j], cs.units[k][l]) == want, {i, j, k, l});
                }
    r.add(std::move(mu).done());
    Vec diag(n);
    for (std::size_t i = 0; i < t; ++i) diag = add(diag, cs.units[i][i]);
    r.add("units_sum_to_one", diag == C.unit);

    std::vector<Vec> all_units;
    for (const auto& row : cs.units) all_units.insert(all_units.end(), row.begin(), row.end());
    const std::vector<Vec> cent = centralizer(C, all_units);
    r.add("centralizer_is_phi_span", same_span(cent, cs.phi, n), {},
          "centralizer dim " + std::to_string(cent.size()) + ", |G_1| = " + std::to_string(n1));

    Mat phi_map(n, n1);
    for (std::size_t a = 0; a < n1; ++a) phi_map.set_column(a, cs.phi[a]);
    const HopfData kg1 = group_algebra(cs.stabilizer_group);
    r.merge(check_algebra_map(phi_map, kg1.algebra, C), "phi");
    r.add("phi_injective", rank(phi_map) == n1);

    // M_t (x) kG_1 -> A # H, E_ij (x) h -> E_ij phi(h)
    const StructureAlgebra mt_g1 = tensor_algebra(matrix_algebra(t), kg1.algebra);
    cs.iso = Mat(n, mt_g1.dim);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            for (std::size_t a = 0; a < n1; ++a)
                cs.iso.set_column((i * t + j) * n1 + a, C.mul(cs.units[i][j], cs.phi[a]));
    r.merge(check_algebra_map(cs.iso, mt_g1, C), "iso");
    r.add("iso_bijective", mt_g1.dim == n && rank(cs.iso) == n);

    // Group-like behaviour under the weak coproduct with R = 1 (x) 1.
    const SeparabilityData sep = separability(A);
    TensorElem x_expect({nx, nx});
    for (std::size_t i = 0; i < nx; ++i) x_expect.at2(i, i) = Rat(1);
    r.add("separability_idempotent_is_sum_ei_ei", sep.x == x_expect);
    const SmashWeakHopf w = smash_weak_structure(s, trivial_qt(A.host), sep);
    auto grouplike = [&](const Vec& v) {
        return w.wha.coalgebra.coprod(v) == pure(std::vector<Vec>{v, v});
    };
    CheckAccumulator gu("units_grouplike"), gp("phi_weak_grouplike");
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) gu.expect(grouplike(cs.units[i][j]), {i, j});
    // Delta~(phi(h)) carries no cross terms between distinct points, so the
    // plain group-like identity only holds for t = 1; the weak form always does.
    const TensorElem d1 = w.wha.coalgebra.coprod(w.wha.algebra.unit);
    bool literal = true;
    for (std::size_t a = 0; a < n1; ++a) {
        const TensorElem pp = pure(std::vector<Vec>{cs.phi[a], cs.phi[a]});
        const TensorElem dp = w.wha.coalgebra.coprod(cs.phi[a]);
        gp.expect(dp == mul_same(C, d1, pp) && dp == mul_same(C, pp, d1), {a});
        literal = literal && dp == pp;
    }
    r.add(std::move(gu).done());
    r.add(std::move(gp).done());
    r.facts["phi_grouplike"] = literal;
    return cs;
}

DoubleSmashReport double_smash_decomposition(const HopfData& h) {
    const std::size_t n = h.dim();
    const auto sinv = antipode_inverse(h);
    if (!sinv) throw PreconditionError("invertible antipode");
    const QTStructure dh = drinfeld_double(h);
    DoubleSmashReport out;
    out.smash = smash_algebra(double_module_algebra(h, dh));
    const SmashProduct& s = out.smash;
    const StructureAlgebra& C = s.carrier;
    const std::size_t N = C.dim;
    out.heisenberg_cop = heisenberg_double(opposites(h, Opposite::cop));
    const StructureAlgebra& heis = out.heisenberg_cop;
    const Vec& one = h.algebra.unit;
    auto& r = out.report;

    // l # (p bowtie 1) as a vector of H # D(H).
    auto l_p = [&](std::span<const Rat> l, std::span<const Rat> p) {
        Vec d(n * n);
        for (const auto& [i, pi] : nonzeros(p))
            for (const auto& [j, uj] : nonzeros(one)) d[double_index(n, i, j)] += pi * uj;
        return s.pure(l, d);
    };
    // The inverse of l # (p bowtie 1) -> l # S^-1(p), where S^-1(p) = p o S^-1:
    // iota(l # q) = l # (q o S) bowtie 1.
    Mat iota(N, heis.dim);
    const Mat st = h.antipode.transpose();
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t q = 0; q < n; ++q) iota.set_column(l * n + q, l_p(unit_vec(n, l), st.column(q)));
    r.merge(check_algebra_map(iota, heis, C), "heisenberg_iso");
    r.add("heisenberg_iso_injective", rank(iota) == heis.dim);

    // c(h) = sum_i S(h_(1)) S(x_i(2)) h_(3) S^2(x_i(1)) # (p_i bowtie h_(2))
    const StructureAlgebra& Hm = h.algebra;
    const Mat S2 = h.antipode * h.antipode;
    std::vector<Vec> cvec(n, Vec(N));
    for (std::size_t t = 0; t < n; ++t) {
        const TensorElem d3 = comult_on_leg(h.coalgebra.coprod(unit_vec(n, t)), 1, h.coalgebra);
        for (std::size_t f : d3.support()) {
            const std::size_t h1 = f / (n * n), h2 = (f / n) % n, h3 = f % n;
            const Vec sh1 = h.antipode.column(h1);
            for (std::size_t i = 0; i < n; ++i)
                for (const Entry3& xi : h.coalgebra.comult.slice(i)) {
                    Vec l = Hm.mul(sh1, h.antipode.column(xi.k));
                    l = Hm.mul(Hm.mul(l, unit_vec(n, h3)), S2.column(xi.j));
                    axpy(cvec[t], d3.coeffs()[f] * xi.c, s.pure(l, unit_vec(n * n, double_index(n, i, h2))));
                }
        }
    }
    Mat cmap(N, n);
    for (std::size_t t = 0; t < n; ++t) cmap.set_column(t, cvec[t]);
    r.merge(check_algebra_map(cmap, Hm, C), "centralizer_iso_H");
    r.add("centralizer_injective", rank(cmap) == n);
    CheckAccumulator comm("centralizes_heisenberg");
    for (std::size_t x = 0; x < heis.dim; ++x) {
        const Vec ix = iota.column(x);
        for (std::size_t t = 0; t < n; ++t) comm.expect(C.mul(ix, cvec[t]) == C.mul(cvec[t], ix), {x, t});
    }
    r.add(std::move(comm).done());

    // X (x) h -> iota(X) c(h)
    const StructureAlgebra dom = tensor_algebra(heis, Hm);
    out.iso = Mat(N, dom.dim);
    for (std::size_t x = 0; x < heis.dim; ++x)
        for (std::size_t t = 0; t < n; ++t) out.iso.set_column(x * n + t, C.mul(iota.column(x), cvec[t]));
    r.merge(check_algebra_map(out.iso, dom, C), "total");
    r.add("total_bijective", dom.dim == N && rank(out.iso) == N);
    return out;
}

VerificationReport double_smash_module_check(const HopfData& h, const std::vector<Mat>& m_action) {
    VerificationReport r;
    const std::size_t n = h.dim();
    if (m_action.size() != n) throw std::invalid_argument("double_smash_module_check: one matrix per basis element");
    const std::size_t dm = m_action.empty() ? 0 : m_action[0].rows();
    const auto sinv = antipode_inverse(h);
    if (!sinv) throw PreconditionError("invertible antipode");
    const QTStructure dh = drinfeld_double(h);
    const SmashProduct s = smash_algebra(double_module_algebra(h, dh));
    const std::size_t N = s.carrier.dim, dim_v = n * dm;
    const StructureAlgebra& Hm = h.algebra;

    // y <- S^-1(p) = <p, S^-1(y_(1))> y_(2)
    auto harpoon = [&](const Vec& y, std::size_t p) {
        Vec out(n);
        for (const auto& [yi, yc] : nonzeros(y))
            for (const Entry3& d : h.coalgebra.comult.slice(yi)) {
                const Rat c = (*sinv)(p, d.j);
                if (!c.is_zero()) out[d.k] += yc * d.c * c;
            }
        return out;
    };
    // (l # (p bowtie g)) . (h' (x) m) = l ((g_(1) h' S(g_(3))) <- S^-1(p)) (x) g_(2) m
    std::vector<Mat> rho(N, Mat(dim_v, dim_v));
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t g = 0; g < n; ++g) {
                Mat& op = rho[s.index(l, double_index(n, p, g))];
                const TensorElem d3 = comult_on_leg(h.coalgebra.coprod(unit_vec(n, g)), 1, h.coalgebra);
                for (std::size_t hp = 0; hp < n; ++hp)
                    for (std::size_t f : d3.support()) {
                        const std::size_t g1 = f / (n * n), g2 = (f / n) % n, g3 = f % n;
                        const Vec y = Hm.mul(Hm.mul(unit_vec(n, g1), unit_vec(n, hp)), h.antipode.column(g3));
                        const Vec lv = Hm.mul(unit_vec(n, l), harpoon(y, p));
                        for (std::size_t m = 0; m < dm; ++m) {
                            const Vec gm = m_action[g2].column(m);
                            for (const auto& [a, ac] : nonzeros(lv))
                                for (const auto& [b, bc] : nonzeros(gm))
                                    op(a * dm + b, hp * dm + m) += d3.coeffs()[f] * ac * bc;
                        }
                    }
            }
    CheckAccumulator assoc("module_associativity");
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            Mat rhs(dim_v, dim_v);
            for (const Entry3& e : s.carrier.mult.fiber(x, y)) {
                const Mat& ez = rho[e.k];
                for (std::size_t i = 0; i < dim_v; ++i)
                    for (std::size_t j = 0; j < dim_v; ++j) rhs(i, j) += e.c * ez(i, j);
            }
            assoc.expect(rho[x] * rho[y] == rhs, {x, y});
        }
    r.add(std::move(assoc).done());
    Mat unit_op(dim_v, dim_v);
    for (const auto& [i, c] : nonzeros(s.carrier.unit))
        for (std::size_t a = 0; a < dim_v; ++a)
            for (std::size_t b = 0; b < dim_v; ++b) unit_op(a, b) += c * rho[i](a, b);
    r.add("module_unit", unit_op == Mat::identity(dim_v));
    return r;
}

}  // namespace wha
