#include "wha/repdim.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace wha {

namespace {

using cd = std::complex<double>;

Eigen::MatrixXd to_eigen(const Mat& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(Eigen::Index(r), Eigen::Index(c)) = m(r, c).to_double();
    return out;
}

/// Best rational approximation with denominator at most max_den.
std::optional<Rat> rationalize(double x, std::int64_t max_den = 100000) {
    if (!std::isfinite(x) || std::abs(x) > 1e12) return std::nullopt;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = x;
    for (int it = 0; it < 64; ++it) {
        const double fl = std::floor(r);
        const auto a = std::int64_t(fl);
        const std::int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1, q0 = q1, p1 = p2, q1 = q2;
        if (std::abs(x - double(p1) / double(q1)) < 1e-9 * std::max(1.0, std::abs(x))) return Rat(p1, q1);
        const double frac = r - fl;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    if (q1 != 0 && std::abs(x - double(p1) / double(q1)) < 1e-7 * std::max(1.0, std::abs(x))) return Rat(p1, q1);
    return std::nullopt;
}

/// A small generating set of the algebra, grown greedily from the basis.
std::vector<std::size_t> generators(const StructureAlgebra& a) {
    std::vector<std::size_t> gens;
    std::vector<Mat> ops;
    std::vector<Vec> span{a.unit};
    span = span_basis(span, a.dim);
    for (std::size_t b = 0; b < a.dim && span.size() < a.dim; ++b) {
        if (in_span(span, unit_vec(a.dim, b))) continue;
        gens.push_back(b);
        ops.push_back(a.left_mult(unit_vec(a.dim, b)));
        const std::vector<Vec> seed{a.unit};
        span = operator_closure(ops, seed, a.dim);
    }
    return gens;
}

std::vector<Vec> center_basis(const StructureAlgebra& a) {
    const std::size_t n = a.dim;
    const auto gens = generators(a);
    Mat sys(std::max<std::size_t>(gens.size(), 1) * n, n);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const Vec eg = unit_vec(n, gens[g]);
        const Mat d = a.right_mult(eg) - a.left_mult(eg);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) sys(g * n + r, c) = d(r, c);
    }
    return kernel_basis(sys);
}

bool trace_form_nondegenerate(const StructureAlgebra& a) {
    const std::size_t n = a.dim;
    Vec tr(n);
    for (std::size_t k = 0; k < n; ++k)
        for (const Entry3& e : a.mult.slice(k))
            if (e.j == e.k) tr[k] += e.c;
    Mat t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (const Entry3& e : a.mult.slice(i)) t(i, e.j) += e.c * tr[e.k];
    return rank(t) == n;
}

}  // namespace

BlockReport wedderburn_blocks(const StructureAlgebra& a, double tol, std::uint64_t seed) {
    if (!trace_form_nondegenerate(a))
        throw PreconditionError("semisimple algebra", {}, "the trace form of the regular representation is degenerate");
    const std::size_t n = a.dim;
    const std::vector<Vec> z = center_basis(a);
    BlockReport br;
    br.dim = n;
    br.seed = seed;
    br.tolerance = tol;
    br.center_dim = z.size();

    for (unsigned attempt = 0; attempt < 4; ++attempt) {
        br.attempts = attempt + 1;
        std::mt19937_64 rng(seed + attempt);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        Eigen::MatrixXd lz = Eigen::MatrixXd::Zero(Eigen::Index(n), Eigen::Index(n));
        for (const Vec& zi : z) {
            const double r = dist(rng);
            lz += r * to_eigen(a.left_mult(zi));
        }
        Eigen::EigenSolver<Eigen::MatrixXd> es(lz, false);
        if (es.info() != Eigen::Success) continue;
        std::vector<cd> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
        double scale = 1.0;
        for (const cd& v : ev) scale = std::max(scale, std::abs(v));
        std::sort(ev.begin(), ev.end(), [](const cd& x, const cd& y) {
            return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
        });
        // Cluster by proximity; clusters are far apart for a generic central element.
        std::vector<std::vector<cd>> clusters;
        const double join = 1e-6 * scale;
        for (const cd& v : ev) {
            bool placed = false;
            for (auto& c : clusters)
                if (std::abs(c.front() - v) < join) {
                    c.push_back(v);
                    placed = true;
                    break;
                }
            if (!placed) clusters.push_back({v});
        }
        if (clusters.size() != z.size()) continue;
        std::vector<cd> means;
        double resid = 0;
        for (const auto& c : clusters) {
            cd m = 0;
            for (const cd& v : c) m += v;
            m /= double(c.size());
            for (const cd& v : c) resid = std::max(resid, std::abs(v - m));
            means.push_back(m);
        }
        double gap = 1e300;
        for (std::size_t i = 0; i < means.size(); ++i)
            for (std::size_t j = i + 1; j < means.size(); ++j) gap = std::min(gap, std::abs(means[i] - means[j]) / scale);
        if (means.size() > 1 && gap <= 1e-4) continue;
        if (resid >= tol * scale) continue;
        std::vector<std::size_t> blocks;
        std::size_t total = 0;
        bool square = true;
        for (const auto& c : clusters) {
            const auto d = std::size_t(std::llround(std::sqrt(double(c.size()))));
            if (d * d != c.size()) square = false;
            blocks.push_back(d);
            total += d * d;
        }
        if (!square || total != n) continue;
        std::sort(blocks.begin(), blocks.end());
        br.blocks = blocks;
        br.residual = resid;
        return br;
    }
    throw std::runtime_error("wedderburn_blocks: degenerate spectrum after 3 reseeds");
}

FPdimReport fpdim_report(const WeakHopfData& w, const ModuleAlgebraData& A, double tol, std::uint64_t seed) {
    const SimplicityResult s = is_H_simple(A);
    if (s.verdict != Simplicity::certified_simple)
        throw PreconditionError("H-simple A", {}, "is_H_simple returned " + to_string(s.verdict));
    FPdimReport out;
    out.blocks = wedderburn_blocks(w.algebra, tol, seed);
    const std::size_t da = A.A.dim;
    CheckAccumulator div("dim_A_divides_simple_dims");
    for (std::size_t i = 0; i < out.blocks.blocks.size(); ++i) {
        const std::size_t d = out.blocks.blocks[i];
        div.expect(d % da == 0, {i, d});
        out.fpdims.push_back(d / da);
    }
    out.report.add(std::move(div).done());
    out.report.add("fpdims_positive",
                   std::all_of(out.fpdims.begin(), out.fpdims.end(), [](std::size_t f) { return f > 0; }));
    return out;
}

std::optional<std::vector<Eigenspace>> rational_eigenspaces(const Mat& m) {
    const std::size_t n = m.rows();
    if (n == 0) return std::vector<Eigenspace>{};
    Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(m), false);
    if (es.info() != Eigen::Success) return std::nullopt;
    std::vector<Rat> cands;
    for (Eigen::Index i = 0; i < Eigen::Index(n); ++i) {
        const cd v = es.eigenvalues()[i];
        if (std::abs(v.imag()) > 1e-6 * std::max(1.0, std::abs(v))) return std::nullopt;
        const auto r = rationalize(v.real());
        if (!r) return std::nullopt;
        if (std::find(cands.begin(), cands.end(), *r) == cands.end()) cands.push_back(*r);
    }
    std::vector<Eigenspace> out;
    std::size_t total = 0;
    for (const Rat& lam : cands) {
        Mat shifted = m;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lam;
        auto k = kernel_basis(shifted);
        if (k.empty()) return std::nullopt;
        total += k.size();
        out.push_back({lam, std::move(k)});
    }
    if (total != n) return std::nullopt;
    return out;
}

std::optional<std::vector<Vec>> split_commutative(const StructureAlgebra& c) {
    const std::size_t r = c.dim;
    if (r == 1) return std::vector<Vec>{c.unit};
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> dist(-7, 7);
    for (int attempt = 0; attempt < 12; ++attempt) {
        Vec z(r);
        for (std::size_t i = 0; i < r; ++i) z[i] = Rat(dist(rng));
        const auto es = rational_eigenspaces(c.left_mult(z));
        if (!es || es->size() != r) continue;
        std::vector<Vec> idem;
        bool ok = true;
        for (const Eigenspace& e : *es) {
            const Vec& v = e.basis[0];
            const Vec v2 = c.mul(v, v);
            // v^2 = mu v for the generator of a one-dimensional ideal
            std::size_t piv = 0;
            while (v[piv].is_zero()) ++piv;
            const Rat mu = v2[piv] / v[piv];
            if (mu.is_zero() || v2 != scale(v, mu)) {
                ok = false;
                break;
            }
            idem.push_back(scale(v, Rat(1) / mu));
        }
        if (!ok) continue;
        Vec sum(r);
        for (const Vec& e : idem) sum = add(sum, e);
        if (sum != c.unit) continue;
        return idem;
    }
    return std::nullopt;
}

ClassIdempotents class_idempotents(const HopfData& h, const QTStructure& q, const IntegralPair& ip) {
    const std::size_t n = h.dim();
    const StructureAlgebra dual = dual_hopf(h).algebra;
    ClassIdempotents out;
    // f(xy) = f(yx) for all basis x, y
    Mat sys(n * n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            for (const Entry3& e : h.algebra.mult.fiber(x, y)) sys(x * n + y, e.k) += e.c;
            for (const Entry3& e : h.algebra.mult.fiber(y, x)) sys(x * n + y, e.k) -= e.c;
        }
    out.cocommutative = kernel_basis(sys);
    const StructureAlgebra C = restrict_algebra(dual, out.cocommutative);
    const auto idem = split_commutative(C);
    if (!idem) throw PreconditionError("C(H^*) split over the rationals", {out.cocommutative.size()});

    const BraidedGroupData bg = transmute(q);
    const StructureAlgebra hr_dual = bg.dual_algebra();
    auto& r = out.report;
    CheckAccumulator orth("orthogonal_idempotents"), central("central_in_HR_dual"), blocks("block_equality");
    Vec sum(n);
    for (const Vec& coords : *idem) {
        Vec F(n);
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!coords[i].is_zero()) axpy(F, coords[i], out.cocommutative[i]);
        sum = add(sum, F);
        ClassIdempotent ci;
        ci.F = F;
        out.items.push_back(ci);
    }
    r.add("sum_is_counit", sum == h.coalgebra.counit);
    for (std::size_t i = 0; i < out.items.size(); ++i) {
        const Vec& Fi = out.items[i].F;
        for (std::size_t j = 0; j < out.items.size(); ++j) {
            const Vec want = i == j ? Fi : Vec(n);
            orth.expect(dual.mul(Fi, out.items[j].F) == want, {i, j});
        }
        for (std::size_t t = 0; t < n; ++t) {
            const Vec pt = unit_vec(n, t);
            central.expect(hr_dual.mul(Fi, pt) == hr_dual.mul(pt, Fi), {i, t});
        }
        // F -->_R e_t = e_t^(1) <F, e_t^(2)>
        std::vector<Vec> right;
        for (std::size_t t = 0; t < n; ++t) {
            Vec v(n);
            for (const Entry3& e : bg.comult_R.slice(t))
                if (!Fi[e.k].is_zero()) v[e.j] += e.c * Fi[e.k];
            right.push_back(v);
        }
        // Lambda <- g = <g, Lambda_(1)> Lambda_(2) with g = F p_t
        std::vector<Vec> left;
        for (std::size_t t = 0; t < n; ++t) {
            const Vec g = dual.mul(Fi, unit_vec(n, t));
            Vec v(n);
            for (const auto& [l, lc] : nonzeros(ip.Lambda))
                for (const Entry3& e : h.coalgebra.comult.slice(l))
                    if (!g[e.j].is_zero()) v[e.k] += lc * e.c * g[e.j];
            left.push_back(v);
        }
        out.items[i].block = span_basis(right, n);
        blocks.expect(same_span(right, left, n), {i});
    }
    r.add(std::move(orth).done());
    r.add(std::move(central).done());
    r.add(std::move(blocks).done());
    return out;
}

}  // namespace wha
