#include "wha/repdim.hpp"

namespace wha {

DivisibilityReport dv_divisibility(const YetterDrinfeldData& v, const QTStructure& q) {
    const std::size_t n = v.host.dim(), d = v.dim;
    // Irreducibility: no proper subspace stable under the action and the comodule slices.
    std::vector<Mat> ops;
    for (std::size_t h = 0; h < n; ++h) {
        Mat a(d, d), s(d, d);
        for (const Entry3& e : v.action.slice(h)) a(e.k, e.j) += e.c;
        for (std::size_t i = 0; i < d; ++i)
            for (const Entry3& e : v.coaction.fiber(i, h)) s(e.k, i) += e.c;
        ops.push_back(std::move(a));
        ops.push_back(std::move(s));
    }
    std::vector<Vec> full;
    for (std::size_t i = 0; i < d; ++i) full.push_back(unit_vec(d, i));
    const Splitting sp = split_invariant(ops, full, d);
    if (sp.blocks.size() > 1)
        throw PreconditionError("irreducible Yetter-Drinfeld module", {sp.blocks.front().size()},
                                std::to_string(sp.blocks.size()) + " summands");

    DivisibilityReport out;
    const GeneratedComodule g = yd_to_comodule(v, q);
    out.dim_v = d;
    out.dim_dv = g.subcoalgebra.size();
    out.report.merge(verify_yd(v), "yd");
    out.report.merge(g.report, "generated");
    out.report.facts["absolutely_irreducible"] = sp.complete;
    out.report.add("divides", out.dim_dv != 0 && d % out.dim_dv == 0, {out.dim_dv, d},
                   std::to_string(out.dim_dv) + " | " + std::to_string(d));
    return out;
}

}  // namespace wha
