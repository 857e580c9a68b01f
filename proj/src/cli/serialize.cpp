#include <cstdio>

#include "wha/cli.hpp"

namespace wha::cli {

namespace {

void expect_array(const json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n)
        throw WorkspaceError(std::string(what) + ": expected an array of length " + std::to_string(n));
}

}  // namespace

json to_json(const Rat& r) { return r.str(); }

Rat rat_from(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (!j.is_string()) throw WorkspaceError("rational: expected \"p/q\" string, got " + j.dump());
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw WorkspaceError(std::string("rational: ") + e.what());
    }
}

json to_json(std::span<const Rat> v) {
    json out = json::array();
    for (const Rat& r : v) out.push_back(to_json(r));
    return out;
}

Vec vec_from(const json& j, std::size_t n) {
    expect_array(j, n, "vector");
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rat_from(j[i]);
    return v;
}

json to_json(const Mat& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

Mat mat_from(const json& j, std::size_t rows, std::size_t cols) {
    expect_array(j, rows, "matrix");
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Vec row = vec_from(j[r], cols);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

json to_json(const Tensor3& t) {
    json out = json::array();
    for (std::size_t i = 0; i < t.dim0(); ++i) {
        json slice = json::array();
        for (std::size_t j = 0; j < t.dim1(); ++j) slice.push_back(to_json(t.fiber_vec(i, j)));
        out.push_back(std::move(slice));
    }
    return out;
}

Tensor3 tensor3_from(const json& j, std::size_t n0, std::size_t n1, std::size_t n2) {
    expect_array(j, n0, "tensor");
    Tensor3::Builder b(n0, n1, n2);
    for (std::size_t i = 0; i < n0; ++i) {
        expect_array(j[i], n1, "tensor slice");
        for (std::size_t k = 0; k < n1; ++k) b.add_fiber(i, k, vec_from(j[i][k], n2));
    }
    return std::move(b).build();
}

json to_json(const TensorElem& t) { return to_json(t.as_matrix()); }

TensorElem tensor2_from(const json& j, std::size_t n0, std::size_t n1) {
    return TensorElem::from_matrix(mat_from(j, n0, n1));
}

json to_json(const StructureAlgebra& a) {
    return {{"dim", a.dim}, {"mult", to_json(a.mult)}, {"unit", to_json(a.unit)}};
}

StructureAlgebra algebra_from(const json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_unsigned()) throw WorkspaceError("algebra: missing \"dim\"");
    const std::size_t n = j["dim"].get<std::size_t>();
    if (!j.contains("mult") || !j.contains("unit")) throw WorkspaceError("algebra: needs \"mult\" and \"unit\"");
    return {n, tensor3_from(j["mult"], n, n, n), vec_from(j["unit"], n)};
}

json to_json(const HopfData& h) {
    const std::size_t n = h.dim();
    json out = to_json(h.algebra);
    out["comult"] = to_json(h.coalgebra.comult);
    out["counit"] = to_json(h.coalgebra.counit);
    if (h.antipode.rows() == n) out["antipode"] = to_json(h.antipode);
    return out;
}

HopfData hopf_from(const json& j) {
    HopfData h;
    h.algebra = algebra_from(j);
    const std::size_t n = h.algebra.dim;
    if (!j.contains("comult") || !j.contains("counit")) throw WorkspaceError("hopf: needs \"comult\" and \"counit\"");
    h.coalgebra = {n, tensor3_from(j["comult"], n, n, n), vec_from(j["counit"], n)};
    if (j.contains("antipode")) h.antipode = mat_from(j["antipode"], n, n);
    return h;
}

json to_json(const GroupTable& g) { return {{"elements", g.elements}, {"table", g.table}}; }

GroupTable group_from(const json& j) {
    if (!j.contains("elements") || !j.contains("table")) throw WorkspaceError("group: needs \"elements\" and \"table\"");
    GroupTable g;
    try {
        g.elements = j["elements"].get<std::vector<std::string>>();
        g.table = j["table"].get<std::vector<std::vector<std::size_t>>>();
    } catch (const json::exception& e) {
        throw WorkspaceError(std::string("group: ") + e.what());
    }
    return g;
}

json to_json(const BlockReport& b) {
    return {{"blocks", b.blocks}, {"residual", b.residual}, {"seed", b.seed}, {"tolerance", b.tolerance}};
}

json to_json(const VerificationReport& r, std::optional<std::size_t> smash_dim_h) {
    json checks = json::array();
    for (const Check& c : r.checks) {
        json e = {{"axiom", c.name}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}};
        if (!c.passed) e["failures"] = c.failures;
        if (!c.detail.empty()) e["detail"] = c.detail;
        if (smash_dim_h && *smash_dim_h > 0 && !c.witness.empty()) {
            json coords = json::array();
            for (std::size_t w : c.witness) coords.push_back({w / *smash_dim_h, w % *smash_dim_h});
            e["witness_smash"] = coords;
        }
        checks.push_back(std::move(e));
    }
    json facts = json::object();
    for (const auto& [k, v] : r.facts) facts[k] = v;
    return {{"checks", checks}, {"facts", facts}, {"ok", r.ok()}};
}

std::string content_hash(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

}  // namespace wha::cli
