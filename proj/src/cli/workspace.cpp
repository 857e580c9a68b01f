#include <set>

#include "wha/cli.hpp"
#include "wha/doubles.hpp"

namespace wha::cli {

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

GroupTable builtin_group(const std::string& name) {
    if (name == "S3") return symmetric_group_s3();
    if (name == "trivial") return trivial_group();
    if (name.size() > 1 && name[0] == 'Z') {
        try {
            return cyclic_group(std::stoul(name.substr(1)));
        } catch (const std::exception&) {
        }
    }
    throw WorkspaceError("unknown built-in group \"" + name + "\" (S3, Z<n>, trivial)");
}

}  // namespace

Workspace Workspace::parse(const std::string& text) {
    Workspace w;
    w.hash_ = content_hash(text);
    std::string top;
    std::set<std::string> names;
    std::string duplicate;
    auto cb = [&](int depth, json::parse_event_t ev, json& parsed) {
        if (ev == json::parse_event_t::key) {
            if (depth == 1) top = parsed.get<std::string>();
            if (depth == 2 && top == "objects" && !names.insert(parsed.get<std::string>()).second && duplicate.empty())
                duplicate = parsed.get<std::string>();
        }
        return true;
    };
    try {
        w.doc_ = json::parse(text, cb);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte);
        throw WorkspaceError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                             e.what());
    }
    if (!duplicate.empty()) throw WorkspaceError("duplicate object name \"" + duplicate + "\"");
    if (!w.doc_.is_object() || !w.doc_.contains("objects") || !w.doc_["objects"].is_object())
        throw WorkspaceError("workspace: top level must be {\"objects\": {...}}");
    for (const auto& [name, obj] : w.doc_["objects"].items())
        if (!obj.is_object() || !obj.contains("kind")) throw WorkspaceError("object \"" + name + "\": missing \"kind\"");
    return w;
}

bool Workspace::has(const std::string& name) const { return doc_["objects"].contains(name); }

const json& Workspace::object(const std::string& name) const {
    if (!has(name)) throw WorkspaceError("unresolved reference \"" + name + "\"");
    return doc_["objects"][name];
}

std::string Workspace::kind(const std::string& name) const { return object(name)["kind"].get<std::string>(); }

GroupTable Workspace::group(const std::string& name) const {
    const json& o = object(name);
    if (o["kind"] != "group") throw WorkspaceError("\"" + name + "\" is not a group");
    if (o.contains("builtin")) return builtin_group(o["builtin"].get<std::string>());
    return group_from(o);
}

HopfData Workspace::hopf_value(const json& j) const {
    if (j.is_string()) return hopf(j.get<std::string>());
    if (j.contains("group")) {
        const json& g = j["group"];
        if (g.is_string()) return group_algebra(has(g.get<std::string>()) ? group(g.get<std::string>()) : builtin_group(g));
        return group_algebra(group_from(g));
    }
    if (j.value("sweedler", false)) return sweedler_algebra();
    if (j.contains("dual_of")) return dual_hopf(hopf_value(j["dual_of"]));
    return hopf_from(j);
}

HopfData Workspace::hopf(const std::string& name) const {
    const json& o = object(name);
    const std::string k = o["kind"];
    if (k == "qt") return qt(name).host;
    if (k != "hopf" && k != "weak-hopf") throw WorkspaceError("\"" + name + "\" is not a Hopf object");
    return hopf_value(o);
}

QTStructure Workspace::qt_value(const json& j) const {
    if (j.is_string()) return qt(j.get<std::string>());
    if (j.contains("double_of")) return drinfeld_double(hopf_value(j["double_of"]));
    if (!j.contains("host")) throw WorkspaceError("qt: missing \"host\"");
    HopfData h = hopf_value(j["host"]);
    if (!j.contains("R") || j["R"] == "trivial") return trivial_qt(std::move(h));
    const std::size_t n = h.dim();
    TensorElem R = tensor2_from(j["R"], n, n);
    return make_qt(std::move(h), std::move(R));
}

QTStructure Workspace::qt(const std::string& name) const {
    const json& o = object(name);
    if (o["kind"] != "qt") throw WorkspaceError("\"" + name + "\" is not a qt object");
    return qt_value(o);
}

WeakQTStructure Workspace::weak_qt(const std::string& name) const {
    const json& o = object(name);
    if (o["kind"] == "qt") return as_weak_qt(qt(name));
    if (o["kind"] != "weak-qt") throw WorkspaceError("\"" + name + "\" is not a weak-qt object");
    if (!o.contains("host") || !o.contains("R") || !o.contains("Rbar"))
        throw WorkspaceError("weak-qt: needs \"host\", \"R\" and \"Rbar\"");
    WeakHopfData h = hopf_value(o["host"]);
    const std::size_t n = h.dim();
    return {h, tensor2_from(o["R"], n, n), tensor2_from(o["Rbar"], n, n)};
}

StructureAlgebra Workspace::algebra(const std::string& name) const {
    const json& o = object(name);
    if (o["kind"] == "module-algebra") return module_algebra(name).A;
    if (o["kind"] != "algebra") throw WorkspaceError("\"" + name + "\" is not an algebra");
    return algebra_from(o);
}

ModuleAlgebraData Workspace::module_algebra(const std::string& name) const {
    const json& o = object(name);
    if (o["kind"] != "module-algebra") throw WorkspaceError("\"" + name + "\" is not a module-algebra");
    if (!o.contains("host")) throw WorkspaceError("module-algebra: missing \"host\"");
    if (o.contains("permutation")) {
        const json& host = o["host"];
        GroupTable g;
        if (host.is_string() && has(host.get<std::string>()) && kind(host.get<std::string>()) == "group")
            g = group(host.get<std::string>());
        else if (host.is_string() && has(host.get<std::string>()) && object(host.get<std::string>()).contains("group")) {
            const json& gj = object(host.get<std::string>())["group"];
            g = gj.is_string() ? (has(gj.get<std::string>()) ? group(gj.get<std::string>()) : builtin_group(gj))
                               : group_from(gj);
        } else {
            throw WorkspaceError("module-algebra: \"permutation\" needs a group-algebra host");
        }
        const json& p = o["permutation"];
        return permutation_module_algebra(g, p["action"].get<std::vector<std::vector<std::size_t>>>());
    }
    HopfData h = hopf_value(o["host"]);
    if (o.value("adjoint", false)) return adjoint_module(h);
    if (!o.contains("algebra")) throw WorkspaceError("module-algebra: missing \"algebra\"");
    StructureAlgebra a = o["algebra"].is_string() ? algebra(o["algebra"].get<std::string>()) : algebra_from(o["algebra"]);
    if (!o.contains("action")) return trivial_module_algebra(std::move(h), std::move(a));
    Tensor3 act = tensor3_from(o["action"], h.dim(), a.dim, a.dim);
    return make_module_algebra(std::move(h), std::move(a), std::move(act));
}

QTStructure Workspace::attached_qt(const std::string& name, const HopfData& host) const {
    const json& o = object(name);
    if (o.contains("qt")) return qt_value(o["qt"]);
    return trivial_qt(host);
}

std::vector<Vec> Workspace::subspace(const std::string& name) const {
    const json& o = object(name);
    if (o["kind"] != "subspace") throw WorkspaceError("\"" + name + "\" is not a subspace");
    if (!o.contains("qt") || !o.contains("basis")) throw WorkspaceError("subspace: needs \"qt\" and \"basis\"");
    const std::size_t n = qt_value(o["qt"]).dim();
    std::vector<Vec> out;
    for (const json& v : o["basis"]) out.push_back(vec_from(v, n));
    return out;
}

}  // namespace wha::cli
