#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "wha/cli.hpp"
#include "wha/doubles.hpp"
#include "wha/smashcons.hpp"

namespace wha::cli {

namespace {

std::string witness_text(const std::vector<std::size_t>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

class Run {
public:
    Run(std::string command, std::string hash, const Options& opt) : command_(std::move(command)), hash_(std::move(hash)), opt_(opt) {}

    void add(const std::string& name, const VerificationReport& r, std::optional<std::size_t> dim_h = std::nullopt) {
        json s = to_json(r, dim_h);
        s["name"] = name;
        sections_.push_back(std::move(s));
        ok_ = ok_ && r.ok();
        text_ += "[" + name + "] " + (r.ok() ? "ok" : "FAILED") + "\n";
        for (const Check& c : r.checks) {
            text_ += std::string("  ") + (c.passed ? "PASS " : "FAIL ") + c.name;
            if (!c.passed) {
                text_ += " witness=" + witness_text(c.witness);
                if (dim_h && *dim_h > 0) {
                    text_ += " smash=";
                    for (std::size_t w : c.witness)
                        text_ += "(" + std::to_string(w / *dim_h) + "," + std::to_string(w % *dim_h) + ")";
                }
                text_ += " failures=" + std::to_string(c.failures);
                if (!c.detail.empty()) text_ += " " + c.detail;
            }
            text_ += "\n";
        }
        for (const auto& [k, v] : r.facts) text_ += "  fact " + k + " = " + (v ? "true" : "false") + "\n";
    }

    void value(const std::string& key, json v) {
        text_ += key + ": " + v.dump() + "\n";
        values_[key] = std::move(v);
    }

    void precondition(const PreconditionError& e) {
        ok_ = false;
        error_ = {{"hypothesis", e.hypothesis()}, {"witness", e.witness()}, {"message", e.what()}};
        text_ += "precondition failed: " + e.hypothesis() + " witness=" + witness_text(e.witness()) + " (" + e.what() + ")\n";
    }

    void failure(const std::string& kind, const std::string& msg) {
        ok_ = false;
        error_ = {{"kind", kind}, {"message", msg}};
        text_ += kind + ": " + msg + "\n";
    }

    RunResult finish(int fail_code = 1) {
        RunResult r;
        r.exit_code = ok_ ? 0 : fail_code;
        r.report = {{"tool", "wha"},       {"version", kVersion},  {"input_hash", hash_},
                    {"command", command_}, {"seed", opt_.seed},    {"tolerance", opt_.tol},
                    {"sections", sections_}, {"values", values_}, {"ok", ok_}};
        if (!error_.is_null()) r.report["error"] = error_;
        std::ostringstream head;
        head << "wha " << kVersion << "  " << command_ << "  input " << hash_ << "\n";
        r.text = head.str() + text_ + (ok_ ? "ALL CHECKS PASSED\n" : "CHECKS FAILED\n");
        return r;
    }

    const Options& opt() const { return opt_; }

private:
    std::string command_, hash_;
    Options opt_;
    json sections_ = json::array();
    json values_ = json::object();
    json error_;
    std::string text_;
    bool ok_ = true;
};

std::vector<Vec> unit_span(std::size_t n, std::initializer_list<std::size_t> idx) {
    std::vector<Vec> out;
    for (std::size_t i : idx) out.push_back(unit_vec(n, i));
    return out;
}

std::vector<std::vector<std::size_t>> s3_points() {
    return {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
}

std::vector<Mat> regular_left(const HopfData& h) {
    std::vector<Mat> out;
    for (std::size_t i = 0; i < h.dim(); ++i) out.push_back(h.algebra.left_mult(unit_vec(h.dim(), i)));
    return out;
}

void smash_pipeline(Run& run, const ModuleAlgebraData& m, const QTStructure& q) {
    const std::size_t nh = m.host.dim();
    run.add("module_algebra", verify_module_algebra(m));
    const SmashProduct s = smash_algebra(m);
    const SeparabilityData sep = separability(m);
    run.add("separability", sep.report);
    const SmashWeakHopf w = smash_weak_structure(s, q, sep);
    run.add("smash_wha.identities", w.identities, nh);
    run.add("smash_wha.weak_hopf", verify_weak_hopf(w.wha), nh);
    run.value("smash_dim", s.carrier.dim);
    try {
        const SmashQT sq = smash_qt(w);
        run.add("smash_qt.identities", sq.identities, nh);
        run.add("smash_qt.weak_qt", verify_weak_qt(sq.wq), nh);
    } catch (const PreconditionError& e) {
        run.value("smash_qt_skipped", e.hypothesis());
    }
    const BAlgebra b = build_B(m, q, sep);
    run.add("B.closed_forms", b.report);
    run.add("B.weak_hopf", verify_weak_hopf(b.wha));
    run.add("B.weak_qt", verify_weak_qt(b.weak_qt()));
    const PhiEmbedding phi = phi_embed(w, b);
    run.add("phi_embed", phi.report, nh);
    const ImageMuger im = rb_in_image_iff_muger(b, phi);
    run.add("rb_in_image_iff_muger", im.report);
    run.value("r_in_image", im.r_in_image);
    run.value("muger", im.muger);
    if (is_H_simple(m).verdict == Simplicity::certified_simple) {
        const FPdimReport fp = fpdim_report(w.wha, m, run.opt().tol, run.opt().seed);
        run.add("fpdim", fp.report);
        run.value("blocks", to_json(fp.blocks));
        run.value("fpdims", fp.fpdims);
    }
}

void adjoint_stable(Run& run, std::span<const Vec> D, const QTStructure& q) {
    if (classify_triangularity(q).kind == Triangularity::quasi_triangular_only) {
        const PsiPhi p = psi_phi(D, q);
        run.add("psi_phi", p.report, q.dim());
        run.value("convention", to_string(p.convention));
        run.value("N_dim", p.N.carrier.dim);
        return;
    }
    const NDTransport t = nd_transport_report(D, q);
    run.add("nd_transport", t.report, q.dim());
    run.value("convention", to_string(t.iso.convention));
    run.value("N_dim", t.nd.host.dim());
    run.value("N_D_blocks", t.nd_blocks);
    run.value("N_W_blocks", t.nw_blocks);
}

void demo_s3_groupoid(Run& run) {
    const GroupTable g = symmetric_group_s3();
    const CaseStudyReport cs = groupoid_case_study(g, s3_points());
    run.add("case_study", cs.report, 6);
    run.value("t", cs.t);
    run.value("stabilizer_order", cs.stabilizer.size());
    const ModuleAlgebraData m = permutation_module_algebra(g, s3_points());
    const SmashWeakHopf w = smash_weak_structure(smash_algebra(m), trivial_qt(m.host), separability(m));
    run.add("smash_wha.identities", w.identities, 6);
    run.add("smash_wha.weak_hopf", verify_weak_hopf(w.wha), 6);
    const FPdimReport fp = fpdim_report(w.wha, m, run.opt().tol, run.opt().seed);
    run.add("fpdim", fp.report);
    run.value("blocks", to_json(fp.blocks));
    run.value("fpdims", fp.fpdims);
}

void demo_double(Run& run, const HopfData& h) {
    const QTStructure d = drinfeld_double(h);
    run.add("double.hopf", verify_hopf(d.host));
    run.add("double.qt", verify_qt(d));
    run.value("double_dim", d.dim());
    run.value("triangularity", to_string(classify_triangularity(d).kind));
    run.add("prop42", prop42_report(d));
    const DoubleSmashReport ds = double_smash_decomposition(h);
    run.add("H#D(H)", ds.report, d.dim());
    run.value("H#D(H)_dim", ds.smash.carrier.dim);
    run.add("module_H(x)M", double_smash_module_check(h, regular_left(h)));
}

void demo_hr_s3(Run& run) {
    const HopfData h = group_algebra(symmetric_group_s3());
    const QTStructure q = trivial_qt(h);
    const BraidedGroupData bg = transmute(q);
    run.add("transmute", bg.report);
    const HRDecomposition dec = decompose_hr(bg);
    run.add("decompose_hr", dec.report);
    std::vector<std::size_t> dims;
    json blocks = json::array();
    for (const auto& b : dec.blocks) {
        dims.push_back(b.size());
        json bj = json::array();
        for (const Vec& v : b) bj.push_back(to_json(v));
        blocks.push_back(bj);
    }
    run.value("hr_blocks", dims);
    run.value("hr_block_bases", blocks);
    const IntegralPair ip = integrals(h);
    const ClassIdempotents ci = class_idempotents(h, q, ip);
    run.add("class_idempotents", ci.report);
    run.add("hr_dual_separability", hr_dual_separability(bg, ip).report);
    run.add("prop42", prop42_report(q));
    std::vector<std::string> divs;
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        const DivisibilityReport dv = dv_divisibility(regular_yd(h, dec.blocks[i]), q);
        run.add("divisibility.block" + std::to_string(i), dv.report);
        divs.push_back(std::to_string(dv.dim_dv) + "|" + std::to_string(dv.dim_v));
    }
    run.value("divisibility", divs);
    const ModuleAlgebraData hm = hr_dual_module(bg);
    const SmashWeakHopf w = smash_weak_structure(smash_algebra(hm), op_qt(q), separability(hm));
    run.add("HR*#Hop.weak_hopf", verify_weak_hopf(w.wha), h.dim());
    const SmashQT sq = smash_qt(w);
    run.add("HR*#Hop.weak_qt", verify_weak_qt(sq.wq), h.dim());
    run.add("HR*#Hop.almost_triangular", almost_triangular_wha_report(sq.wq), h.dim());
}

void demo_nd(Run& run) {
    const QTStructure q = trivial_qt(group_algebra(symmetric_group_s3()));
    adjoint_stable(run, unit_span(6, {1, 2, 3}), q);
}

void demo_heisenberg_z2(Run& run) {
    const HopfData h = group_algebra(cyclic_group(2));
    const StructureAlgebra heis = heisenberg_double(h);
    run.add("heisenberg.algebra", verify_algebra(heis));
    run.value("heisenberg_blocks", to_json(wedderburn_blocks(heis, run.opt().tol, run.opt().seed)));
    const DoubleSmashReport ds = double_smash_decomposition(h);
    run.add("H#D(H)", ds.report, 4);
    run.value("H#D(H)_dim", ds.smash.carrier.dim);
}

const std::map<std::string, std::function<void(Run&)>>& demos() {
    static const std::map<std::string, std::function<void(Run&)>> m = {
        {"s3-groupoid", demo_s3_groupoid},
        {"double-z2", [](Run& r) { demo_double(r, group_algebra(cyclic_group(2))); }},
        {"double-s3", [](Run& r) { demo_double(r, group_algebra(symmetric_group_s3())); }},
        {"hr-s3", demo_hr_s3},
        {"nd-transpositions", demo_nd},
        {"heisenberg-z2", demo_heisenberg_z2},
    };
    return m;
}

template <class F>
RunResult guarded(Run& run, F&& body) {
    try {
        body();
    } catch (const PreconditionError& e) {
        run.precondition(e);
    } catch (const WorkspaceError& e) {
        run.failure("workspace error", e.what());
        return run.finish(3);
    } catch (const std::invalid_argument& e) {
        run.failure("invalid input", e.what());
    }
    return run.finish();
}

json subspace_json(const std::string& qt_name, std::span<const Vec> basis) {
    json b = json::array();
    for (const Vec& v : basis) b.push_back(to_json(v));
    return {{"kind", "subspace"}, {"qt", qt_name}, {"basis", b}};
}

json weak_qt_json(const WeakQTStructure& w) {
    json host = to_json(w.host);
    host["kind"] = "weak-hopf";
    return {{"kind", "weak-qt"}, {"host", host}, {"R", to_json(w.Rw)}, {"Rbar", to_json(w.Rw_bar)}};
}

}  // namespace

const std::vector<std::string>& demo_names() {
    static const std::vector<std::string> v = {"s3-groupoid", "double-z2", "double-s3", "hr-s3", "nd-transpositions", "heisenberg-z2"};
    return v;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> v = {"hopf",    "qt",           "module-algebra", "weak-hopf",
                                               "weak-qt", "almost-triangular", "smash-pipeline", "adjoint-stable"};
    return v;
}

const std::vector<std::string>& recipe_names() {
    static const std::vector<std::string> v = {"group-algebra", "dual", "double", "heisenberg", "smash",
                                               "smash-wha",     "build-B", "transmute", "nd", "decompose-hr"};
    return v;
}

RunResult run_demo(const std::string& name, const Options& opt) {
    const auto it = demos().find(name);
    if (it == demos().end()) throw UsageError("unknown demo \"" + name + "\"");
    Run run("demo " + name, content_hash("demo " + name), opt);
    return guarded(run, [&] { it->second(run); });
}

RunResult run_verify(const std::string& text, const std::string& target, const std::string& suite, const Options& opt) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw UsageError("unknown suite \"" + suite + "\"");
    Run run("verify " + target + " " + suite, content_hash(text), opt);
    return guarded(run, [&] {
        const Workspace ws = Workspace::parse(text);
        const std::string k = ws.kind(target);
        if (suite == "hopf") {
            run.add("hopf", verify_hopf(ws.hopf(target)));
        } else if (suite == "weak-hopf") {
            const HopfData h = ws.kind(target) == "weak-qt" ? ws.weak_qt(target).host : ws.hopf(target);
            run.add("weak_hopf", verify_weak_hopf(h));
        } else if (suite == "qt") {
            const QTStructure q = ws.qt(target);
            run.add("qt", verify_qt(q));
            run.value("triangularity", to_string(classify_triangularity(q).kind));
        } else if (suite == "weak-qt") {
            run.add("weak_qt", verify_weak_qt(ws.weak_qt(target)));
        } else if (suite == "almost-triangular") {
            if (k == "qt") {
                const QTStructure q = ws.qt(target);
                run.add("prop42", prop42_report(q));
                run.value("triangularity", to_string(classify_triangularity(q).kind));
            }
            run.add("almost_triangular", almost_triangular_wha_report(ws.weak_qt(target)));
        } else if (suite == "module-algebra") {
            run.add("module_algebra", verify_module_algebra(ws.module_algebra(target)));
        } else if (suite == "smash-pipeline") {
            const ModuleAlgebraData m = ws.module_algebra(target);
            smash_pipeline(run, m, ws.attached_qt(target, m.host));
        } else {
            const std::vector<Vec> D = ws.subspace(target);
            adjoint_stable(run, D, ws.attached_qt(target, HopfData{}));
        }
    });
}

RunResult run_construct(const std::string& text, const std::string& recipe, const std::string& from,
                        const std::string& group, const Options& opt, json& out) {
    if (std::find(recipe_names().begin(), recipe_names().end(), recipe) == recipe_names().end())
        throw UsageError("unknown recipe \"" + recipe + "\"");
    Run run("construct " + recipe + (from.empty() ? "" : " " + from), content_hash(text), opt);
    json made = json::object();  // name -> object
    const std::string base = recipe + "(" + (from.empty() ? group : from) + ")";
    RunResult r = guarded(run, [&] {
        const Workspace ws = Workspace::parse(text);
        out = ws.doc();
        auto need_from = [&] {
            if (from.empty()) throw UsageError("recipe \"" + recipe + "\" needs --from <object>");
        };
        if (recipe == "group-algebra") {
            if (group.empty()) throw UsageError("group-algebra needs --group <name>");
            json src = {{"kind", "hopf"}, {"group", group}};
            json tmp = ws.doc();
            tmp["objects"]["__g"] = src;
            const HopfData h = Workspace::parse(tmp.dump()).hopf("__g");
            run.add("hopf", verify_hopf(h));
            json o = to_json(h);
            o["kind"] = "hopf";
            made[base] = o;
        } else if (recipe == "dual") {
            need_from();
            const HopfData h = ws.hopf(from);
            const HopfData d = dual_hopf(h);
            run.add("hopf", verify_hopf(d));
            // The double dual is identified with the input by the identity matrix.
            run.add("double_dual_iso", check_map(Mat::identity(h.dim()), h, dual_hopf(d), {true, true, true, true}));
            json o = to_json(d);
            o["kind"] = "hopf";
            made[base] = o;
        } else if (recipe == "double") {
            need_from();
            const QTStructure q = drinfeld_double(ws.hopf(from));
            run.add("hopf", verify_hopf(q.host));
            run.add("qt", verify_qt(q));
            json host = to_json(q.host);
            host["kind"] = "hopf";
            made[base] = {{"kind", "qt"}, {"host", host}, {"R", to_json(q.R)}};
        } else if (recipe == "heisenberg") {
            need_from();
            const StructureAlgebra a = heisenberg_double(ws.hopf(from));
            run.add("algebra", verify_algebra(a));
            json o = to_json(a);
            o["kind"] = "algebra";
            made[base] = o;
        } else if (recipe == "smash") {
            need_from();
            const ModuleAlgebraData m = ws.module_algebra(from);
            const SmashProduct s = smash_algebra(m);
            run.add("algebra", verify_algebra(s.carrier), m.host.dim());
            json o = to_json(s.carrier);
            o["kind"] = "algebra";
            o["codec"] = {{"dim_a", s.dim_a()}, {"dim_h", s.dim_h()}, {"index", "i * dim_h + j"}};
            made[base] = o;
        } else if (recipe == "smash-wha") {
            need_from();
            const ModuleAlgebraData m = ws.module_algebra(from);
            const SmashWeakHopf w = smash_weak_structure(smash_algebra(m), ws.attached_qt(from, m.host), separability(m));
            run.add("identities", w.identities, m.host.dim());
            run.add("weak_hopf", verify_weak_hopf(w.wha), m.host.dim());
            json o = to_json(w.wha);
            o["kind"] = "weak-hopf";
            o["codec"] = {{"dim_a", m.A.dim}, {"dim_h", m.host.dim()}, {"index", "i * dim_h + j"}};
            made[base] = o;
        } else if (recipe == "build-B") {
            need_from();
            const ModuleAlgebraData m = ws.module_algebra(from);
            const BAlgebra b = build_B(m, ws.attached_qt(from, m.host), separability(m));
            run.add("closed_forms", b.report);
            run.add("weak_hopf", verify_weak_hopf(b.wha));
            run.add("weak_qt", verify_weak_qt(b.weak_qt()));
            made[base] = weak_qt_json(b.weak_qt());
        } else if (recipe == "transmute") {
            need_from();
            const BraidedGroupData bg = transmute(ws.qt(from));
            run.add("braided_group", bg.report);
            made[base] = {{"kind", "braided-group"},
                          {"qt", from},
                          {"adjoint_action", to_json(bg.adjoint_action)},
                          {"comult_R", to_json(bg.comult_R)},
                          {"antipode_R", to_json(bg.antipode_R)}};
        } else if (recipe == "nd") {
            need_from();
            const std::vector<Vec> D = ws.subspace(from);
            const NDTransport t = nd_transport_report(D, ws.attached_qt(from, HopfData{}));
            run.add("nd_transport", t.report);
            run.value("N_D_blocks", t.nd_blocks);
            made[base] = weak_qt_json(t.nd);
        } else {
            need_from();
            const HRDecomposition dec = decompose_hr(transmute(ws.qt(from)));
            run.add("decompose_hr", dec.report);
            for (std::size_t i = 0; i < dec.blocks.size(); ++i)
                made[from + ".block" + std::to_string(i)] = subspace_json(from, dec.blocks[i]);
        }
    });
    if (r.exit_code == 0) {
        for (auto& [name, o] : made.items()) {
            o["note"] = "constructed by " + recipe + (from.empty() ? "" : " from " + from);
            o["report"] = r.report;
            out["objects"][name] = o;
        }
    }
    return r;
}

}  // namespace wha::cli
