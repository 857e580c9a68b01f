#include <gtest/gtest.h>

#include "wha/cli.hpp"

using namespace wha;
using namespace wha::cli;

namespace {

const char* kBase = R"({
  "objects": {
    "kS3": {"kind": "hopf", "group": "S3"},
    "kZ2": {"kind": "hopf", "group": "Z2"},
    "DS3": {"kind": "qt", "double_of": "kS3"},
    "k2": {"kind": "module-algebra", "host": "kZ2", "permutation": {"action": [[0, 1], [1, 0]]}},
    "k3": {"kind": "module-algebra", "host": "kS3",
           "permutation": {"action": [[0,1,2],[1,0,2],[2,1,0],[0,2,1],[1,2,0],[2,0,1]]}},
    "k2half": {"kind": "module-algebra", "host": "kZ2", "permutation": {"action": [[0, 1], [1, 0]]},
               "qt": {"host": "kZ2", "R": [["1/2", "1/2"], ["1/2", "-1/2"]]}},
    "transpositions": {"kind": "subspace", "qt": {"host": "kS3"},
                       "basis": [[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,1,0,0]]}
  }
})";

bool has_fail(const json& report) {
    for (const json& s : report["sections"])
        for (const json& c : s["checks"])
            if (c["status"] == "fail") return true;
    return false;
}

}  // namespace

TEST(Cli, VerifyGroupAlgebraHopf) {
    const RunResult r = run_verify(kBase, "kS3", "hopf", {});
    EXPECT_EQ(r.exit_code, 0) << r.text;
    EXPECT_EQ(r.report["tool"], "wha");
    EXPECT_EQ(r.report["version"], kVersion);
    EXPECT_EQ(r.report["input_hash"], content_hash(kBase));
    EXPECT_FALSE(r.report["sections"][0]["checks"].empty());
}

TEST(Cli, FaultInjectedCounitFails) {
    json ws = json::parse(kBase);
    const HopfData h = group_algebra(cyclic_group(2));
    json bad = to_json(h);
    bad["kind"] = "hopf";
    bad["counit"] = json::array({"1", "2"});
    ws["objects"]["bad"] = bad;
    const RunResult r = run_verify(ws.dump(), "bad", "hopf", {});
    EXPECT_NE(r.exit_code, 0);
    EXPECT_TRUE(has_fail(r.report));
    EXPECT_NE(r.text.find("FAIL"), std::string::npos);
    EXPECT_NE(r.text.find("witness="), std::string::npos);
}

TEST(Cli, UnknownSuiteIsUsageError) {
    EXPECT_THROW(run_verify(kBase, "kS3", "nonsense", {}), UsageError);
    EXPECT_THROW(run_demo("bogus", {}), UsageError);
    json out;
    EXPECT_THROW(run_construct(kBase, "nonsense", "kS3", "", {}, out), UsageError);
}

TEST(Cli, ParseErrorCarriesLine) {
    const std::string text = "{\n  \"objects\": {\n    \"a\": {\"kind\": \"hopf\",, }\n  }\n}\n";
    const RunResult r = run_verify(text, "a", "hopf", {});
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_NE(r.text.find("line 3"), std::string::npos) << r.text;
}

TEST(Cli, DuplicateNamesRejected) {
    const std::string text = R"({"objects": {"a": {"kind": "hopf", "group": "Z2"}, "a": {"kind": "hopf", "group": "Z3"}}})";
    EXPECT_THROW(Workspace::parse(text), WorkspaceError);
    EXPECT_EQ(run_verify(text, "a", "hopf", {}).exit_code, 3);
}

TEST(Cli, UnresolvedReference) {
    const std::string text = R"({"objects": {"q": {"kind": "qt", "double_of": "missing"}}})";
    const RunResult r = run_verify(text, "q", "qt", {});
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_NE(r.text.find("missing"), std::string::npos);
}

TEST(Cli, ConstructDoubleOfZ2) {
    json out;
    const RunResult r = run_construct(kBase, "double", "kZ2", "", {}, out);
    ASSERT_EQ(r.exit_code, 0) << r.text;
    const std::string name = "double(kZ2)";
    ASSERT_TRUE(out["objects"].contains(name));
    EXPECT_TRUE(out["objects"][name]["report"]["ok"].get<bool>());
    const Workspace ws = Workspace::parse(out.dump());
    const QTStructure q = ws.qt(name);
    EXPECT_EQ(q.dim(), 4u);
    EXPECT_TRUE(verify_qt(q).ok());
}

TEST(Cli, ConstructDualOfDual) {
    json once, twice;
    ASSERT_EQ(run_construct(kBase, "dual", "kS3", "", {}, once).exit_code, 0);
    const RunResult r = run_construct(once.dump(), "dual", "dual(kS3)", "", {}, twice);
    ASSERT_EQ(r.exit_code, 0) << r.text;
    bool saw_iso = false;
    for (const json& s : r.report["sections"])
        if (s["name"] == "double_dual_iso") saw_iso = s["ok"].get<bool>();
    EXPECT_TRUE(saw_iso);
    const Workspace ws = Workspace::parse(twice.dump());
    const HopfData a = ws.hopf("kS3"), b = ws.hopf("dual(dual(kS3))");
    EXPECT_TRUE(check_map(Mat::identity(6), a, b, {true, true, true, true}).ok());
}

TEST(Cli, SmashWhaWithoutQuantumCommutativityNamesHypothesis) {
    json out;
    const RunResult r = run_construct(kBase, "smash-wha", "k2half", "", {}, out);
    EXPECT_NE(r.exit_code, 0);
    EXPECT_EQ(r.report["error"]["hypothesis"], "quantum commutative");
    EXPECT_NE(r.text.find("quantum commutative"), std::string::npos);
    EXPECT_FALSE(out["objects"].contains("smash-wha(k2half)"));
}

TEST(Cli, SmashPipelineSuite) {
    const RunResult r = run_verify(kBase, "k3", "smash-pipeline", {});
    EXPECT_EQ(r.exit_code, 0) << r.text;
    EXPECT_EQ(r.report["values"]["blocks"]["blocks"], json::array({3, 3}));
    EXPECT_TRUE(r.report["values"]["r_in_image"].get<bool>());
}

TEST(Cli, AdjointStableSuite) {
    const RunResult r = run_verify(kBase, "transpositions", "adjoint-stable", {});
    EXPECT_EQ(r.exit_code, 0) << r.text;
    EXPECT_EQ(r.report["values"]["N_dim"], 18);
}

TEST(Cli, QtAndAlmostTriangularSuites) {
    EXPECT_EQ(run_verify(kBase, "DS3", "qt", {}).exit_code, 0);
    const RunResult r = run_verify(kBase, "DS3", "almost-triangular", {});
    EXPECT_EQ(r.report["values"]["triangularity"], "quasi_triangular_only");
}

TEST(Cli, ConstructDecomposeHr) {
    json ws = json::parse(kBase);
    ws["objects"]["triv"] = {{"kind", "qt"}, {"host", "kS3"}};
    json out;
    const RunResult r = run_construct(ws.dump(), "decompose-hr", "triv", "", {}, out);
    ASSERT_EQ(r.exit_code, 0) << r.text;
    const Workspace back = Workspace::parse(out.dump());
    std::vector<std::size_t> dims;
    for (int i = 0; i < 3; ++i) dims.push_back(back.subspace("triv.block" + std::to_string(i)).size());
    EXPECT_EQ(dims, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Cli, GroupAlgebraRecipe) {
    json out;
    const RunResult r = run_construct(kBase, "group-algebra", "", "Z3", {}, out);
    ASSERT_EQ(r.exit_code, 0) << r.text;
    EXPECT_EQ(Workspace::parse(out.dump()).hopf("group-algebra(Z3)").dim(), 3u);
}

TEST(Cli, DemosAreDeterministic) {
    const RunResult a = run_demo("s3-groupoid", {}), b = run_demo("s3-groupoid", {});
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.report.dump(), b.report.dump());
    EXPECT_EQ(a.text, b.text);
    EXPECT_EQ(a.report["values"]["blocks"]["blocks"], json::array({3, 3}));
}

TEST(Cli, DoubleZ2Demo) {
    const RunResult r = run_demo("double-z2", {});
    EXPECT_EQ(r.exit_code, 0) << r.text;
    EXPECT_EQ(r.report["values"]["H#D(H)_dim"], 8);
}
