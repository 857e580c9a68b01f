#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "wha/adjstable.hpp"
#include "wha/repdim.hpp"

namespace wha::cli {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

struct Options {
    std::uint64_t seed = 0;
    double tol = 1e-8;
};

/// Bad command line, unknown demo, suite or recipe.
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Workspace parse or resolution failure; parse errors carry line and column.
class WorkspaceError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- Serialization ----------------------------------------------------------
// Rationals are "p/q" strings ("p" when q = 1); tensors are dense nested arrays.

json to_json(const Rat& r);
Rat rat_from(const json& j);
json to_json(std::span<const Rat> v);
Vec vec_from(const json& j, std::size_t n);
json to_json(const Mat& m);  ///< list of rows
Mat mat_from(const json& j, std::size_t rows, std::size_t cols);
json to_json(const Tensor3& t);
Tensor3 tensor3_from(const json& j, std::size_t n0, std::size_t n1, std::size_t n2);
json to_json(const TensorElem& t);  ///< two legs only
TensorElem tensor2_from(const json& j, std::size_t n0, std::size_t n1);
json to_json(const StructureAlgebra& a);
StructureAlgebra algebra_from(const json& j);
json to_json(const HopfData& h);
HopfData hopf_from(const json& j);
json to_json(const GroupTable& g);
GroupTable group_from(const json& j);
json to_json(const BlockReport& b);
/// Checks as {"axiom", "status", "witness", ...}; with `smash_dim_h` the witness
/// is also given in (i, j) smash coordinates, flat = i * dim_h + j.
json to_json(const VerificationReport& r, std::optional<std::size_t> smash_dim_h = std::nullopt);

/// 64-bit FNV-1a of the bytes, as "fnv1a64:<hex>".
std::string content_hash(const std::string& bytes);

// --- Workspace --------------------------------------------------------------

/// {"objects": {name: {"kind": ..., ...}}}. Kinds: group, hopf, weak-hopf, qt,
/// weak-qt, algebra, module-algebra, subspace, braided-group.
class Workspace {
public:
    /// Throws WorkspaceError with line and column on malformed JSON and on
    /// duplicate object names.
    static Workspace parse(const std::string& text);

    const json& doc() const { return doc_; }
    json& doc() { return doc_; }
    const std::string& hash() const { return hash_; }
    bool has(const std::string& name) const;
    std::string kind(const std::string& name) const;

    GroupTable group(const std::string& name) const;
    HopfData hopf(const std::string& name) const;
    QTStructure qt(const std::string& name) const;
    WeakQTStructure weak_qt(const std::string& name) const;
    StructureAlgebra algebra(const std::string& name) const;
    ModuleAlgebraData module_algebra(const std::string& name) const;
    /// R-matrix attached to a module algebra or subspace ("qt" field), trivial by default.
    QTStructure attached_qt(const std::string& name, const HopfData& host) const;
    std::vector<Vec> subspace(const std::string& name) const;

private:
    const json& object(const std::string& name) const;
    HopfData hopf_value(const json& j) const;
    QTStructure qt_value(const json& j) const;

    json doc_;
    std::string hash_;
};

// --- Commands ---------------------------------------------------------------

struct RunResult {
    int exit_code = 0;
    std::string text;  ///< human-readable report
    json report;       ///< machine-readable report
};

const std::vector<std::string>& demo_names();
const std::vector<std::string>& suite_names();
const std::vector<std::string>& recipe_names();

RunResult run_demo(const std::string& name, const Options& opt);
RunResult run_verify(const std::string& text, const std::string& target, const std::string& suite, const Options& opt);
/// `from` names the input object (may be empty for group-algebra with `group`).
/// On success `out` is the input workspace plus the constructed object(s).
RunResult run_construct(const std::string& text, const std::string& recipe, const std::string& from,
                        const std::string& group, const Options& opt, json& out);

}  // namespace wha::cli
