#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wha {

/// Outcome of one named identity check. On failure `witness` holds the basis
/// indices of the first violating instance and `failures` counts all of them.
struct Check {
    std::string name;
    bool passed = true;
    std::vector<std::size_t> witness;
    std::string detail;
    std::size_t failures = 0;
};

struct VerificationReport {
    std::vector<Check> checks;
    /// Informational properties that are not pass/fail axioms (e.g. S^2 = id).
    std::map<std::string, bool> facts;

    bool ok() const;
    Check& add(std::string name, bool passed, std::vector<std::size_t> witness = {}, std::string detail = {});
    void add(Check c) { checks.push_back(std::move(c)); }
    /// Appends every check of `other`, prefixing names with `prefix` + ".".
    void merge(const VerificationReport& other, const std::string& prefix = {});
    const Check* find(const std::string& name) const;
    /// True iff the named check exists and passed.
    bool passed(const std::string& name) const;
    std::string summary() const;
};

/// Counts failures of an identity across basis tuples while remembering the first.
class CheckAccumulator {
public:
    explicit CheckAccumulator(std::string name) { c_.name = std::move(name); }
    void fail(std::vector<std::size_t> witness, std::string detail = {}) {
        if (c_.passed) {
            c_.passed = false;
            c_.witness = std::move(witness);
            c_.detail = std::move(detail);
        }
        ++c_.failures;
    }
    void expect(bool ok, std::vector<std::size_t> witness, std::string detail = {}) {
        if (!ok) fail(std::move(witness), std::move(detail));
    }
    bool passed() const { return c_.passed; }
    Check done() && { return std::move(c_); }

private:
    Check c_;
};

/// Raised when a theorem hypothesis is not met. `hypothesis` names the failed
/// hypothesis; `witness` holds basis indices exhibiting the failure.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string hypothesis, std::vector<std::size_t> witness = {}, std::string detail = {});
    const std::string& hypothesis() const { return hypothesis_; }
    const std::vector<std::size_t>& witness() const { return witness_; }

private:
    std::string hypothesis_;
    std::vector<std::size_t> witness_;
};

/// Boolean answer of a predicate together with a witness when it is false.
struct Witnessed {
    bool value = true;
    std::vector<std::size_t> witness;
    std::string detail;
    explicit operator bool() const { return value; }
};

}  // namespace wha
