#include "wha/report.hpp"

#include <sstream>

namespace wha {

bool VerificationReport::ok() const {
    for (const Check& c : checks)
        if (!c.passed) return false;
    return true;
}

Check& VerificationReport::add(std::string name, bool passed, std::vector<std::size_t> witness, std::string detail) {
    Check c;
    c.name = std::move(name);
    c.passed = passed;
    c.witness = std::move(witness);
    c.detail = std::move(detail);
    c.failures = passed ? 0 : 1;
    checks.push_back(std::move(c));
    return checks.back();
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
    for (Check c : other.checks) {
        if (!prefix.empty()) c.name = prefix + "." + c.name;
        checks.push_back(std::move(c));
    }
    for (const auto& [k, v] : other.facts) facts[prefix.empty() ? k : prefix + "." + k] = v;
}

const Check* VerificationReport::find(const std::string& name) const {
    for (const Check& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool VerificationReport::passed(const std::string& name) const {
    const Check* c = find(name);
    return c && c->passed;
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    for (const Check& c : checks) {
        os << (c.passed ? "pass " : "FAIL ") << c.name;
        if (!c.passed) {
            os << "  witness=(";
            for (std::size_t i = 0; i < c.witness.size(); ++i) os << (i ? "," : "") << c.witness[i];
            os << ") failures=" << c.failures;
            if (!c.detail.empty()) os << "  " << c.detail;
        }
        os << '\n';
    }
    for (const auto& [k, v] : facts) os << "fact " << k << " = " << (v ? "true" : "false") << '\n';
    return os.str();
}

PreconditionError::PreconditionError(std::string hypothesis, std::vector<std::size_t> witness, std::string detail)
    : std::runtime_error("precondition failed: " + hypothesis + (detail.empty() ? "" : " (" + detail + ")")),
      hypothesis_(std::move(hypothesis)),
      witness_(std::move(witness)) {}

}  // namespace wha
