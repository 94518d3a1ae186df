#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace absplit {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Ordered list of named checks. Failures are recorded, never thrown.
struct CheckResult {
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }

    void merge(const CheckResult& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::vector<const Check*> failures() const {
        std::vector<const Check*> out;
        for (const auto& c : checks)
            if (!c.passed) out.push_back(&c);
        return out;
    }
};

using VerificationReport = CheckResult;

}  // namespace absplit
