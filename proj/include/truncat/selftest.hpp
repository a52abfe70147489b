#pragma once

#include <functional>
#include <string>
#include <vector>

namespace truncat {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    double seconds = 0.0;
    std::string note; // first failure, or a short summary of what was checked
};

/// The acceptance criteria, exact integer equality throughout. `progress`
/// (optional) receives each result as it finishes.
std::vector<CriterionResult> runAcceptanceSuite(
    const std::function<void(const CriterionResult&)>& progress = {});

} // namespace truncat
