// Acceptance harness: one pass/fail line per criterion, exact arithmetic.
#include <cstdio>

#include "truncat/selftest.hpp"

int main() {
    bool allPassed = true;
    auto results = truncat::runAcceptanceSuite([&](const truncat::CriterionResult& r) {
        std::printf("criterion %2d [%s] %-52s (%.2fs) %s\n", r.number,
                    r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                    r.note.c_str());
        std::fflush(stdout);
    });
    for (const auto& r : results) allPassed = allPassed && r.passed;
    std::printf("%s\n", allPassed ? "acceptance: all criteria passed"
                                  : "acceptance: FAILURES present");
    return allPassed ? 0 : 1;
}
