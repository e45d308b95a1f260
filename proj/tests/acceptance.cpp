// Acceptance suite: one pass/fail line per criterion, exact comparisons
// throughout. Exit status is the number of failing criteria.

#include "chernum/relations.hpp"
#include "chernum/selftest.hpp"

#include <cstdio>
#include <exception>

int main() {
    try {
        auto criteria = chernum::selftest::run_acceptance(4);
        int failures = 0;
        for (const auto& c : criteria) {
            std::printf("criterion %2d: %s - %s (%zu cases)\n", c.id, c.pass ? "PASS" : "FAIL", c.title.c_str(),
                        c.cases.size());
            if (!c.pass) {
                ++failures;
                for (const auto& r : c.cases) {
                    if (r.equal) continue;
                    std::printf("  FAILED  %s  %s %s\n    lhs: %s\n    rhs: %s\n", r.relation.c_str(),
                                r.manifold.c_str(), r.bundle.c_str(),
                                chernum::relations::value_to_string(r.lhs).c_str(),
                                chernum::relations::value_to_string(r.rhs).c_str());
                }
            }
        }
        return failures;
    } catch (const std::exception& e) {
        std::printf("acceptance suite aborted: %s\n", e.what());
        return 99;
    }
}
