#include <iostream>

#include "motdt/acceptance.hpp"

int main() {
    int failed = 0;
    for (const auto& r : motdt::run_acceptance()) {
        std::cout << motdt::format_result(r) << "\n";
        if (!r.pass) ++failed;
    }
    std::cout << (failed ? "FAILED " : "all ") << (failed ? failed : motdt::kCriterionCount) << " of "
              << motdt::kCriterionCount << " criteria" << (failed ? "" : " passed") << "\n";
    return failed ? 1 : 0;
}
