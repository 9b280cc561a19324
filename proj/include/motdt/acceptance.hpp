#pragma once

#include <string>
#include <vector>

namespace motdt {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Each criterion is checked against oracles built independently of the engine paths it tests.
std::vector<CriterionResult> run_acceptance();
CriterionResult run_criterion(int id);
constexpr int kCriterionCount = 11;

std::string format_result(const CriterionResult& r);

}  // namespace motdt
