#pragma once

#include <string>
#include <vector>

namespace hilbertgeo {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Ids of the acceptance criteria, 1..12.
std::vector<int> criterion_ids();

/// Runs one criterion; library errors are caught and reported as failures.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids);

}  // namespace hilbertgeo
