#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace radon {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// ids 1..12; throws std::invalid_argument for unknown ids
CriterionResult run_criterion(int id, std::uint64_t seed);

std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed);

std::string acceptance_summary_json(const std::vector<CriterionResult>& results,
                                    std::uint64_t seed);

}  // namespace radon
