#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wcm::app {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

/// The eleven acceptance criteria, in order.
std::vector<Criterion> acceptanceCriteria();

/// Criteria whose name contains `filter` (all when empty).
std::vector<CriterionResult> runAcceptance(const std::string& filter);

std::string formatResult(const CriterionResult& r, bool color);

}  // namespace wcm::app
