#pragma once

// The reproduction suite behind `paper-check` and the acceptance binary.

#include <functional>
#include <string>
#include <vector>

#include "hilbgap/graphs.hpp"

namespace hilbgap {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Edge list of the ten-vertex example graph, 0-based.
SimpleGraph example_graph();

std::vector<CriterionResult> run_paper_checks(const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace hilbgap
