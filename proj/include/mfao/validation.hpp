#pragma once

// Self-check of every module's invariants on randomized draws. Backs the
// `validate` CLI command.

#include <cstdint>
#include <string>
#include <vector>

namespace mfao {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
};

struct ValidationOptions {
  std::uint64_t seed = 20240611;
  int draws = 1000;  // random angle/occupation/parameter draws per property
};

std::vector<CheckResult> run_validation_suite(const ValidationOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace mfao
