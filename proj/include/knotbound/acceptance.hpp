#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace knotbound {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 0x5eed'2024;
  int random_braids = 200;
};

/// Runs every acceptance criterion. Arithmetic is exact, so each check is an
/// equality; a criterion also fails when it exceeds its time budget. When
/// `log` is given, one line per criterion is written as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                            std::ostream* log = nullptr);

std::string format_result_line(const CriterionResult& r);

}  // namespace knotbound
