#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace k3lat {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

constexpr std::uint64_t kDefaultSeed = 20240611;

/// Runs every acceptance check. A check that throws or exceeds its time
/// limit is reported as failed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

/// Runs a single criterion (1..11); Error("bad_argument") otherwise.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);

std::string format_line(const CriterionResult& r);

}  // namespace k3lat
