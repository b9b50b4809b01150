#pragma once
// The acceptance suite: twelve numbered criteria, each a group of checks.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rfg::acceptance {

enum class Level {
  Quick, ///< sample sizes / 10, tolerances widened to 8 standard errors where larger
  Full,  ///< stated sample sizes and tolerances
};

struct Check {
  std::string label;
  double value = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;
  bool pass() const;
};

inline constexpr int kCriterionCount = 12;
inline constexpr std::uint64_t kDefaultSeed = 42;

std::string criterion_title(int id);
/// Throws InvalidArgument for id outside 1..12.
CriterionResult run_criterion(int id, Level level, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_all(Level level, const std::function<void(const CriterionResult&)>& progress = {},
                                     std::uint64_t seed = kDefaultSeed);

/// One line per check plus a PASS/FAIL line for the criterion.
std::string format(const CriterionResult& result);

} // namespace rfg::acceptance
