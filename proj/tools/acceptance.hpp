#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "s4/lie_algebra.hpp"

namespace s4::cli {

struct Timing {
  std::string label;
  double seconds = 0;
  double limit = 0;  // 0 means no limit
  bool within() const { return limit <= 0 || seconds <= limit; }
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool checks_passed = false;
  std::string detail;
  std::vector<Timing> timings;
  nlohmann::json data;
  bool passed() const;
};

struct AcceptanceOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Empty runs everything implemented in-process (criteria 1-15).
  std::vector<int> only;
};

/// Runs the criteria in dependency order. Timing is recorded but never part of the JSON.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// One line per criterion, e.g. "[PASS]  5 Killing relation: ... [all 1.2 s <= 60 s]".
std::string scoreboard_line(const CriterionResult& r);
nlohmann::json to_json(const std::vector<CriterionResult>& results, std::uint64_t seed);

}  // namespace s4::cli
