#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "s4/lie_algebra.hpp"

namespace s4::cli {

inline constexpr const char* kSchema = "s4check/1";

enum class Format { text, json };

struct RunConfig {
  std::string subcommand;
  std::string type_label = "A1";
  int order = 0;  // 0 selects the subcommand default
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 20;
  Format format = Format::text;
  std::optional<std::string> output_path;

  std::optional<bool> exhaustive;
  int which = 1;
  std::string lattice = "D4";
  std::string subgroup = "W";
  int degree = 0;
  bool x_check = false;
  std::string c = "1";
  std::string d = "3";
  int n = 4;
  std::optional<std::string> bound;
};

struct Outcome {
  bool passed = true;
  nlohmann::json result;
  std::string text;
};

/// Dispatches to the owning module; throws s4::Error on invalid flags.
Outcome run(const RunConfig& config);

/// Runs the acceptance criteria and renders the scoreboard.
Outcome run_all(const RunConfig& config);

/// The versioned envelope written for --format json.
nlohmann::json envelope(const RunConfig& config, const Outcome& outcome);

}  // namespace s4::cli
