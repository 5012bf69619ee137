#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "s4/rational.hpp"

namespace s4 {

/// A central charge with integral d = c(22+5c)/(10-c), and the ratio h^vee/k = d/c - 1.
struct CandidatePair {
  Rational c;
  long d = 0;
  Rational ratio;
};

inline constexpr long kDefaultDenominatorBound = 1000;

/// All coprime c = p/q in (0, 10) with q <= bound and integral d, sorted by c.
/// Throws Error if a solution with q outside {1, 5} is found.
std::vector<CandidatePair> enumerate_cd_pairs(long denominator_scan_bound = kDefaultDenominatorBound);

struct MinDimension {
  long dimension = 0;
  std::string type;
};

/// Smallest simple Lie algebra with the given dual Coxeter number, or nullopt if none exists.
/// Throws Error for hv < 2.
std::optional<MinDimension> min_dimension_by_dual_coxeter(long hv);

struct DeligneRow {
  Rational c;
  long d = 0;
  std::string type;
  long level = 0;
};

inline constexpr long kLevelCap = 64;

struct DeligneSelection {
  std::vector<DeligneRow> rows;
  /// d never exceeds the minimum dimension for any pair and level within the cap.
  bool bound_holds = true;
  long level_cap = kLevelCap;
};

DeligneSelection select_deligne_candidates(long level_cap = kLevelCap);

/// c = 1 - 6(p-q)^2/(pq) over coprime p, q >= 2 with (p-1)(q-1) = n, sorted and deduplicated.
std::vector<Rational> degenerate_central_charges(long n);

nlohmann::json to_json(const std::vector<CandidatePair>& pairs);
nlohmann::json to_json(const DeligneSelection& selection);

}  // namespace s4
