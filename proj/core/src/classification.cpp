#include "s4/classification.hpp"

#include <algorithm>
#include <numeric>

namespace s4 {

std::vector<CandidatePair> enumerate_cd_pairs(long denominator_scan_bound) {
  if (denominator_scan_bound < 5) throw Error("denominator scan bound must be at least 5");
  std::vector<CandidatePair> out;
  for (long q = 1; q <= denominator_scan_bound; ++q)
    for (long p = 1; p < 10 * q; ++p) {
      const long num = p * (22 * q + 5 * p);
      const long den = q * (10 * q - p);
      if (num % den != 0 || std::gcd(p, q) != 1) continue;
      if (q != 1 && q != 5)
        throw Error("integral d at c = " + std::to_string(p) + "/" + std::to_string(q) + " with q not in {1, 5}");
      CandidatePair pair;
      pair.c = fraction(p, q);
      pair.d = num / den;
      pair.ratio = Rational(pair.d) / pair.c - 1;
      out.push_back(pair);
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.c < b.c; });
  return out;
}

std::optional<MinDimension> min_dimension_by_dual_coxeter(long hv) {
  if (hv < 2) throw Error("dual Coxeter number must be at least 2");
  std::vector<MinDimension> candidates;
  const long a = hv - 1;
  candidates.push_back({a * a + 2 * a, "A" + std::to_string(a)});
  if (hv % 2 == 1 && (hv + 1) / 2 >= 2) {
    const long n = (hv + 1) / 2;
    candidates.push_back({2 * n * n + n, "B" + std::to_string(n)});
  }
  if (hv - 1 >= 3) {
    const long n = hv - 1;
    candidates.push_back({2 * n * n + n, "C" + std::to_string(n)});
  }
  if (hv % 2 == 0 && (hv + 2) / 2 >= 4) {
    const long n = (hv + 2) / 2;
    candidates.push_back({2 * n * n - n, "D" + std::to_string(n)});
  }
  const std::pair<long, MinDimension> exceptional[] = {
      {12, {78, "E6"}}, {18, {133, "E7"}}, {30, {248, "E8"}}, {9, {52, "F4"}}, {4, {14, "G2"}}};
  for (const auto& [h, m] : exceptional)
    if (h == hv) candidates.push_back(m);
  if (candidates.empty()) return std::nullopt;
  return *std::min_element(candidates.begin(), candidates.end(),
                           [](const auto& x, const auto& y) { return x.dimension < y.dimension; });
}

DeligneSelection select_deligne_candidates(long level_cap) {
  DeligneSelection sel;
  sel.level_cap = level_cap;
  for (const auto& pair : enumerate_cd_pairs()) {
    for (long k = 1; k <= level_cap; ++k) {
      Rational hv = pair.ratio * k;
      if (!is_integer(hv) || hv < 2) continue;
      auto min = min_dimension_by_dual_coxeter(hv.get_num().get_si());
      if (!min) continue;
      if (pair.d > min->dimension) sel.bound_holds = false;
      if (pair.d == min->dimension) sel.rows.push_back({pair.c, pair.d, min->type, k});
    }
  }
  return sel;
}

std::vector<Rational> degenerate_central_charges(long n) {
  if (n < 1) throw Error("degenerate_central_charges needs n >= 1");
  std::vector<Rational> out;
  for (long p = 2; p - 1 <= n; ++p) {
    if (n % (p - 1) != 0) continue;
    const long q = n / (p - 1) + 1;
    if (q < 2 || std::gcd(p, q) != 1) continue;
    out.push_back(1 - fraction(6 * (p - q) * (p - q), p * q));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::json to_json(const std::vector<CandidatePair>& pairs) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : pairs) rows.push_back({{"c", to_string(p.c)}, {"d", p.d}, {"hv_over_k", to_string(p.ratio)}});
  return rows;
}

nlohmann::json to_json(const DeligneSelection& selection) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : selection.rows)
    rows.push_back({{"c", to_string(r.c)}, {"d", r.d}, {"type", r.type}, {"level", r.level}});
  return {{"rows", rows}, {"bound_holds", selection.bound_holds}, {"level_cap", selection.level_cap}};
}

}  // namespace s4
