#include <doctest.h>

#include <algorithm>
#include <map>

#include "s4/classification.hpp"
#include "s4/virasoro.hpp"

using namespace s4;

namespace {

struct KnownType {
  long hv;
  long dim;
};

std::vector<KnownType> types_up_to_rank(int max_rank) {
  std::vector<KnownType> out;
  for (long n = 1; n <= max_rank; ++n) out.push_back({n + 1, n * (n + 2)});
  for (long n = 3; n <= max_rank; ++n) out.push_back({2 * n - 1, n * (2 * n + 1)});
  for (long n = 2; n <= max_rank; ++n) out.push_back({n + 1, n * (2 * n + 1)});
  for (long n = 4; n <= max_rank; ++n) out.push_back({2 * n - 2, n * (2 * n - 1)});
  out.insert(out.end(), {{4, 14}, {9, 52}, {12, 78}, {18, 133}, {30, 248}});
  return out;
}

long gcd(long a, long b) { return b == 0 ? a : gcd(b, a % b); }

}  // namespace

TEST_CASE("cd pairs agree with a brute-force scan") {
  std::vector<Rational> brute;
  for (long q = 1; q <= 60; ++q)
    for (long p = 1; p < 10 * q; ++p) {
      if (gcd(p, q) != 1) continue;
      const Rational c = fraction(p, q);
      const Rational d = c * (22 + 5 * c) / (10 - c);
      if (is_integer(d)) brute.push_back(c);
    }
  std::sort(brute.begin(), brute.end());
  const auto pairs = enumerate_cd_pairs();
  REQUIRE(pairs.size() == brute.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    CHECK(pairs[i].c == brute[i]);
    CHECK(pairs[i].d == pairs[i].c * (22 + 5 * pairs[i].c) / (10 - pairs[i].c));
    CHECK(pairs[i].ratio == pairs[i].d / pairs[i].c - 1);
    CHECK((pairs[i].c.get_den() == 1 || pairs[i].c.get_den() == 5));
  }
  CHECK(enumerate_cd_pairs(50).size() == pairs.size());
}

TEST_CASE("minimum dimension by dual Coxeter number") {
  const auto types = types_up_to_rank(40);
  for (long hv = 2; hv <= 31; ++hv) {
    CAPTURE(hv);
    std::optional<long> best;
    for (const auto& t : types)
      if (t.hv == hv && (!best || t.dim < *best)) best = t.dim;
    const auto got = min_dimension_by_dual_coxeter(hv);
    REQUIRE(got.has_value() == best.has_value());
    if (got) CHECK(got->dimension == *best);
  }
  CHECK_THROWS_AS(min_dimension_by_dual_coxeter(1), Error);
}

TEST_CASE("Deligne selection recovers the exceptional series at level one") {
  const auto selection = select_deligne_candidates();
  CHECK(selection.bound_holds);
  std::map<std::string, long> level_one;
  for (const auto& row : selection.rows)
    if (row.level == 1) level_one[row.type] = row.d;
  for (const auto& [type, d] : std::map<std::string, long>{
           {"A1", 3}, {"A2", 8}, {"G2", 14}, {"D4", 28}, {"F4", 52}, {"E6", 78}, {"E7", 133}, {"E8", 248}}) {
    CAPTURE(type);
    REQUIRE(level_one.count(type) == 1);
    CHECK(level_one[type] == d);
  }
  for (const auto& row : selection.rows) CHECK(row.d == row.c * (22 + 5 * row.c) / (10 - row.c));
}

TEST_CASE("degenerate central charges against a direct scan") {
  for (long n = 1; n <= 8; ++n) {
    std::vector<Rational> oracle;
    for (long p = 2; p <= n + 1; ++p)
      for (long q = 2; q <= n + 1; ++q)
        if (gcd(p, q) == 1 && (p - 1) * (q - 1) == n) oracle.push_back(1 - fraction(6 * (p - q) * (p - q), p * q));
    std::sort(oracle.begin(), oracle.end());
    oracle.erase(std::unique(oracle.begin(), oracle.end()), oracle.end());
    CHECK(degenerate_central_charges(n) == oracle);
  }
  CHECK(degenerate_central_charges(4) == std::vector<Rational>{parse_rational("-22/5")});
}
