#include "acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "s4/affine_fock.hpp"
#include "s4/classification.hpp"
#include "s4/lattice_invariants.hpp"
#include "s4/q_series.hpp"
#include "s4/root_system.hpp"
#include "s4/virasoro.hpp"

namespace s4::cli {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
auto timed(std::vector<Timing>& timings, std::string label, double limit, F&& f) {
  const auto start = Clock::now();
  if constexpr (std::is_void_v<decltype(f())>) {
    f();
    timings.push_back({std::move(label), std::chrono::duration<double>(Clock::now() - start).count(), limit});
  } else {
    auto result = f();
    timings.push_back({std::move(label), std::chrono::duration<double>(Clock::now() - start).count(), limit});
    return result;
  }
}

Rational q(const char* text) { return parse_rational(text); }

const std::vector<std::string> kDeligne = {"A1", "A2", "G2", "D4", "F4", "E6", "E7", "E8"};

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

CriterionResult table1() {
  CriterionResult r{1, "Table 1 reproduction"};
  struct Row {
    const char *c, *ratio;
    long d;
  };
  const std::vector<Row> printed = {
      {"2/5", "3/2", 1},     {"1", "2", 3},         {"2", "3", 8},         {"14/5", "4", 14},     {"4", "6", 28},
      {"5", "42/5", 47},     {"26/5", "9", 52},     {"6", "12", 78},       {"32/5", "14", 96},    {"34/5", "33/2", 119},
      {"7", "18", 133},      {"38/5", "24", 190},   {"8", "30", 248},      {"41/5", "34", 287},   {"42/5", "39", 336},
      {"44/5", "54", 484},   {"9", "66", 603},      {"46/5", "84", 782},   {"47/5", "114", 1081}, {"48/5", "174", 1680},
      {"49/5", "354", 3479}};
  auto pairs = timed(r.timings, "enumeration", 1.0, [] { return enumerate_cd_pairs(); });
  bool ok = pairs.size() == printed.size();
  for (std::size_t i = 0; ok && i < printed.size(); ++i)
    ok = pairs[i].c == q(printed[i].c) && pairs[i].d == printed[i].d && pairs[i].ratio == q(printed[i].ratio);
  r.checks_passed = ok;
  r.detail = std::to_string(pairs.size()) + " rows, first (" + to_string(pairs.front().c) + ", " +
             std::to_string(pairs.front().d) + ", " + to_string(pairs.front().ratio) + "), last (" +
             to_string(pairs.back().c) + ", " + std::to_string(pairs.back().d) + ", " + to_string(pairs.back().ratio) +
             ")";
  r.data = to_json(pairs);
  return r;
}

CriterionResult table2() {
  CriterionResult r{2, "Table 2 reproduction"};
  std::vector<std::string> mismatches;
  std::size_t cells = 0;
  timed(r.timings, "lookups", 1.0, [&] {
    auto expect = [&](long hv, long dim, const std::string& type) {
      ++cells;
      auto got = min_dimension_by_dual_coxeter(hv);
      if (!got || got->dimension != dim || got->type != type)
        mismatches.push_back("h=" + std::to_string(hv) + " expected " + std::to_string(dim) + " " + type);
    };
    const std::vector<std::tuple<long, long, std::string>> exceptional = {
        {2, 3, "A1"}, {3, 8, "A2"}, {4, 14, "G2"}, {9, 52, "F4"}, {12, 78, "E6"}, {18, 133, "E7"}, {30, 248, "E8"}};
    for (const auto& [hv, dim, type] : exceptional) expect(hv, dim, type);
    for (long n = 3; n <= 20; ++n) {
      if (n != 5) expect(2 * n - 1, 2 * n * n + n, "B" + std::to_string(n));
      if (n != 6 && n != 9 && n != 15) expect(2 * n, 2 * n * n + 3 * n + 1, "D" + std::to_string(n + 1));
    }
  });
  r.checks_passed = mismatches.empty();
  r.detail = std::to_string(cells) + " cells checked" + (mismatches.empty() ? "" : "; mismatches: " + join(mismatches));
  return r;
}

CriterionResult deligne() {
  CriterionResult r{3, "Deligne selection"};
  auto sel = timed(r.timings, "selection", 1.0, [] { return select_deligne_candidates(); });
  const std::vector<const char*> charges = {"1", "2", "14/5", "4", "26/5", "6", "7", "8"};
  bool ok = sel.bound_holds && sel.rows.size() == kDeligne.size();
  std::vector<std::string> types;
  for (std::size_t i = 0; i < sel.rows.size(); ++i) {
    types.push_back(sel.rows[i].type);
    if (ok) ok = sel.rows[i].type == kDeligne[i] && sel.rows[i].level == 1 && sel.rows[i].c == q(charges[i]);
  }
  r.checks_passed = ok;
  r.detail = std::to_string(sel.rows.size()) + " rows: " + join(types) + (sel.bound_holds ? "" : "; dimension bound violated");
  r.data = to_json(sel);
  return r;
}

CriterionResult traces(std::uint64_t seed) {
  CriterionResult r{4, "Trace formulae"};
  bool ok = true;
  std::vector<std::string> parts;
  for (const auto& type : kDeligne) {
    const auto g = build_chevalley(build_root_system(type));
    SamplerConfig config;
    config.seed = seed;
    config.samples = 20;
    const bool small = type == "A1" || type == "A2" || type == "G2";
    config.exhaustive = small;
    const double limit = type == "G2" ? 60.0 : type == "E8" ? 300.0 : 0.0;
    auto report = timed(r.timings, type, limit, [&] { return verify_trace_formulas(g, config); });
    ok = ok && report.passed && report.exhaustive == small && (small || report.quadruples >= 20);
    parts.push_back(type + (report.exhaustive ? " exhaustive " : " sampled ") + std::to_string(report.quadruples) +
                    (report.passed ? "" : " FAILED"));
    r.data.push_back(to_json(report));
  }
  r.checks_passed = ok;
  r.detail = "quadruples: " + join(parts);
  return r;
}

CriterionResult killing() {
  CriterionResult r{5, "Killing relation"};
  bool ok = true;
  std::vector<std::string> failed;
  timed(r.timings, "all types", 60.0, [&] {
    for (const auto& type : kDeligne) {
      const auto g = build_chevalley(build_root_system(type));
      std::optional<std::string> counterexample;
      if (!check_killing_relation(g, &counterexample)) {
        ok = false;
        failed.push_back(type + (counterexample ? " (" + *counterexample + ")" : ""));
      }
    }
  });
  r.checks_passed = ok;
  r.detail = ok ? "Tr ad(x)ad(y) = 2h phi(x,y) on all basis pairs of the eight algebras" : "failed: " + join(failed);
  return r;
}

std::string census_mismatches(const std::vector<CensusCell>& got,
                              const std::vector<std::tuple<const char*, int, std::size_t>>& printed) {
  std::vector<std::string> out;
  for (const auto& [norm, sign, count] : printed) {
    std::size_t found = 0;
    for (const auto& cell : got)
      if (cell.norm == q(norm) && cell.sign == sign) found = cell.count;
    if (found != count)
      out.push_back(std::string("(") + norm + "," + (sign > 0 ? "+" : "-") + ") printed " + std::to_string(count) +
                    " computed " + std::to_string(found));
  }
  for (const auto& cell : got) {
    bool listed = false;
    for (const auto& [norm, sign, count] : printed) listed = listed || (cell.norm == q(norm) && cell.sign == sign);
    if (!listed)
      out.push_back("(" + to_string(cell.norm) + "," + (cell.sign > 0 ? "+" : "-") + ") computed " +
                    std::to_string(cell.count) + " not printed");
  }
  return join(out, "; ");
}

CriterionResult censuses() {
  CriterionResult r{6, "Weyl censuses"};
  const std::vector<std::tuple<const char*, int, std::size_t>> g2_printed = {
      {"0", 1, 1}, {"2/3", -1, 1}, {"2", -1, 1}, {"14/3", 1, 2}, {"8", -1, 1}, {"32/3", -1, 1}};
  const std::vector<std::tuple<const char*, int, std::size_t>> f4_printed = {
      {"0", 1, 1},  {"1", -1, 2}, {"2", -1, 2}, {"3", 1, 5}, {"4", -1, 1}, {"5", 1, 2},  {"5", -1, 2},
      {"6", 1, 3},  {"7", -1, 4}, {"8", -1, 2}, {"9", -1, 4}, {"9", 1, 1}, {"10", 1, 2}};
  std::string g2_diff, f4_diff;
  bool mono_ok = true;
  timed(r.timings, "censuses and monotonicity", 10.0, [&] {
    const auto g2 = build_root_system("G2");
    const auto f4 = build_root_system("F4");
    auto g2_census = rho_displacement_census(g2, Rational(12));
    auto f4_census = rho_displacement_census(f4, Rational(10));
    g2_diff = census_mismatches(g2_census, g2_printed);
    f4_diff = census_mismatches(f4_census, f4_printed);
    auto mg = check_rho_monotonicity(g2);
    auto mf = check_rho_monotonicity(f4);
    mono_ok = mg.passed && mf.passed;
    r.data = {{"G2", to_json(g2_census)}, {"F4", to_json(f4_census)}};
  });
  r.checks_passed = g2_diff.empty() && f4_diff.empty() && mono_ok;
  r.detail = std::string("G2 ") + (g2_diff.empty() ? "matches all 6 cells" : "differs: " + g2_diff) + "; F4 " +
             (f4_diff.empty() ? "matches all 13 cells" : "differs from the printed table: " + f4_diff) +
             "; monotonicity on W(G2) and W(F4) " + (mono_ok ? "holds" : "FAILS");
  return r;
}

bool leading_coefficients(const PuiseuxSeries& s, const Rational& lead, const std::vector<long>& coeffs) {
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (s.coefficient(lead + static_cast<long>(k)) != coeffs[k]) return false;
  return s.valuation() == lead;
}

CriterionResult strings() {
  CriterionResult r{7, "String functions"};
  struct Expect {
    const char* type;
    StringClass cls;
    const char* lead;
    std::vector<long> coeffs;
  };
  const std::vector<Expect> printed = {
      {"G2", StringClass::even, "-7/60", {1, 2, 6, 14, 32, 66, 135}},
      {"G2", StringClass::short_root, "11/20", {1, 3, 9, 21, 48, 99}},
      {"F4", StringClass::even, "-13/60", {1, 4, 17, 56, 172, 476}},
      {"F4", StringClass::short_root, "17/60", {1, 6, 25, 86, 261}},
  };
  bool ok = true;
  std::vector<std::string> parts;
  for (const auto& e : printed) {
    auto s = string_function(CartanType::parse(e.type), e.cls, 7);
    const bool match = leading_coefficients(s, q(e.lead), e.coeffs);
    ok = ok && match;
    parts.push_back(std::string(e.type) + " " + to_string(e.cls) + (match ? " ok" : " MISMATCH"));
    r.data[std::string(e.type) + "_" + to_string(e.cls)] = to_json(s);
  }
  r.checks_passed = ok;
  r.detail = join(parts);
  return r;
}

PuiseuxSeries integer_series(const std::vector<long>& coeffs) {
  std::map<Rational, Rational> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) terms[Rational(static_cast<long>(k))] = coeffs[k];
  return PuiseuxSeries::from_terms(terms, Rational(static_cast<long>(coeffs.size())));
}

CriterionResult fixed_points() {
  CriterionResult r{8, "Fixed-point series"};
  const auto g2 = fixed_point_graded_dimension(CartanType::parse("G2"), 7);
  const auto f4 = fixed_point_graded_dimension(CartanType::parse("F4"), 6);
  const bool g2_ok = g2 == integer_series({1, 0, 1, 1, 2, 2, 5});
  const bool f4_ok = f4 == integer_series({1, 0, 1, 1, 2, 2});
  const auto g2_degree = class_sn_degree(fixed_point_graded_dimension(CartanType::parse("G2")));
  const auto f4_degree = class_sn_degree(fixed_point_graded_dimension(CartanType::parse("F4")));
  const bool degrees_ok = g2_degree.degree == 5 && g2_degree.certified && f4_degree.degree == 5 && f4_degree.certified;
  bool ade_ok = true;
  std::vector<std::string> ade;
  for (const char* type : {"A1", "E6", "E7", "E8"}) {
    const auto t = CartanType::parse(type);
    const auto computed = fixed_point_graded_dimension(t).truncated(7);
    const bool match = computed == reference_series(t).truncated(7);
    ade_ok = ade_ok && match;
    ade.push_back(std::string(type) + (match ? " matches" : " differs: " + computed.to_string()));
  }
  r.checks_passed = g2_ok && f4_ok && degrees_ok && ade_ok;
  r.detail = "G2 " + g2.to_string() + "; F4 " + f4.to_string() + "; class degrees G2 " +
             std::to_string(g2_degree.degree) + ", F4 " + std::to_string(f4_degree.degree) +
             "; Weyl-sum path vs printed series through q^6: " + join(ade);
  r.data = {{"G2", to_json(g2)}, {"F4", to_json(f4)}};
  return r;
}

CriterionResult class_degrees() {
  CriterionResult r{9, "Class degrees from fixtures"};
  const std::vector<std::pair<const char*, int>> expected = {{"A2", 2}, {"D4", 3}, {"E6", 4}, {"E7", 5}, {"E8", 7}};
  bool ok = true;
  std::vector<std::string> parts;
  for (const auto& [type, want] : expected) {
    const auto t = CartanType::parse(type);
    auto got = class_sn_degree(reference_series(t));
    std::string note;
    if (!got.certified) {
      // The printed series agrees with the Virasoro series up to its last term; extend it.
      got = class_sn_degree(extended_reference_series(t));
      note = " (printed terms give a lower bound only; extended series used)";
    }
    ok = ok && got.certified && got.degree == want;
    parts.push_back(std::string(type) + "->" + std::to_string(got.degree) + note);
    r.data[type] = got.degree;
  }
  r.checks_passed = ok;
  r.detail = join(parts);
  return r;
}

CriterionResult invariants() {
  CriterionResult r{10, "Invariant theory"};
  bool ok = true;
  std::vector<std::string> parts;
  timed(r.timings, "Molien, Reynolds and the X check", 120.0, [&] {
    const std::vector<std::pair<Lattice, std::vector<Subgroup>>> cases = {
        {Lattice::A2, {Subgroup::full, Subgroup::W, Subgroup::minus_tau, Subgroup::trivial}},
        {Lattice::D4, {Subgroup::full, Subgroup::W, Subgroup::E, Subgroup::H}}};
    for (const auto& [lattice, subgroups] : cases)
      for (const auto s : subgroups) {
        const auto group = lattice_automorphism_group(lattice, s);
        const auto molien = molien_invariant_dimensions(group, 5);
        std::vector<long> reynolds;
        for (int k = 0; k <= 5; ++k) reynolds.push_back(static_cast<long>(reynolds_rank(group, k)));
        const bool agree = molien == reynolds;
        ok = ok && agree;
        if (!agree) parts.push_back(group.name + " Reynolds disagrees with Molien");
        r.data[group.name] = molien;
        if (lattice == Lattice::A2 && s == Subgroup::full) ok = ok && molien[3] == 1;
        if (lattice == Lattice::D4 && s == Subgroup::W) ok = ok && molien[4] == 5;
        if (lattice == Lattice::D4 && s == Subgroup::full) ok = ok && molien[4] == 3;
      }
    const auto x = d4_X_subspace_check();
    ok = ok && x.passed();
    r.data["d4_X"] = to_json(x);
    parts.push_back("A2 full deg 3: " + r.data["A2:full"][3].dump() + ", D4 W deg 4: " + r.data["D4:W"][4].dump() +
                    ", D4 full deg 4: " + r.data["D4:full"][4].dump());
    parts.push_back("Reynolds = Molien through degree 5 on 8 groups");
    parts.push_back("X check " + std::string(x.passed() ? "passes" : "FAILS") + " (" +
                    std::to_string(x.w_invariants_degree4) + " = " + std::to_string(x.aut_invariants_degree4) + " + " +
                    std::to_string(x.x_dimension) + ", degree 5: " + std::to_string(x.x_dimension) + " + " +
                    std::to_string(x.vomega_degree5) + " = " + std::to_string(x.reference_degree5) + ")");
  });
  r.checks_passed = ok;
  r.detail = join(parts, "; ");
  return r;
}

CriterionResult casimirs() {
  CriterionResult r{11, "Casimir coefficients"};
  bool ok = true;
  std::size_t checked = 0;
  timed(r.timings, "all pairs", 5.0, [&] {
    std::vector<std::pair<Rational, Rational>> cases;
    for (const auto& p : enumerate_cd_pairs()) cases.emplace_back(p.c, Rational(p.d));
    for (const char* c : {"1/2", "-1", "3", "7/3", "-22/7"}) cases.emplace_back(q(c), q("5/2"));
    for (const auto& [c, d] : cases)
      for (int n = 0; n <= 4; ++n) {
        const auto report = casimir_report(c, d, n);
        ok = ok && report.consistent && report.matches;
        ++checked;
      }
  });
  r.checks_passed = ok;
  r.detail = std::to_string(checked) + " (c, d, n) cases; Lemma systems consistent and equal to the closed forms";
  return r;
}

CriterionResult singular_charges() {
  CriterionResult r{12, "Singular central charges"};
  const auto d2 = gram_determinant_roots(2);
  const auto d3 = gram_determinant_roots(3);
  const auto d4 = gram_determinant_roots(4);
  auto roots_of = [](const GramRoots& g) {
    std::vector<Rational> out;
    for (const auto& [c, m] : g.roots) out.push_back(c);
    return out;
  };
  const bool ok = roots_of(d2) == std::vector<Rational>{0} && roots_of(d3) == std::vector<Rational>{0} &&
                  roots_of(d4) == std::vector<Rational>{q("-22/5"), 0} && d2.residual_degree == 0 &&
                  d3.residual_degree == 0 && d4.residual_degree == 0 &&
                  determinant(gram_matrix(4, q("-22/5"))) == 0 && determinant(gram_matrix(4, 1)) != 0;
  r.checks_passed = ok;
  auto describe = [](const GramRoots& g) {
    std::vector<std::string> out;
    for (const auto& [c, m] : g.roots) out.push_back(to_string(c) + "^" + std::to_string(m));
    return join(out, " ");
  };
  r.detail = "det roots: degree 2 {" + describe(d2) + "}, degree 3 {" + describe(d3) + "}, degree 4 {" + describe(d4) + "}";
  r.data = {{"2", to_json(d2)}, {"3", to_json(d3)}, {"4", to_json(d4)}};
  return r;
}

CriterionResult affine_radical() {
  CriterionResult r{13, "Affine radical"};
  const auto g = build_chevalley(build_root_system("A1"));
  AffineFock fock(g);
  auto k = timed(r.timings, "A1 degree 4", 60.0, [&] { return check_kappa_identities(fock); });
  r.checks_passed = k.passed() && k.kappa4_difference.basis_size == 51;
  r.detail = "kappa_4 - (X4 T^2 omega + Y4 omega_(-1) omega) " +
             std::string(k.kappa4_difference.in_radical ? "is" : "is NOT") + " in the radical of the " +
             std::to_string(k.kappa4_difference.basis_size) + "-dim Gram; kappa_2, kappa_3 identities " +
             (k.kappa2_is_multiple_of_omega && k.kappa3_is_half_translate_kappa2 && k.kappa3_matches_closed_form
                  ? "exact"
                  : "FAIL");
  r.data = to_json(k);
  return r;
}

CriterionResult lemma_a1(std::uint64_t seed) {
  CriterionResult r{14, "Borcherds commutation lemma"};
  bool ok = true;
  std::size_t total = 0;
  for (const char* type : {"A1", "A2"}) {
    const auto g = build_chevalley(build_root_system(type));
    AffineFock fock(g);
    auto report = verify_lemma_A1(fock, 100, seed);
    ok = ok && report.passed;
    total += report.samples;
    r.data[type] = to_json(report);
  }
  r.checks_passed = ok && total >= 100;
  r.detail = std::to_string(total) + " seeded (x, a, q, state) samples over A1 and A2";
  return r;
}

CriterionResult appendix_b(std::uint64_t seed) {
  CriterionResult r{15, "Conformal design traces"};
  bool ok = true;
  std::vector<std::string> parts;
  timed(r.timings, "A1 and A2", 120.0, [&] {
    const auto a1 = build_chevalley(build_root_system("A1"));
    AffineFock fock1(a1);
    const Vector e = a1.basis_vector(a1.root_vector(0, false));
    const Vector f = a1.basis_vector(a1.root_vector(0, true));
    const auto worked = appendix_b_projection(fock1, {e, f, e, f});
    const bool worked_ok = worked.matches && worked.Z1 == q("-2/3") && worked.Z2 == q("16/9");
    ok = ok && worked_ok;
    parts.push_back("A1 (e,f,e,f): Z1 = " + to_string(worked.Z1) + ", Z2 = " + to_string(worked.Z2));
    r.data["A1_worked"] = to_json(worked);
    for (const auto* type : {"A1", "A2"}) {
      const auto g = build_chevalley(build_root_system(type));
      AffineFock fock(g);
      auto report = verify_appendix_b(fock, std::string(type) == "A1" ? 5 : 10, seed);
      ok = ok && report.passed();
      parts.push_back(std::string(type) + " descendant traces " + to_string(report.trace_L4) + ", " +
                      to_string(report.trace_L22) + "; " + std::to_string(report.samples) + " quadruples " +
                      (report.passed() ? "balance" : "FAIL"));
      r.data[type] = to_json(report);
    }
  });
  r.checks_passed = ok;
  r.detail = join(parts, "; ");
  return r;
}

}  // namespace

bool CriterionResult::passed() const {
  if (!checks_passed) return false;
  for (const auto& t : timings)
    if (!t.within()) return false;
  return true;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  const std::vector<std::pair<int, std::function<CriterionResult()>>> all = {
      {1, table1},
      {2, table2},
      {3, deligne},
      {4, [&] { return traces(options.seed); }},
      {5, killing},
      {6, censuses},
      {7, strings},
      {8, fixed_points},
      {9, class_degrees},
      {10, invariants},
      {11, casimirs},
      {12, singular_charges},
      {13, affine_radical},
      {14, [&] { return lemma_a1(options.seed); }},
      {15, [&] { return appendix_b(options.seed); }},
  };
  std::vector<CriterionResult> out;
  for (const auto& [id, run] : all) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
      continue;
    try {
      out.push_back(run());
    } catch (const std::exception& e) {
      CriterionResult failed{id, "criterion " + std::to_string(id)};
      failed.detail = std::string("exception: ") + e.what();
      out.push_back(std::move(failed));
    }
  }
  return out;
}

std::string scoreboard_line(const CriterionResult& r) {
  std::ostringstream line;
  line << (r.passed() ? "[PASS] " : "[FAIL] ") << (r.id < 10 ? " " : "") << r.id << " " << r.title << ": " << r.detail;
  if (!r.timings.empty()) {
    line << " [";
    bool first = true;
    for (const auto& t : r.timings) {
      line << (first ? "" : ", ") << t.label << " ";
      line.setf(std::ios::fixed);
      line.precision(2);
      line << t.seconds << " s";
      if (t.limit > 0) line << (t.within() ? " <= " : " > LIMIT ") << t.limit << " s";
      first = false;
    }
    line << "]";
  }
  return line.str();
}

nlohmann::json to_json(const std::vector<CriterionResult>& results, std::uint64_t seed) {
  nlohmann::json criteria = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.checks_passed;
    criteria.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.checks_passed}, {"detail", r.detail},
                        {"data", r.data}});
  }
  return {{"seed", seed}, {"criteria", criteria}, {"passed", all}};
}

}  // namespace s4::cli
