#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "s4/linalg.hpp"
#include "s4/rational.hpp"
#include "s4/root_system.hpp"

namespace s4 {

struct BracketTerm {
  std::uint32_t index = 0;
  std::int64_t coeff = 0;
};

using SparseIntVector = std::vector<BracketTerm>;

struct FormEntry {
  std::uint32_t index = 0;
  Rational value;
};

/// A simple Lie algebra in a Chevalley basis with integer structure constants.
///
/// Basis order: e_beta for the positive roots (in root-system order), then the
/// coroots h_1..h_r, then e_{-beta} in the same root order.
class LieAlgebra {
 public:
  explicit LieAlgebra(RootSystem roots);

  const RootSystem& roots() const { return roots_; }
  std::size_t dim() const { return dim_; }
  int rank() const { return roots_.rank; }
  int dual_coxeter() const { return roots_.dual_coxeter; }
  /// c = dim g / (1 + h^vee), the level-1 central charge.
  Rational central_charge_level1() const;

  const std::string& label(std::size_t a) const { return labels_[a]; }
  std::size_t positive_root_count() const { return roots_.positive_roots.size(); }
  std::size_t root_vector(std::size_t positive_index, bool negative) const;
  std::size_t cartan_index(int i) const { return positive_root_count() + static_cast<std::size_t>(i); }

  /// [x_a, x_b] as a sparse integer combination.
  const SparseIntVector& bracket(std::size_t a, std::size_t b) const { return table_[a * dim_ + b]; }
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Normalized invariant form, phi(alpha, alpha) = 2 on long roots.
  Rational form(std::size_t a, std::size_t b) const;
  Rational form(const Vector& x, const Vector& y) const;
  const std::vector<FormEntry>& form_row(std::size_t a) const { return form_rows_[a]; }
  Matrix form_matrix() const;

  Vector basis_vector(std::size_t a) const;

  /// Dense matrix of ad(x) on the basis; column b is [x, x_b].
  Matrix ad_matrix(const Vector& x) const;

  /// Label of each basis element, e.g. "e[1,1]", "h2", "f[0,1]".
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  RootSystem roots_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseIntVector> table_;
  std::vector<std::vector<FormEntry>> form_rows_;

  void build_brackets();
  void build_form();
};

/// Builds the Chevalley basis. Throws Error if any internal consistency check fails.
LieAlgebra build_chevalley(const RootSystem& rs);

struct StructureCheck {
  bool antisymmetry = true;
  bool jacobi = true;
  bool invariance = true;
  bool killing = true;
  std::size_t triples_checked = 0;
  std::optional<std::string> counterexample;
  bool passed() const { return antisymmetry && jacobi && invariance && killing; }
};

/// Antisymmetry, Jacobi and invariance on all basis triples; Killing relation on all pairs.
StructureCheck check_structure(const LieAlgebra& g);

/// Killing relation only: Tr ad(x_a) ad(x_b) = 2 h^vee phi(x_a, x_b) for all a, b.
bool check_killing_relation(const LieAlgebra& g, std::optional<std::string>* counterexample = nullptr);

/// Tr ad(a_1) ... ad(a_m), exact.
Rational trace_ad_product(const LieAlgebra& g, std::span<const Vector> args);

/// Closed-form right-hand side of the trace formula of the given order (2, 3 or 4).
/// Throws Error for c = 0, and for c = -22/5 when order is 4.
Rational trace_formula_rhs(const LieAlgebra& g, const Rational& c, const Rational& d, std::span<const Vector> args,
                           int order);

inline constexpr std::uint64_t kDefaultSeed = 20240229;

struct SamplerConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 20;
  /// Use all basis tuples; nullopt picks exhaustive when dim^4 is small.
  std::optional<bool> exhaustive;
};

struct TraceReport {
  std::string type;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::size_t pairs = 0;
  std::size_t triples = 0;
  std::size_t quadruples = 0;
  std::size_t symmetry_checks = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
};

TraceReport verify_trace_formulas(const LieAlgebra& g, const SamplerConfig& config);

/// Coordinates in [-2, 2] from raw engine output (rng() % 5 - 2), portable across platforms.
Vector random_small_vector(std::mt19937_64& rng, std::size_t dim);

nlohmann::json to_json(const TraceReport& report);
nlohmann::json to_json(const LieAlgebra& g);

}  // namespace s4
