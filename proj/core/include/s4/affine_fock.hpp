#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "s4/lie_algebra.hpp"
#include "s4/linalg.hpp"
#include "s4/rational.hpp"
#include "s4/virasoro.hpp"

namespace s4 {

/// x_index(-depth) with depth >= 1.
struct FockMode {
  int depth = 1;
  std::uint32_t index = 0;
  friend auto operator<=>(const FockMode&, const FockMode&) = default;
};

/// Canonical order: depth descending, ties broken by basis index ascending.
using FockMonomial = std::vector<FockMode>;

/// A homogeneous vector of the universal affine vertex algebra at level 1.
struct FockState {
  std::map<FockMonomial, Rational> combination;
  int degree = 0;

  bool is_zero() const { return combination.empty(); }
  Rational coefficient(const FockMonomial& m) const;

  FockState& operator+=(const FockState& other);
  FockState& operator-=(const FockState& other);
  FockState& operator*=(const Rational& s);
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(const Rational& s, FockState a) { return a *= s; }
  friend bool operator==(const FockState& a, const FockState& b);
};

/// Contravariant form: x_(n)^t = kAdjointSign x_(-n) and vacuum norm kVacuumNorm, so that the
/// degree-1 Gram matrix equals phi.
inline constexpr int kAdjointSign = -1;
inline constexpr int kVacuumNorm = -1;

inline constexpr std::size_t kFockBasisCap = 1000;

/// Mode calculus over one Lie algebra. Results are cached, so a calculus object is not thread safe.
class AffineFock {
 public:
  explicit AffineFock(const LieAlgebra& g);

  const LieAlgebra& algebra() const { return g_; }
  Rational central_charge() const { return g_.central_charge_level1(); }

  FockState vacuum() const;
  /// x_(-1) 1.
  FockState weight_one(const Vector& x) const;
  std::string to_string(const FockState& s) const;

  FockState apply_mode(std::size_t index, int n, const FockState& s);
  FockState apply_mode(const Vector& x, int n, const FockState& s);

  /// L(m) through [L(m), a_(n)] = -n a_(m+n) and L(m) 1 = 0; m >= -1 only.
  FockState apply_L(int m, const FockState& s);
  /// L(m) through the Sugawara sum, any m.
  FockState sugawara_L(int m, const FockState& s);
  FockState translate(const FockState& s) { return apply_L(-1, s); }

  /// omega = kappa_2 / (2 (1 + h^vee)).
  FockState conformal_vector();
  /// sum_j x^j_(1-i) x_j over the Chevalley basis and its phi-dual.
  FockState casimir_state(int i);
  /// The same with x^j the rows of `basis`.
  FockState casimir_state(int i, const Matrix& basis);

  /// v_(n) t for arbitrary states, by the iterate formula.
  FockState state_mode(const FockState& v, long n, const FockState& t);

  Rational pairing(const FockState& a, const FockState& b);
  std::vector<FockMonomial> pbw_basis(int degree) const;
  Matrix gram(int degree);
  Vector coordinates(const FockState& s) const;

  /// Embeds L(-n_1)...L(-n_k) 1 through Sugawara modes.
  FockState from_virasoro(const VirasoroState& s);

 private:
  const LieAlgebra& g_;
  Matrix form_inverse_;
  std::map<std::tuple<std::uint32_t, int, FockMonomial>, std::map<FockMonomial, Rational>> memo_;

  const std::map<FockMonomial, Rational>& apply_basis(std::uint32_t index, int n, const FockMonomial& m);
  FockState dual_basis_state(std::size_t j) const;
};

FockState casimir_state(AffineFock& fock, int i);
Matrix affine_gram(AffineFock& fock, int degree);

struct RadicalCertificate {
  bool in_radical = false;
  std::size_t basis_size = 0;
  /// Pairings of the state with every PBW basis vector of its degree.
  Vector residual;
};

RadicalCertificate radical_membership(AffineFock& fock, const FockState& state);

struct KappaIdentities {
  Rational c;
  Rational d;
  bool kappa1_zero = false;
  bool kappa2_is_multiple_of_omega = false;
  bool kappa3_is_half_translate_kappa2 = false;
  bool kappa3_matches_closed_form = false;
  RadicalCertificate kappa4_difference;
  bool passed() const {
    return kappa1_zero && kappa2_is_multiple_of_omega && kappa3_is_half_translate_kappa2 && kappa3_matches_closed_form &&
           kappa4_difference.in_radical;
  }
};

/// kappa_2 = X_2 omega, kappa_3 = X_3 T omega exactly; kappa_4 - (X_4 T^2 omega + Y_4 omega_(-1) omega) in the radical.
KappaIdentities check_kappa_identities(AffineFock& fock);

struct LemmaA1Report {
  std::string type;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
};

/// x_(q) a_(0) = (a_(1) x)_(q-1) + x_(q-1) a_(1) + a_(0) x_(q) - a_(1) x_(q-1) on one state.
bool lemma_A1_holds(AffineFock& fock, const Vector& x, const Vector& a, int q, const FockState& state);
LemmaA1Report verify_lemma_A1(AffineFock& fock, std::size_t samples, std::uint64_t seed = kDefaultSeed);

/// Random combination of up to three PBW monomials of the given degree, coefficients in [-2, 2].
FockState random_fock_state(const AffineFock& fock, std::mt19937_64& rng, int degree);

struct FormInvariants {
  Rational P;  // (a1_(0) a2 | a3_(0) a4)
  Rational Q;  // (a1_(0) a4 | a2_(0) a3)
  Rational S;  // sum of the three pairings of pairs
};

FormInvariants form_invariants(const LieAlgebra& g, const std::vector<Vector>& a);

struct ProjectionResult {
  FormInvariants invariants;
  Rational Z1;
  Rational Z2;
  Rational Z1_closed;
  Rational Z2_closed;
  bool matches = false;
};

/// Projection of a1_(-1) a2_(-1) a3_(-1) a4_(-1) 1 onto span{L(-4) 1, L(-2)^2 1}.
ProjectionResult appendix_b_projection(AffineFock& fock, const std::vector<Vector>& a);

struct TraceDecomposition {
  Rational ad_trace;
  Rational mode_trace;
  FormInvariants invariants;
  Rational projected_trace;
  Rational theorem_rhs;
  bool decomposition_balances = false;
  bool design_trace_matches = false;
  bool theorem_holds = false;
  bool passed() const { return decomposition_balances && design_trace_matches && theorem_holds; }
};

TraceDecomposition trace_decomposition_check(AffineFock& fock, const std::vector<Vector>& a);

struct AppendixBReport {
  std::string type;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  Rational trace_L4;
  Rational trace_L22;
  bool descendant_traces_ok = false;
  bool projections_ok = true;
  bool decompositions_ok = true;
  std::optional<std::string> counterexample;
  bool passed() const { return descendant_traces_ok && projections_ok && decompositions_ok; }
};

/// The first sample is (e, f, e, f) for the first simple root; the rest are seeded random quadruples.
AppendixBReport verify_appendix_b(AffineFock& fock, std::size_t samples, std::uint64_t seed = kDefaultSeed);

nlohmann::json to_json(const AffineFock& fock, const FockState& s);
nlohmann::json to_json(const RadicalCertificate& c);
nlohmann::json to_json(const KappaIdentities& k);
nlohmann::json to_json(const LemmaA1Report& r);
nlohmann::json to_json(const ProjectionResult& r);
nlohmann::json to_json(const TraceDecomposition& r);
nlohmann::json to_json(const AppendixBReport& r);

}  // namespace s4
