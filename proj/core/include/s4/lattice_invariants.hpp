#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "s4/linalg.hpp"
#include "s4/rational.hpp"

namespace s4 {

enum class Lattice { A2, D4 };
/// full = Aut L; W = Weyl group; E = even sign changes (D4); H = diagram automorphisms (D4);
/// minus_tau = <-1, tau> (A2); trivial = {1}.
enum class Subgroup { full, W, E, H, minus_tau, trivial };

Lattice parse_lattice(std::string_view text);
Subgroup parse_subgroup(std::string_view text);
std::string to_string(Lattice lattice);
std::string to_string(Subgroup subgroup);

/// A finite group of rank x rank rational matrices; matrix columns are images of basis vectors.
struct FiniteMatrixGroup {
  std::string name;
  std::size_t rank = 0;
  std::vector<Matrix> generators;
  std::vector<std::string> generator_labels;
  std::vector<Matrix> elements;

  std::size_t order() const { return elements.size(); }
};

/// Closure of the generators under multiplication. Throws Error past the cap.
FiniteMatrixGroup close_group(std::string name, std::vector<Matrix> generators, std::vector<std::string> labels,
                              std::size_t cap = 100000);

/// A2 in the simple-root basis, D4 in the orthonormal basis e1..e4.
/// Throws Error for subgroups that are not defined for the lattice.
FiniteMatrixGroup lattice_automorphism_group(Lattice lattice, Subgroup subgroup);

inline constexpr int kInvariantDegreeCap = 6;

/// Graded dimensions of invariants in degrees 0..max_degree via the Molien average.
std::vector<long> molien_invariant_dimensions(const FiniteMatrixGroup& group, int max_degree);

/// A factor h_i(-n) is the slot (n, i). Monomials are sorted by depth descending, then index.
using Slot = std::pair<int, int>;
using Monomial = std::vector<Slot>;
using Polynomial = std::map<Monomial, Rational>;

/// Monomials h_{i1}(-n1)...h_{it}(-nt) of total depth `degree`, grouped by depth profile.
struct GradedMonomialSpace {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<Monomial> basis;
  /// [begin, end) ranges of basis indices sharing a depth profile.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  /// (depth, multiplicity) factors of each block, deepest first.
  std::vector<std::vector<std::pair<int, int>>> profiles;
  std::map<Monomial, std::size_t> index;

  std::size_t size() const { return basis.size(); }
};

GradedMonomialSpace graded_monomial_space(std::size_t rank, int degree);

/// Number of monomials of the given degree from prod_k (1 - q^k)^{-rank}.
long graded_dimension(std::size_t rank, int degree);

/// Coordinates of a polynomial in the monomial basis. Throws Error for foreign monomials.
Vector coordinates(const GradedMonomialSpace& space, const Polynomial& p);

/// Matrix of g acting on the degree space (h_i(-n) -> (g h_i)(-n)).
Matrix action_matrix(const GradedMonomialSpace& space, const Matrix& g);

/// Rank of the Reynolds operator on the degree space.
std::size_t reynolds_rank(const FiniteMatrixGroup& group, int degree);

/// Basis of the invariant subspace (image of the Reynolds operator), in row echelon form.
std::vector<Vector> invariant_basis(const FiniteMatrixGroup& group, int degree);

/// Span equality of two families of vectors.
bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b);

std::string monomial_label(const Monomial& m, Lattice lattice);

struct D4XReport {
  std::size_t x_dimension = 0;
  bool h_stable = false;
  std::size_t h_fixed_dimension = 0;
  bool inside_w_invariants = false;
  bool meets_aut_invariants_trivially = false;
  std::size_t w_invariants_degree4 = 0;
  std::size_t aut_invariants_degree4 = 0;
  bool aut_basis_matches_display = false;
  bool bookkeeping_degree4 = false;  // dim S^W = dim S^Aut + dim X
  bool l_minus_one_injective = false;
  bool l_minus_one_image_in_w_invariants = false;
  long vomega_degree5 = 0;
  long reference_degree5 = 0;
  bool bookkeeping_degree5 = false;  // dim L(-1)X + dim V_omega^5 = coefficient of q^5
  bool passed() const;
};

D4XReport d4_X_subspace_check();

nlohmann::json to_json(const FiniteMatrixGroup& group);
nlohmann::json to_json(const D4XReport& report);

}  // namespace s4
