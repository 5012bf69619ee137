#include "s4/lattice_invariants.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "s4/q_series.hpp"

namespace s4 {

Lattice parse_lattice(std::string_view text) {
  if (text == "A2" || text == "a2") return Lattice::A2;
  if (text == "D4" || text == "d4") return Lattice::D4;
  throw Error("unsupported lattice '" + std::string(text) + "' (expected A2 or D4)");
}

Subgroup parse_subgroup(std::string_view text) {
  if (text == "full") return Subgroup::full;
  if (text == "W") return Subgroup::W;
  if (text == "E") return Subgroup::E;
  if (text == "H") return Subgroup::H;
  if (text == "minus_tau") return Subgroup::minus_tau;
  if (text == "trivial") return Subgroup::trivial;
  throw Error("unsupported subgroup '" + std::string(text) + "' (expected full, W, E, H, minus_tau or trivial)");
}

std::string to_string(Lattice lattice) { return lattice == Lattice::A2 ? "A2" : "D4"; }

std::string to_string(Subgroup subgroup) {
  switch (subgroup) {
    case Subgroup::full: return "full";
    case Subgroup::W: return "W";
    case Subgroup::E: return "E";
    case Subgroup::H: return "H";
    case Subgroup::minus_tau: return "minus_tau";
    case Subgroup::trivial: return "trivial";
  }
  return "";
}

namespace {

std::string key_of(const Matrix& m) {
  std::string k;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      k += to_string(m(r, c));
      k += ',';
    }
  return k;
}

Matrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> rs;
  for (const auto& row : rows) {
    Vector v;
    for (long x : row) v.emplace_back(x);
    rs.push_back(std::move(v));
  }
  return Matrix::from_rows(rs);
}

Matrix diagonal(std::initializer_list<long> d) {
  Matrix m(d.size(), d.size());
  std::size_t i = 0;
  for (long x : d) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

Matrix transposition(std::size_t n, std::size_t a, std::size_t b) {
  Matrix m = Matrix::identity(n);
  m(a, a) = 0;
  m(b, b) = 0;
  m(a, b) = 1;
  m(b, a) = 1;
  return m;
}

}  // namespace

FiniteMatrixGroup close_group(std::string name, std::vector<Matrix> generators, std::vector<std::string> labels,
                              std::size_t cap) {
  if (generators.empty()) throw Error("a group needs at least one generator");
  FiniteMatrixGroup g;
  g.name = std::move(name);
  g.rank = generators.front().rows();
  g.generators = std::move(generators);
  g.generator_labels = std::move(labels);
  std::unordered_map<std::string, std::size_t> seen;
  g.elements.push_back(Matrix::identity(g.rank));
  seen.emplace(key_of(g.elements.front()), 0);
  for (std::size_t cursor = 0; cursor < g.elements.size(); ++cursor) {
    for (const auto& s : g.generators) {
      Matrix p = s * g.elements[cursor];
      auto key = key_of(p);
      if (seen.count(key)) continue;
      if (g.elements.size() >= cap) throw Error("group " + g.name + " exceeds the closure cap of " + std::to_string(cap));
      seen.emplace(std::move(key), g.elements.size());
      g.elements.push_back(std::move(p));
    }
  }
  return g;
}

FiniteMatrixGroup lattice_automorphism_group(Lattice lattice, Subgroup subgroup) {
  const std::string name = to_string(lattice) + ":" + to_string(subgroup);
  if (lattice == Lattice::A2) {
    // Simple-root basis; columns are images of alpha_1, alpha_2.
    const Matrix minus = int_matrix({{-1, 0}, {0, -1}});
    const Matrix tau = int_matrix({{0, 1}, {1, 0}});
    const Matrix mu = int_matrix({{1, -1}, {0, -1}});
    const Matrix s1 = int_matrix({{-1, 1}, {0, 1}});
    const Matrix s2 = int_matrix({{1, 0}, {1, -1}});
    switch (subgroup) {
      case Subgroup::full: return close_group(name, {minus, tau, mu}, {"-1", "tau", "mu"});
      case Subgroup::W: return close_group(name, {s1, s2}, {"s1", "s2"});
      case Subgroup::minus_tau: return close_group(name, {minus, tau}, {"-1", "tau"});
      case Subgroup::trivial: return close_group(name, {Matrix::identity(2)}, {"1"});
      default: throw Error("subgroup " + to_string(subgroup) + " is not defined for A2");
    }
  }
  // Orthonormal basis e1..e4.
  std::vector<Matrix> signs = {diagonal({-1, -1, 1, 1}), diagonal({1, -1, -1, 1}), diagonal({1, 1, -1, -1})};
  std::vector<std::string> sign_labels = {"eps12", "eps23", "eps34"};
  std::vector<Matrix> perms = {transposition(4, 0, 1), transposition(4, 1, 2), transposition(4, 2, 3)};
  std::vector<std::string> perm_labels = {"(12)", "(23)", "(34)"};
  const Matrix nu = diagonal({1, 1, 1, -1});
  Matrix sigma(4, 4);
  const long images[4][4] = {{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) sigma(k, i) = fraction(images[i][k], 2);
  auto join = [](std::vector<Matrix> a, const std::vector<Matrix>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto join_labels = [](std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  switch (subgroup) {
    case Subgroup::E: return close_group(name, signs, sign_labels);
    case Subgroup::W: return close_group(name, join(signs, perms), join_labels(sign_labels, perm_labels));
    case Subgroup::H: return close_group(name, {nu, sigma}, {"nu", "sigma"});
    case Subgroup::full:
      return close_group(name, join(join(signs, perms), {nu, sigma}),
                         join_labels(join_labels(sign_labels, perm_labels), {"nu", "sigma"}));
    case Subgroup::trivial: return close_group(name, {Matrix::identity(4)}, {"1"});
    default: throw Error("subgroup " + to_string(subgroup) + " is not defined for D4");
  }
}

namespace {

void check_degree(int degree) {
  if (degree < 0 || degree > kInvariantDegreeCap)
    throw Error("degree " + std::to_string(degree) + " is outside 0.." + std::to_string(kInvariantDegreeCap));
}

// Coefficients of det(I - t g) from principal minors.
std::vector<Rational> det_one_minus(const Matrix& g) {
  const std::size_t n = g.rows();
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Rational minor = 1;
    if (!idx.empty()) {
      Matrix sub(idx.size(), idx.size());
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = g(idx[a], idx[b]);
      minor = determinant(sub);
    }
    coeffs[idx.size()] += idx.size() % 2 == 0 ? minor : Rational(-minor);
  }
  return coeffs;
}

}  // namespace

std::vector<long> molien_invariant_dimensions(const FiniteMatrixGroup& group, int max_degree) {
  check_degree(max_degree);
  const Rational order = max_degree + 1;
  std::map<std::vector<std::string>, std::pair<std::vector<Rational>, long>> classes;
  for (const auto& g : group.elements) {
    auto coeffs = det_one_minus(g);
    auto key = to_strings(coeffs);
    auto [it, inserted] = classes.try_emplace(key, coeffs, 0);
    ++it->second.second;
  }
  PuiseuxSeries total(order);
  for (const auto& [key, entry] : classes) {
    const auto& [coeffs, count] = entry;
    PuiseuxSeries product = PuiseuxSeries::one(order);
    for (long k = 1; k <= max_degree; ++k) {
      std::map<Rational, Rational> terms;
      for (std::size_t j = 0; j < coeffs.size(); ++j) terms[Rational(k * static_cast<long>(j))] = coeffs[j];
      product = product * PuiseuxSeries::from_terms(terms, order).inverse();
    }
    total = total + Rational(count) * product;
  }
  std::vector<long> dims;
  for (int n = 0; n <= max_degree; ++n) {
    Rational v = total.coefficient(n) / static_cast<long>(group.order());
    if (!is_integer(v))
      throw Error("Molien average for " + group.name + " is not an integer at degree " + std::to_string(n));
    dims.push_back(v.get_num().get_si());
  }
  return dims;
}

namespace {

std::vector<std::vector<int>> partitions(int n, int max_part) {
  std::vector<std::vector<int>> out;
  if (n == 0) return {{}};
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (auto& rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

// Nondecreasing k-tuples of indices in [0, rank), lexicographic.
std::vector<std::vector<int>> multisets(std::size_t rank, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < static_cast<int>(rank); ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Symmetric power of a matrix: column t is the image of x_{t1}...x_{tk}.
template <class T>
std::vector<std::vector<T>> sym_power(const std::vector<std::vector<T>>& g, std::size_t rank, int k) {
  const auto basis = multisets(rank, k);
  std::map<std::vector<int>, std::size_t> where;
  for (std::size_t i = 0; i < basis.size(); ++i) where[basis[i]] = i;
  std::vector<std::vector<T>> out(basis.size(), std::vector<T>(basis.size(), T(0)));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    std::map<std::vector<int>, T> poly{{{}, T(1)}};
    for (int factor : basis[col]) {
      std::map<std::vector<int>, T> next;
      for (const auto& [mono, c] : poly)
        for (std::size_t r = 0; r < rank; ++r) {
          if (g[r][factor] == 0) continue;
          auto m = mono;
          m.insert(std::upper_bound(m.begin(), m.end(), static_cast<int>(r)), static_cast<int>(r));
          next[m] += c * g[r][factor];
        }
      poly = std::move(next);
    }
    for (const auto& [mono, c] : poly) out[where.at(mono)][col] = c;
  }
  return out;
}

template <class T>
std::vector<std::vector<T>> kron(const std::vector<std::vector<T>>& a, const std::vector<std::vector<T>>& b) {
  const std::size_t ar = a.size(), br = b.size();
  std::vector<std::vector<T>> out(ar * br, std::vector<T>(ar * br, T(0)));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ar; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < br; ++l) out[i * br + k][j * br + l] = a[i][j] * b[k][l];
    }
  return out;
}

template <class T>
std::vector<std::vector<T>> block_action(const std::vector<std::pair<int, int>>& profile,
                                         const std::map<int, std::vector<std::vector<T>>>& sym) {
  std::vector<std::vector<T>> acc{{T(1)}};
  for (const auto& [depth, mult] : profile) acc = kron(acc, sym.at(mult));
  return acc;
}

std::vector<std::vector<Rational>> to_rows(const Matrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return rows;
}

// Reynolds operator per block, scaled to integers (the scale is constant on each block).
std::vector<Matrix> scaled_reynolds_blocks(const FiniteMatrixGroup& group, const GradedMonomialSpace& space) {
  Integer l = 1;
  for (const auto& g : group.elements)
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (std::size_t c = 0; c < g.cols(); ++c) l = lcm(l, g(r, c).get_den());
  std::set<int> mults;
  for (const auto& profile : space.profiles)
    for (const auto& [depth, mult] : profile) mults.insert(mult);

  std::vector<std::vector<std::vector<long>>> sums(space.blocks.size());
  for (std::size_t b = 0; b < space.blocks.size(); ++b) {
    const std::size_t n = space.blocks[b].second - space.blocks[b].first;
    sums[b].assign(n, std::vector<long>(n, 0));
  }
  for (const auto& g : group.elements) {
    std::vector<std::vector<long>> scaled(g.rows(), std::vector<long>(g.cols()));
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (std::size_t c = 0; c < g.cols(); ++c) scaled[r][c] = Rational(g(r, c) * l).get_num().get_si();
    std::map<int, std::vector<std::vector<long>>> sym;
    for (int m : mults) sym[m] = sym_power(scaled, space.rank, m);
    for (std::size_t b = 0; b < space.blocks.size(); ++b) {
      auto action = block_action(space.profiles[b], sym);
      for (std::size_t i = 0; i < action.size(); ++i)
        for (std::size_t j = 0; j < action.size(); ++j) sums[b][i][j] += action[i][j];
    }
  }
  std::vector<Matrix> out;
  for (const auto& s : sums) {
    Matrix m(s.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) m(i, j) = s[i][j];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

GradedMonomialSpace graded_monomial_space(std::size_t rank, int degree) {
  check_degree(degree);
  GradedMonomialSpace space;
  space.degree = degree;
  space.rank = rank;
  for (const auto& parts : partitions(degree, degree)) {
    std::vector<std::pair<int, int>> profile;
    for (int p : parts) {
      if (!profile.empty() && profile.back().first == p)
        ++profile.back().second;
      else
        profile.emplace_back(p, 1);
    }
    const std::size_t begin = space.basis.size();
    std::vector<Monomial> block{{}};
    for (const auto& [depth, mult] : profile) {
      std::vector<Monomial> next;
      for (const auto& prefix : block)
        for (const auto& tuple : multisets(rank, mult)) {
          Monomial m = prefix;
          for (int i : tuple) m.emplace_back(depth, i);
          next.push_back(std::move(m));
        }
      block = std::move(next);
    }
    for (auto& m : block) {
      space.index[m] = space.basis.size();
      space.basis.push_back(std::move(m));
    }
    space.blocks.emplace_back(begin, space.basis.size());
    space.profiles.push_back(std::move(profile));
  }
  return space;
}

long graded_dimension(std::size_t rank, int degree) {
  std::vector<long> c(degree + 1, 0);
  c[0] = 1;
  for (std::size_t copy = 0; copy < rank; ++copy)
    for (int k = 1; k <= degree; ++k)
      for (int n = k; n <= degree; ++n) c[n] += c[n - k];
  return c[degree];
}

Vector coordinates(const GradedMonomialSpace& space, const Polynomial& p) {
  Vector v(space.size());
  for (const auto& [mono, coeff] : p) {
    Monomial m = mono;
    std::sort(m.begin(), m.end(), [](const Slot& a, const Slot& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    auto it = space.index.find(m);
    if (it == space.index.end()) throw Error("monomial does not belong to the degree " + std::to_string(space.degree) +
                                             " space");
    v[it->second] += coeff;
  }
  return v;
}

Matrix action_matrix(const GradedMonomialSpace& space, const Matrix& g) {
  auto rows = to_rows(g);
  std::set<int> mults;
  for (const auto& profile : space.profiles)
    for (const auto& [depth, mult] : profile) mults.insert(mult);
  std::map<int, std::vector<std::vector<Rational>>> sym;
  for (int m : mults) sym[m] = sym_power(rows, space.rank, m);
  Matrix out(space.size(), space.size());
  for (std::size_t b = 0; b < space.blocks.size(); ++b) {
    auto action = block_action(space.profiles[b], sym);
    const std::size_t off = space.blocks[b].first;
    for (std::size_t i = 0; i < action.size(); ++i)
      for (std::size_t j = 0; j < action.size(); ++j) out(off + i, off + j) = action[i][j];
  }
  return out;
}

std::size_t reynolds_rank(const FiniteMatrixGroup& group, int degree) {
  const auto space = graded_monomial_space(group.rank, degree);
  std::size_t total = 0;
  for (const auto& block : scaled_reynolds_blocks(group, space)) total += rank(block);
  return total;
}

std::vector<Vector> invariant_basis(const FiniteMatrixGroup& group, int degree) {
  const auto space = graded_monomial_space(group.rank, degree);
  const auto blocks = scaled_reynolds_blocks(group, space);
  std::vector<Vector> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto echelon = row_reduce(blocks[b].transpose());
    const std::size_t off = space.blocks[b].first;
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
      Vector v(space.size());
      for (std::size_t c = 0; c < echelon.reduced.cols(); ++c) v[off + c] = echelon.reduced(r, c);
      out.push_back(std::move(v));
    }
  }
  return out;
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty() || rank(Matrix::from_rows(a.empty() ? b : a)) == 0;
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = rank(Matrix::from_rows(a));
  return ra == rank(Matrix::from_rows(b)) && ra == rank(Matrix::from_rows(both));
}

std::string monomial_label(const Monomial& m, Lattice lattice) {
  const std::string stem = lattice == Lattice::A2 ? "a" : "e";
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    out += stem + std::to_string(m[i].second + 1) + "(-" + std::to_string(m[i].first) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "1" : out;
}

bool D4XReport::passed() const {
  return x_dimension == 2 && h_stable && h_fixed_dimension == 0 && inside_w_invariants &&
         meets_aut_invariants_trivially && aut_basis_matches_display && bookkeeping_degree4 &&
         l_minus_one_injective && l_minus_one_image_in_w_invariants && bookkeeping_degree5;
}

namespace {

Monomial slots(std::initializer_list<Slot> s) { return Monomial(s); }

// L(-1) acts on S(h t^{-1} C[t^{-1}]) as the derivation h(-n) -> n h(-n-1).
Polynomial l_minus_one(const Polynomial& p) {
  Polynomial out;
  for (const auto& [mono, coeff] : p)
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (k > 0 && mono[k] == mono[k - 1]) continue;
      const long mult = std::count(mono.begin(), mono.end(), mono[k]);
      Monomial m = mono;
      m[k].first += 1;
      std::sort(m.begin(), m.end(), [](const Slot& a, const Slot& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
      });
      out[m] += coeff * mult * mono[k].first;
    }
  return out;
}

bool fixed_by(const std::vector<Matrix>& actions, const Vector& v) {
  return std::all_of(actions.begin(), actions.end(), [&](const Matrix& a) { return a * v == v; });
}

}  // namespace

D4XReport d4_X_subspace_check() {
  D4XReport report;
  const auto space4 = graded_monomial_space(4, 4);
  const auto space5 = graded_monomial_space(4, 5);

  Polynomial quartic, product, aut_quartic, deep, middle;
  for (int i = 0; i < 4; ++i) {
    quartic[slots({{1, i}, {1, i}, {1, i}, {1, i}})] += 1;
    aut_quartic[slots({{1, i}, {1, i}, {1, i}, {1, i}})] += 1;
    deep[slots({{3, i}, {1, i}})] += 1;
    middle[slots({{2, i}, {2, i}})] += 1;
    for (int j = i + 1; j < 4; ++j) {
      quartic[slots({{1, i}, {1, i}, {1, j}, {1, j}})] -= 2;
      aut_quartic[slots({{1, i}, {1, i}, {1, j}, {1, j}})] += 2;
    }
  }
  product[slots({{1, 0}, {1, 1}, {1, 2}, {1, 3}})] = 1;
  const std::vector<Polynomial> x_polys = {quartic, product};
  std::vector<Vector> x;
  for (const auto& p : x_polys) x.push_back(coordinates(space4, p));
  report.x_dimension = rank(Matrix::from_rows(x));

  const auto h = lattice_automorphism_group(Lattice::D4, Subgroup::H);
  const auto w = lattice_automorphism_group(Lattice::D4, Subgroup::W);
  const auto full = lattice_automorphism_group(Lattice::D4, Subgroup::full);

  std::vector<Matrix> h_actions;
  for (const auto& g : h.generators) h_actions.push_back(action_matrix(space4, g));
  std::vector<Vector> with_images = x;
  for (const auto& a : h_actions)
    for (const auto& v : x) with_images.push_back(a * v);
  report.h_stable = rank(Matrix::from_rows(with_images)) == report.x_dimension;

  // Fixed vectors a x_0 + b x_1 of X under every generator of H.
  std::vector<Vector> rows;
  for (const auto& a : h_actions) {
    Vector d0 = a * x[0], d1 = a * x[1];
    for (std::size_t k = 0; k < space4.size(); ++k) rows.push_back({d0[k] - x[0][k], d1[k] - x[1][k]});
  }
  report.h_fixed_dimension = nullspace(Matrix::from_rows(rows)).size();

  std::vector<Matrix> w_actions4, w_actions5;
  for (const auto& g : w.generators) {
    w_actions4.push_back(action_matrix(space4, g));
    w_actions5.push_back(action_matrix(space5, g));
  }
  report.inside_w_invariants = std::all_of(x.begin(), x.end(), [&](const Vector& v) { return fixed_by(w_actions4, v); });

  const auto aut_basis = invariant_basis(full, 4);
  const auto w_basis = invariant_basis(w, 4);
  report.aut_invariants_degree4 = aut_basis.size();
  report.w_invariants_degree4 = w_basis.size();
  std::vector<Vector> combined = x;
  combined.insert(combined.end(), aut_basis.begin(), aut_basis.end());
  report.meets_aut_invariants_trivially =
      rank(Matrix::from_rows(combined)) == report.x_dimension + aut_basis.size();
  report.aut_basis_matches_display =
      same_span(aut_basis, {coordinates(space4, deep), coordinates(space4, middle), coordinates(space4, aut_quartic)});
  report.bookkeeping_degree4 = report.w_invariants_degree4 == report.aut_invariants_degree4 + report.x_dimension;

  std::vector<Vector> lx;
  for (const auto& p : x_polys) lx.push_back(coordinates(space5, l_minus_one(p)));
  report.l_minus_one_injective = rank(Matrix::from_rows(lx)) == 2;
  report.l_minus_one_image_in_w_invariants =
      std::all_of(lx.begin(), lx.end(), [&](const Vector& v) { return fixed_by(w_actions5, v); });
  report.vomega_degree5 = vomega_series(6).coefficient(5).get_num().get_si();
  report.reference_degree5 = reference_series(CartanType::parse("D4")).coefficient(5).get_num().get_si();
  report.bookkeeping_degree5 =
      static_cast<long>(rank(Matrix::from_rows(lx))) + report.vomega_degree5 == report.reference_degree5;
  return report;
}

nlohmann::json to_json(const FiniteMatrixGroup& group) {
  return {{"name", group.name}, {"order", group.order()}, {"generators", group.generator_labels}};
}

nlohmann::json to_json(const D4XReport& r) {
  return {{"x_dimension", r.x_dimension},
          {"h_stable", r.h_stable},
          {"h_fixed_dimension", r.h_fixed_dimension},
          {"inside_w_invariants", r.inside_w_invariants},
          {"meets_aut_invariants_trivially", r.meets_aut_invariants_trivially},
          {"w_invariants_degree4", r.w_invariants_degree4},
          {"aut_invariants_degree4", r.aut_invariants_degree4},
          {"aut_basis_matches_display", r.aut_basis_matches_display},
          {"bookkeeping_degree4", r.bookkeeping_degree4},
          {"l_minus_one_injective", r.l_minus_one_injective},
          {"l_minus_one_image_in_w_invariants", r.l_minus_one_image_in_w_invariants},
          {"vomega_degree5", r.vomega_degree5},
          {"reference_degree5", r.reference_degree5},
          {"bookkeeping_degree5", r.bookkeeping_degree5},
          {"passed", r.passed()}};
}

}  // namespace s4
