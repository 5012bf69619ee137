#include "s4/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

namespace s4 {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

using ElementIndex = std::unordered_map<std::vector<std::int32_t>, std::size_t, VectorHash>;

std::vector<std::int32_t> multiply(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b,
                                   int n) {
  std::vector<std::int32_t> p(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      auto aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) p[i * n + j] += aik * b[k * n + j];
    }
  return p;
}

// Simple-root lengths and bonds, long roots of squared length 2.
Matrix gram_matrix(const CartanType& type) {
  const int n = type.rank();
  Matrix g(n, n);
  std::vector<Rational> length(n, Rational(2));
  std::vector<std::pair<int, int>> bonds;
  auto chain = [&](int first, int last) {
    for (int i = first; i < last; ++i) bonds.emplace_back(i, i + 1);
  };
  switch (type.family()) {
    case Family::A:
      chain(0, n - 1);
      break;
    case Family::B:
      chain(0, n - 1);
      length[n - 1] = 1;
      break;
    case Family::C:
      chain(0, n - 1);
      for (int i = 0; i < n - 1; ++i) length[i] = 1;
      break;
    case Family::D:
      chain(0, n - 2);
      bonds.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-6(-7-8) with 2 attached to 4 (zero-based below).
      bonds = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i < n - 1; ++i) bonds.emplace_back(i, i + 1);
      break;
    case Family::F:
      chain(0, 3);
      length[2] = 1;
      length[3] = 1;
      break;
    case Family::G:
      bonds = {{0, 1}};
      length[0] = fraction(2, 3);
      break;
  }
  for (int i = 0; i < n; ++i) g(i, i) = length[i];
  for (auto [i, j] : bonds) {
    Rational v = length[i] == length[j] ? Rational(-length[i] / 2) : Rational(-1);
    g(i, j) = v;
    g(j, i) = v;
  }
  return g;
}

}  // namespace

CartanType::CartanType(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok || rank > 64)
    throw Error("unsupported simple type " + std::string(1, static_cast<char>(family)) + std::to_string(rank) +
                " (supported: A1+, B2+, C2+, D4+, E6-E8, F4, G2; rank <= 64)");
}

CartanType CartanType::parse(std::string_view label) {
  if (label.size() < 2) throw Error("unsupported type label '" + std::string(label) + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(label.front())));
  std::string digits(label.substr(1));
  if (f < 'A' || f > 'G' || digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 3)
    throw Error("unsupported type label '" + std::string(label) + "'");
  return CartanType(static_cast<Family>(f), std::stoi(digits));
}

std::string CartanType::label() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

int CartanType::dimension() const {
  const int n = rank_;
  switch (family_) {
    case Family::A: return n * n + 2 * n;
    case Family::B:
    case Family::C: return 2 * n * n + n;
    case Family::D: return 2 * n * n - n;
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

Rational RootSystem::inner(const IntVector& a, const IntVector& b) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      if (b[j] != 0) s += gram(i, j) * (a[i] * b[j]);
  }
  return s;
}

Rational RootSystem::inner(const Vector& a, const Vector& b) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      if (b[j] != 0) s += gram(i, j) * a[i] * b[j];
  }
  return s;
}

int RootSystem::coroot_pairing(const IntVector& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank; ++j) s += beta[j] * cartan[i][j];
  return s;
}

std::optional<std::size_t> RootSystem::positive_index(const IntVector& beta) const {
  auto it = index_of_positive.find(beta);
  if (it == index_of_positive.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const IntVector& beta) const {
  if (positive_index(beta)) return true;
  IntVector neg(beta.size());
  std::transform(beta.begin(), beta.end(), neg.begin(), [](int x) { return -x; });
  return positive_index(neg).has_value();
}

int height(const IntVector& root) {
  int h = 0;
  for (int x : root) h += x;
  return h;
}

RootSystem build_root_system(const CartanType& type) {
  RootSystem rs{.type = type};
  const int n = type.rank();
  rs.rank = n;
  rs.gram = gram_matrix(type);
  rs.cartan.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational a = 2 * rs.gram(i, j) / rs.gram(i, i);
      if (!is_integer(a)) throw Error("non-integral Cartan entry for " + type.label());
      rs.cartan[i][j] = static_cast<int>(a.get_num().get_si());
    }

  // Closure by height through alpha_i-strings: beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> > 0, with p the length of the string below beta.
  std::set<IntVector> known;
  std::vector<IntVector> layer;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<IntVector> all;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    all.insert(all.end(), layer.begin(), layer.end());
    std::set<IntVector> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        IntVector down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int q = p - rs.coroot_pairing(beta, i);
        if (q > 0) {
          IntVector up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(layer.begin(), layer.end());
  }
  rs.positive_roots = std::move(all);
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) rs.index_of_positive[rs.positive_roots[k]] = k;

  const std::size_t expected = static_cast<std::size_t>(type.dimension() - n) / 2;
  if (rs.positive_roots.size() != expected)
    throw Error("root closure for " + type.label() + " produced " + std::to_string(rs.positive_roots.size()) +
                " positive roots, expected " + std::to_string(expected));

  rs.rho.assign(n, Rational(0));
  for (const auto& beta : rs.positive_roots)
    for (int i = 0; i < n; ++i) rs.rho[i] += beta[i];
  for (auto& x : rs.rho) x /= 2;

  std::vector<IntVector> maximal;
  for (const auto& beta : rs.positive_roots) {
    bool is_max = true;
    for (int i = 0; i < n && is_max; ++i) {
      IntVector up = beta;
      up[i] += 1;
      if (rs.index_of_positive.count(up)) is_max = false;
    }
    if (is_max) maximal.push_back(beta);
  }
  if (maximal.size() != 1) throw Error("root poset of " + type.label() + " has no unique maximal root");
  rs.highest_root = maximal.front();
  rs.dual_coxeter = dual_coxeter_number(rs);
  return rs;
}

RootSystem build_root_system(std::string_view label) { return build_root_system(CartanType::parse(label)); }

int dual_coxeter_number(const RootSystem& rs) {
  Vector theta(rs.highest_root.begin(), rs.highest_root.end());
  Rational pairing = 2 * rs.inner(rs.rho, theta) / rs.norm2(rs.highest_root);
  if (!is_integer(pairing)) throw Error("(rho, theta^vee) is not an integer");
  return static_cast<int>(pairing.get_num().get_si()) + 1;
}

Vector apply(const WeylElement& w, int rank, const Vector& v) {
  Vector out(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (w.matrix[i * rank + j] != 0) out[i] += w.matrix[i * rank + j] * v[j];
  return out;
}

IntVector apply(const WeylElement& w, int rank, const IntVector& v) {
  IntVector out(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) out[i] += w.matrix[i * rank + j] * v[j];
  return out;
}

std::vector<std::int32_t> simple_reflection(const RootSystem& rs, int i) {
  const int n = rs.rank;
  std::vector<std::int32_t> m(static_cast<std::size_t>(n * n), 0);
  for (int k = 0; k < n; ++k) m[k * n + k] = 1;
  for (int j = 0; j < n; ++j) m[i * n + j] -= rs.cartan[i][j];
  return m;
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::size_t cap) {
  const int n = rs.rank;
  std::vector<std::vector<std::int32_t>> reflections;
  for (int i = 0; i < n; ++i) reflections.push_back(simple_reflection(rs, i));

  std::vector<WeylElement> elements;
  ElementIndex seen;
  WeylElement id;
  id.matrix.assign(static_cast<std::size_t>(n * n), 0);
  for (int k = 0; k < n; ++k) id.matrix[k * n + k] = 1;
  seen.emplace(id.matrix, 0);
  elements.push_back(id);
  for (std::size_t cursor = 0; cursor < elements.size(); ++cursor) {
    for (const auto& s : reflections) {
      auto product = multiply(s, elements[cursor].matrix, n);
      if (seen.count(product)) continue;
      if (elements.size() >= cap)
        throw Error("Weyl group of " + rs.type.label() + " exceeds the enumeration cap of " + std::to_string(cap));
      seen.emplace(product, elements.size());
      elements.push_back(WeylElement{std::move(product), elements[cursor].length + 1});
    }
  }
  return elements;
}

std::uint64_t weyl_group_order(const CartanType& type) {
  auto factorial = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int n = type.rank();
  switch (type.family()) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840ull : n == 7 ? 2903040ull : 696729600ull;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

Rational rho_displacement(const RootSystem& rs, const WeylElement& w) {
  Vector image = apply(w, rs.rank, rs.rho);
  Vector diff(rs.rank);
  for (int i = 0; i < rs.rank; ++i) diff[i] = rs.rho[i] - image[i];
  return rs.norm2(diff);
}

std::vector<WeylElement> enumerate_weyl_ball(const RootSystem& rs, const Rational& bound, std::size_t cap) {
  const int n = rs.rank;
  std::vector<std::vector<std::int32_t>> reflections;
  for (int i = 0; i < n; ++i) reflections.push_back(simple_reflection(rs, i));

  std::vector<WeylElement> elements;
  ElementIndex seen;
  WeylElement id;
  id.matrix.assign(static_cast<std::size_t>(n * n), 0);
  for (int k = 0; k < n; ++k) id.matrix[k * n + k] = 1;
  seen.emplace(id.matrix, 0);
  elements.push_back(id);
  for (std::size_t cursor = 0; cursor < elements.size(); ++cursor) {
    for (const auto& s : reflections) {
      auto product = multiply(s, elements[cursor].matrix, n);
      if (seen.count(product)) continue;
      seen.emplace(product, 0);
      WeylElement candidate{std::move(product), elements[cursor].length + 1};
      if (rho_displacement(rs, candidate) > bound) continue;
      if (elements.size() >= cap)
        throw Error("Weyl ball of " + rs.type.label() + " exceeds the enumeration cap of " + std::to_string(cap));
      elements.push_back(std::move(candidate));
    }
  }
  return elements;
}

std::vector<CensusCell> rho_displacement_census(const RootSystem& rs, std::optional<Rational> bound) {
  std::map<std::pair<Rational, int>, std::size_t> cells;
  for (const auto& w : enumerate_weyl_group(rs)) {
    Rational norm = rho_displacement(rs, w);
    if (bound && norm > *bound) continue;
    ++cells[{norm, -w.sign()}];
  }
  std::vector<CensusCell> out;
  for (const auto& [key, count] : cells) out.push_back(CensusCell{key.first, -key.second, count});
  return out;
}

MonotonicityReport check_rho_monotonicity(const RootSystem& rs) {
  const int n = rs.rank;
  auto elements = enumerate_weyl_group(rs);
  ElementIndex index;
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k].matrix, k);
  std::vector<Rational> norms;
  norms.reserve(elements.size());
  for (const auto& w : elements) norms.push_back(rho_displacement(rs, w));

  Matrix gram_inv = inverse(rs.gram);
  std::vector<std::vector<std::int32_t>> reflections;
  for (int i = 0; i < n; ++i) reflections.push_back(simple_reflection(rs, i));

  MonotonicityReport report;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const auto& w = elements[k];
    ++report.elements_checked;
    // w^{-1} = G^{-1} w^T G because w preserves the form.
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = w.matrix[j * n + i];
    Matrix inv = gram_inv * m * rs.gram;
    std::vector<std::int32_t> inv_int(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv_int[i * n + j] = static_cast<std::int32_t>(inv(i, j).get_num().get_si());
    auto it = index.find(inv_int);
    ++report.inverse_checks;
    if (it == index.end() || norms[it->second] != norms[k]) {
      report.passed = false;
      if (!report.counterexample)
        report.counterexample = "element " + std::to_string(k) + ": |rho - w rho|^2 != |rho - w^-1 rho|^2";
      continue;
    }
    for (int i = 0; i < n; ++i) {
      auto rw = multiply(reflections[i], w.matrix, n);
      const auto& other = elements[index.at(rw)];
      if (other.length <= w.length) continue;
      ++report.reflection_checks;
      if (!(norms[index.at(rw)] > norms[k])) {
        report.passed = false;
        if (!report.counterexample)
          report.counterexample = "element " + std::to_string(k) + ", reflection s" + std::to_string(i + 1) +
                                  ": displacement does not increase";
      }
    }
  }
  return report;
}

Matrix d4_simple_roots_in_standard_basis() {
  // Columns: alpha_1 = e1-e2, alpha_2 = e2-e3, alpha_3 = e3-e4, alpha_4 = e3+e4.
  Matrix b(4, 4);
  b(0, 0) = 1; b(1, 0) = -1;
  b(1, 1) = 1; b(2, 1) = -1;
  b(2, 2) = 1; b(3, 2) = -1;
  b(2, 3) = 1; b(3, 3) = 1;
  return b;
}

Matrix d4_standard_to_simple_roots() { return inverse(d4_simple_roots_in_standard_basis()); }

nlohmann::json to_json(const RootSystem& rs) {
  nlohmann::json j;
  j["type"] = rs.type.label();
  j["rank"] = rs.rank;
  j["dimension"] = rs.dimension();
  nlohmann::json gram = nlohmann::json::array();
  for (int i = 0; i < rs.rank; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < rs.rank; ++k) row.push_back(to_string(rs.gram(i, k)));
    gram.push_back(row);
  }
  j["gram"] = gram;
  j["positive_roots"] = rs.positive_roots;
  j["rho"] = to_strings(rs.rho);
  j["rho_norm2"] = to_string(rs.norm2(rs.rho));
  j["highest_root"] = rs.highest_root;
  j["dual_coxeter"] = rs.dual_coxeter;
  return j;
}

nlohmann::json to_json(const std::vector<CensusCell>& census) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : census)
    cells.push_back({{"norm2", to_string(c.norm)}, {"sign", c.sign}, {"count", c.count}});
  return cells;
}

}  // namespace s4
