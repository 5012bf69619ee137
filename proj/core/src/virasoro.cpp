#include "s4/virasoro.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "s4/classification.hpp"

namespace s4 {

namespace {

using Combination = std::map<VirasoroMonomial, Rational>;

void add_to(Combination& into, const VirasoroMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

void add_scaled(Combination& into, const Combination& from, const Rational& s) {
  if (s == 0) return;
  for (const auto& [m, c] : from) add_to(into, m, c * s);
}

int weight(const VirasoroMonomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Highest-weight module with L(m) v = 0 for m > 0 and L(0) v = h v. The vacuum
// module additionally has L(-1) v = 0.
class HighestWeightModule {
 public:
  HighestWeightModule(Rational c, Rational h, bool vacuum) : c_(std::move(c)), h_(std::move(h)), vacuum_(vacuum) {}

  const Combination& apply(int m, const VirasoroMonomial& mono) {
    auto key = std::make_pair(m, mono);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Combination out = compute(m, mono);
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  Combination apply(int m, const Combination& state) {
    Combination out;
    for (const auto& [mono, c] : state) add_scaled(out, apply(m, mono), c);
    return out;
  }

 private:
  Rational c_;
  Rational h_;
  bool vacuum_;
  std::map<std::pair<int, VirasoroMonomial>, Combination> memo_;

  Combination compute(int m, const VirasoroMonomial& mono) {
    Combination out;
    if (mono.empty()) {
      if (m > 0) return out;
      if (m == 0) {
        add_to(out, mono, h_);
        return out;
      }
      if (vacuum_ && m == -1) return out;
      add_to(out, {-m}, 1);
      return out;
    }
    const int first = mono.front();
    if (-m >= first) {
      VirasoroMonomial next = mono;
      next.insert(next.begin(), -m);
      add_to(out, next, 1);
      return out;
    }
    const VirasoroMonomial rest(mono.begin() + 1, mono.end());
    // L(m) L(-first) = L(-first) L(m) + (m + first) L(m - first) + central term.
    const Combination inner = apply(m, rest);
    for (const auto& [term, coeff] : inner) add_scaled(out, apply(-first, term), coeff);
    if (m + first != 0) add_scaled(out, apply(m - first, rest), Rational(m + first));
    if (m == first) add_to(out, rest, c_ * (static_cast<long>(m) * m * m - m) / 12);
    return out;
  }
};

VirasoroState make_state(Combination comb, int degree, const Rational& c) {
  VirasoroState s;
  s.combination = std::move(comb);
  s.degree = degree;
  s.central_charge = c;
  return s;
}

void check_degree(int degree) {
  if (degree < 0 || degree > kVirasoroDegreeCap)
    throw Error("degree " + std::to_string(degree) + " is outside 0.." + std::to_string(kVirasoroDegreeCap));
}

std::string monomial_text(const VirasoroMonomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (int p : m) out += "L(-" + std::to_string(p) + ")";
  return out + "1";
}

}  // namespace

Rational VirasoroState::coefficient(const VirasoroMonomial& m) const {
  auto it = combination.find(m);
  return it == combination.end() ? Rational(0) : it->second;
}

std::string VirasoroState::to_string() const {
  if (combination.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : combination) {
    if (!out.empty()) out += " + ";
    out += s4::to_string(c) + "*" + monomial_text(m);
  }
  return out;
}

VirasoroState& VirasoroState::operator+=(const VirasoroState& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) degree = other.degree;
  if (degree != other.degree) throw Error("adding Virasoro states of different degrees");
  if (central_charge != other.central_charge) throw Error("adding Virasoro states with different central charges");
  add_scaled(combination, other.combination, 1);
  return *this;
}

VirasoroState& VirasoroState::operator-=(const VirasoroState& other) { return *this += Rational(-1) * other; }

VirasoroState& VirasoroState::operator*=(const Rational& s) {
  if (s == 0) {
    combination.clear();
    return *this;
  }
  for (auto& [m, c] : combination) c *= s;
  return *this;
}

bool operator==(const VirasoroState& a, const VirasoroState& b) {
  return a.combination == b.combination && a.central_charge == b.central_charge &&
         (a.combination.empty() || a.degree == b.degree);
}

VirasoroState vacuum_state(const Rational& c) { return make_state({{{}, 1}}, 0, c); }

VirasoroState vacuum_monomial(const Rational& c, VirasoroMonomial parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  const int degree = weight(parts);
  if (!parts.empty() && parts.back() < 2) return make_state({}, degree, c);
  return make_state({{parts, 1}}, degree, c);
}

std::vector<VirasoroMonomial> vacuum_monomials(int degree) {
  check_degree(degree);
  std::vector<VirasoroMonomial> out;
  std::function<void(int, int, VirasoroMonomial&)> rec = [&](int left, int max_part, VirasoroMonomial& cur) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 2; --p) {
      cur.push_back(p);
      rec(left - p, p, cur);
      cur.pop_back();
    }
  };
  VirasoroMonomial cur;
  rec(degree, degree, cur);
  return out;
}

std::vector<VirasoroState> vacuum_basis(int degree, const Rational& c) {
  std::vector<VirasoroState> out;
  for (auto& m : vacuum_monomials(degree)) out.push_back(vacuum_monomial(c, std::move(m)));
  return out;
}

VirasoroState apply_L(int m, const VirasoroState& state) {
  HighestWeightModule module(state.central_charge, 0, true);
  return make_state(module.apply(m, state.combination), state.degree - m, state.central_charge);
}

Rational vacuum_pairing(const VirasoroState& a, const VirasoroState& b) {
  if (a.is_zero() || b.is_zero() || a.degree != b.degree) return 0;
  HighestWeightModule module(b.central_charge, 0, true);
  Rational total = 0;
  for (const auto& [mono, coeff] : a.combination) {
    Combination cur = b.combination;
    for (int p : mono) cur = module.apply(p, cur);
    auto it = cur.find({});
    if (it != cur.end()) total += coeff * it->second;
  }
  return total;
}

Matrix gram_matrix(int degree, const Rational& c) {
  const auto basis = vacuum_basis(degree, c);
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) g(i, j) = g(j, i) = vacuum_pairing(basis[i], basis[j]);
  return g;
}

Vector coordinates(const VirasoroState& state) {
  const auto monomials = vacuum_monomials(state.degree);
  Vector v(monomials.size());
  for (const auto& [m, c] : state.combination) {
    auto it = std::find(monomials.begin(), monomials.end(), m);
    if (it == monomials.end()) throw Error("monomial " + monomial_text(m) + " is not in the vacuum basis");
    v[static_cast<std::size_t>(it - monomials.begin())] = c;
  }
  return v;
}

std::vector<Rational> gram_determinant_polynomial(int degree) {
  const auto monomials = vacuum_monomials(degree);
  std::size_t bound = 0;
  for (const auto& m : monomials) bound += m.size();
  const std::size_t points = bound + 1;
  Matrix vandermonde(points, points);
  Vector values(points);
  for (std::size_t i = 0; i < points; ++i) {
    const Rational c = static_cast<long>(i + 1);
    Rational power = 1;
    for (std::size_t j = 0; j < points; ++j) {
      vandermonde(i, j) = power;
      power *= c;
    }
    values[i] = determinant(gram_matrix(degree, c));
  }
  auto result = solve(vandermonde, values);
  if (result.status != SolveStatus::unique) throw Error("interpolation of the Gram determinant failed");
  auto coeffs = result.solution;
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

namespace {

Rational evaluate(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (x - root); the remainder is assumed zero.
std::vector<Rational> deflate(const std::vector<Rational>& poly, const Rational& root) {
  std::vector<Rational> out(poly.size() - 1);
  Rational carry = 0;
  for (std::size_t i = poly.size() - 1; i >= 1; --i) {
    carry = poly[i] + carry * root;
    out[i - 1] = carry;
  }
  return out;
}

}  // namespace

GramRoots gram_determinant_roots(int degree) {
  GramRoots out;
  out.degree = degree;
  auto poly = gram_determinant_polynomial(degree);
  std::vector<Rational> candidates;
  for (int k = 1; k <= degree; ++k)
    for (const auto& c : degenerate_central_charges(k))
      if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(c);
  std::sort(candidates.begin(), candidates.end());
  for (const auto& r : candidates) {
    int mult = 0;
    while (poly.size() > 1 && evaluate(poly, r) == 0) {
      poly = deflate(poly, r);
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(r, mult);
  }
  out.residual_degree = static_cast<int>(poly.size()) - 1;
  out.leading_coefficient = poly.back();
  return out;
}

namespace {

void require_nonsingular(const Rational& c, int n) {
  for (int k = 2; k <= n; ++k) {
    if (determinant(gram_matrix(k, c)) != 0) continue;
    std::string listed;
    for (int j = 1; j <= k; ++j)
      for (const auto& x : degenerate_central_charges(j)) listed += (listed.empty() ? "" : ", ") + to_string(x);
    throw Error("c = " + to_string(c) + " has a singular vector at degree " + std::to_string(k) +
                " (degenerate central charges up to this degree: " + listed + ")");
  }
}

struct CasimirSolve {
  VirasoroState state;
  bool consistent = false;
};

CasimirSolve solve_casimir(const Rational& c, const Rational& d, int n) {
  check_degree(n);
  if (n == 0) return {Rational(d) * vacuum_state(c), true};
  if (n == 1) return {make_state({}, 1, c), true};
  require_nonsingular(c, n);
  std::vector<VirasoroState> kappa{Rational(d) * vacuum_state(c), make_state({}, 1, c)};
  for (int i = 2; i < n; ++i) kappa.push_back(solve_casimir(c, d, i).state);

  const auto basis = vacuum_basis(n, c);
  std::vector<Vector> rows;
  Vector rhs;
  for (int m = 1; m <= n; ++m) {
    const std::size_t target = vacuum_monomials(n - m).size();
    std::vector<Vector> images;
    for (const auto& b : basis) images.push_back(coordinates(apply_L(m, b)));
    const Vector want = coordinates(Rational(n - 1) * kappa[static_cast<std::size_t>(n - m)]);
    for (std::size_t r = 0; r < target; ++r) {
      Vector row;
      for (const auto& img : images) row.push_back(img.empty() ? Rational(0) : img[r]);
      rows.push_back(std::move(row));
      rhs.push_back(want.empty() ? Rational(0) : want[r]);
    }
  }
  auto result = solve(Matrix::from_rows(rows), rhs);
  if (result.status == SolveStatus::inconsistent) return {make_state({}, n, c), false};
  if (result.status != SolveStatus::unique)
    throw Error("the Casimir system at degree " + std::to_string(n) + " does not have a unique solution");
  Combination comb;
  const auto monomials = vacuum_monomials(n);
  for (std::size_t i = 0; i < monomials.size(); ++i) add_to(comb, monomials[i], result.solution[i]);
  return {make_state(std::move(comb), n, c), true};
}

}  // namespace

VirasoroState casimir_coefficients(const Rational& c, const Rational& d, int n) {
  auto result = solve_casimir(c, d, n);
  if (!result.consistent)
    throw Error("the relations L(m) kappa_" + std::to_string(n) + " are inconsistent at c = " + to_string(c));
  return result.state;
}

VirasoroState casimir_closed_form(const Rational& c, const Rational& d, int n) {
  switch (n) {
    case 0: return Rational(d) * vacuum_state(c);
    case 1: return make_state({}, 1, c);
    default: break;
  }
  if (c == 0) throw Error("the closed forms need c != 0");
  switch (n) {
    case 2: return Rational(2 * d / c) * vacuum_monomial(c, {2});
    case 3: return Rational(d / c) * vacuum_monomial(c, {3});
    case 4: {
      const Rational denom = c * (5 * c + 22);
      if (denom == 0) throw Error("the closed form of kappa_4 needs c != -22/5");
      const Rational scale = 3 * d / denom;
      return scale * (Rational(4) * vacuum_monomial(c, {2, 2}) + Rational(c + 2) * vacuum_monomial(c, {4}));
    }
    default: throw Error("closed forms are known for n <= 4 only");
  }
}

CasimirReport casimir_report(const Rational& c, const Rational& d, int n) {
  CasimirReport r;
  r.c = c;
  r.d = d;
  r.n = n;
  auto solved = solve_casimir(c, d, n);
  r.solved = solved.state;
  r.consistent = solved.consistent;
  r.closed_form = casimir_closed_form(c, d, n);
  r.matches = r.consistent && r.solved == r.closed_form;
  return r;
}

namespace {

// Modes of vacuum descendants acting on the module generated by a primary vector.
class PrimaryModeCalculus {
 public:
  PrimaryModeCalculus(const Rational& c, const Rational& h) : module_(c, h, false) {}

  // u_(n) s for a vacuum monomial u and a primary-module state s of relative degree `degree`.
  Combination mode(const VirasoroMonomial& u, long n, const Combination& s, int degree) {
    if (s.empty()) return {};
    if (u.empty()) return n == -1 ? s : Combination{};
    const long p = 1 - u.front();
    const VirasoroMonomial rest(u.begin() + 1, u.end());
    const int rest_weight = weight(rest);
    const long first_bound = degree + rest_weight - n - 1;
    const long bound = std::max<long>(first_bound, degree + 1);
    Combination out;
    for (long j = 0; j <= bound; ++j) {
      const Rational sign_binom = Rational(binomial(p, j)) * (j % 2 == 0 ? 1 : -1);
      if (j <= first_bound) {
        const Combination inner = mode(rest, n + j, s, degree);
        // omega_(p-j) = L(p-j-1)
        add_scaled(out, module_.apply(static_cast<int>(p - j - 1), inner), sign_binom);
      }
      if (j - 1 <= degree) {
        const Combination shifted = module_.apply(static_cast<int>(j - 1), s);
        const int shifted_degree = degree - static_cast<int>(j - 1);
        const Rational sign = p % 2 == 0 ? -1 : 1;
        add_scaled(out, mode(rest, p + n - j, shifted, shifted_degree), sign_binom * sign);
      }
    }
    return out;
  }

 private:
  HighestWeightModule module_;
};

}  // namespace

Rational descendant_zero_mode_trace_on_primaries(const VirasoroState& state, const Rational& d) {
  if (state.is_zero()) return 0;
  if (state.degree != 4) throw Error("the grade-preserving trace is implemented for degree-4 states only");
  PrimaryModeCalculus calc(state.central_charge, 1);
  const Combination primary{{{}, 1}};
  Rational per_vector = 0;
  for (const auto& [mono, coeff] : state.combination) {
    auto image = calc.mode(mono, 3, primary, 0);
    auto it = image.find({});
    if (it != image.end()) per_vector += coeff * it->second;
  }
  return per_vector * d;
}

nlohmann::json to_json(const VirasoroState& state) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : state.combination) terms.push_back({{"parts", m}, {"coefficient", to_string(c)}});
  return {{"degree", state.degree}, {"c", to_string(state.central_charge)}, {"terms", terms}};
}

nlohmann::json to_json(const CasimirReport& r) {
  return {{"c", to_string(r.c)},
          {"d", to_string(r.d)},
          {"n", r.n},
          {"solved", to_json(r.solved)},
          {"closed_form", to_json(r.closed_form)},
          {"consistent", r.consistent},
          {"matches", r.matches}};
}

nlohmann::json to_json(const GramRoots& r) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& [x, m] : r.roots) roots.push_back({{"c", to_string(x)}, {"multiplicity", m}});
  return {{"degree", r.degree},
          {"roots", roots},
          {"residual_degree", r.residual_degree},
          {"leading_coefficient", to_string(r.leading_coefficient)}};
}

}  // namespace s4
