#include "s4/affine_fock.hpp"

#include <algorithm>
#include <functional>

namespace s4 {

namespace {

using Combination = std::map<FockMonomial, Rational>;

void add_to(Combination& into, const FockMonomial& m, const Rational& c) {
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

bool precedes(const FockMode& a, const FockMode& b) {
  return a.depth > b.depth || (a.depth == b.depth && a.index <= b.index);
}

FockState make_state(Combination comb, int degree) {
  FockState s;
  s.combination = std::move(comb);
  s.degree = degree;
  return s;
}

int sign_power(long k) { return k % 2 == 0 ? 1 : -1; }

int adjoint_factor(std::size_t modes) { return modes % 2 == 0 ? 1 : kAdjointSign; }

}  // namespace

Rational FockState::coefficient(const FockMonomial& m) const {
  auto it = combination.find(m);
  return it == combination.end() ? Rational(0) : it->second;
}

FockState& FockState::operator+=(const FockState& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) degree = other.degree;
  if (degree != other.degree) throw Error("adding Fock states of different degrees");
  add_scaled(combination, other.combination, 1);
  return *this;
}

FockState& FockState::operator-=(const FockState& other) { return *this += Rational(-1) * other; }

FockState& FockState::operator*=(const Rational& s) {
  if (s == 0) {
    combination.clear();
    return *this;
  }
  for (auto& [m, c] : combination) c *= s;
  return *this;
}

bool operator==(const FockState& a, const FockState& b) {
  return a.combination == b.combination && (a.combination.empty() || a.degree == b.degree);
}

AffineFock::AffineFock(const LieAlgebra& g) : g_(g), form_inverse_(inverse(g.form_matrix())) {}

FockState AffineFock::vacuum() const { return make_state({{{}, 1}}, 0); }

FockState AffineFock::weight_one(const Vector& x) const {
  Combination comb;
  for (std::size_t k = 0; k < x.size(); ++k) add_to(comb, {FockMode{1, static_cast<std::uint32_t>(k)}}, x[k]);
  return make_state(std::move(comb), 1);
}

std::string AffineFock::to_string(const FockState& s) const {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : s.combination) {
    if (!out.empty()) out += " + ";
    out += s4::to_string(c) + "*";
    for (const auto& mode : m) out += g_.label(mode.index) + "(-" + std::to_string(mode.depth) + ")";
    out += "1";
  }
  return out;
}

const Combination& AffineFock::apply_basis(std::uint32_t index, int n, const FockMonomial& m) {
  auto key = std::make_tuple(index, n, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Combination out;
  if (m.empty()) {
    if (n < 0) add_to(out, {FockMode{-n, index}}, 1);
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }
  const FockMode first = m.front();
  if (n < 0 && precedes(FockMode{-n, index}, first)) {
    FockMonomial next = m;
    next.insert(next.begin(), FockMode{-n, index});
    add_to(out, next, 1);
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }
  const FockMonomial rest(m.begin() + 1, m.end());
  // x_(n) y_(-k) = y_(-k) x_(n) + [x, y]_(n-k) + n (x|y) delta_{n,k}
  const Combination& inner = apply_basis(index, n, rest);
  for (const auto& [term, coeff] : inner) add_scaled(out, apply_basis(first.index, -first.depth, term), coeff);
  for (const auto& t : g_.bracket(index, first.index))
    add_scaled(out, apply_basis(t.index, n - first.depth, rest), Rational(t.coeff));
  if (n == first.depth) add_to(out, rest, g_.form(index, first.index) * n);
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

FockState AffineFock::apply_mode(std::size_t index, int n, const FockState& s) {
  Combination out;
  for (const auto& [m, c] : s.combination) add_scaled(out, apply_basis(static_cast<std::uint32_t>(index), n, m), c);
  return make_state(std::move(out), s.degree - n);
}

FockState AffineFock::apply_mode(const Vector& x, int n, const FockState& s) {
  Combination out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    for (const auto& [m, c] : s.combination)
      add_scaled(out, apply_basis(static_cast<std::uint32_t>(k), n, m), c * x[k]);
  }
  return make_state(std::move(out), s.degree - n);
}

FockState AffineFock::apply_L(int m, const FockState& s) {
  if (m < -1) throw Error("the primary commutation rule gives L(m) for m >= -1 only; use sugawara_L");
  FockState out = make_state({}, s.degree - m);
  for (const auto& [mono, coeff] : s.combination) {
    for (std::size_t i = 0; i < mono.size(); ++i) {
      // [L(m), x_(-k)] = k x_(m-k)
      FockState cur = vacuum();
      for (std::size_t k = mono.size(); k-- > 0;) {
        const int mode = k == i ? m - mono[k].depth : -mono[k].depth;
        cur = apply_mode(mono[k].index, mode, cur);
      }
      out += Rational(coeff * mono[i].depth) * cur;
    }
  }
  return out;
}

FockState AffineFock::dual_basis_state(std::size_t j) const {
  Vector x(g_.dim());
  for (std::size_t k = 0; k < g_.dim(); ++k) x[k] = form_inverse_(k, j);
  return weight_one(x);
}

FockState AffineFock::sugawara_L(int m, const FockState& s) {
  const int top = s.degree;
  FockState out = make_state({}, s.degree - m);
  for (std::size_t j = 0; j < g_.dim(); ++j) {
    Vector dual(g_.dim());
    for (std::size_t k = 0; k < g_.dim(); ++k) dual[k] = form_inverse_(k, j);
    for (int k = m - top; k <= -1; ++k) out += apply_mode(j, k, apply_mode(dual, m - k, s));
    for (int k = 0; k <= top; ++k) out += apply_mode(dual, m - k, apply_mode(j, k, s));
  }
  return fraction(1, 2 * (1 + g_.dual_coxeter())) * out;
}

FockState AffineFock::casimir_state(int i) {
  FockState out = make_state({}, i);
  for (std::size_t j = 0; j < g_.dim(); ++j) out += apply_mode(j, 1 - i, dual_basis_state(j));
  return out;
}

FockState AffineFock::casimir_state(int i, const Matrix& basis) {
  if (basis.rows() != g_.dim() || basis.cols() != g_.dim()) throw Error("a basis needs dim g rows of length dim g");
  const Matrix gram = basis * g_.form_matrix() * basis.transpose();
  const Matrix dual = inverse(gram) * basis;
  FockState out = make_state({}, i);
  for (std::size_t j = 0; j < g_.dim(); ++j) {
    Vector x(basis.row(j).begin(), basis.row(j).end());
    Vector y(dual.row(j).begin(), dual.row(j).end());
    out += apply_mode(x, 1 - i, weight_one(y));
  }
  return out;
}

FockState AffineFock::conformal_vector() {
  return fraction(1, 2 * (1 + g_.dual_coxeter())) * casimir_state(2);
}

FockState AffineFock::state_mode(const FockState& v, long n, const FockState& t) {
  std::function<FockState(const FockMonomial&, long, const FockState&)> mono_mode =
      [&](const FockMonomial& mono, long k, const FockState& target) -> FockState {
    if (target.is_zero()) return make_state({}, 0);
    if (mono.empty()) return k == -1 ? target : make_state({}, 0);
    const FockMode x = mono.front();
    const long p = -x.depth;
    const FockMonomial rest(mono.begin() + 1, mono.end());
    long rest_weight = 0;
    for (const auto& r : rest) rest_weight += r.depth;
    const long top = target.degree;
    const long first_bound = top + rest_weight - k - 1;
    FockState out = make_state({}, 0);
    // (x_(p) u)_(k) = sum_j (-1)^j C(p, j) (x_(p-j) u_(k+j) - (-1)^p u_(p+k-j) x_(j))
    for (long j = 0; j <= std::max(first_bound, top); ++j) {
      const Rational coef = Rational(binomial(p, j)) * sign_power(j);
      if (j <= first_bound) {
        FockState inner = mono_mode(rest, k + j, target);
        if (!inner.is_zero()) out += coef * apply_mode(x.index, static_cast<int>(p - j), inner);
      }
      if (j <= top) {
        FockState shifted = apply_mode(x.index, static_cast<int>(j), target);
        if (!shifted.is_zero()) out -= Rational(coef * sign_power(p)) * mono_mode(rest, p + k - j, shifted);
      }
    }
    return out;
  };
  FockState out = make_state({}, t.degree + v.degree - static_cast<int>(n) - 1);
  for (const auto& [mono, c] : v.combination) out += c * mono_mode(mono, n, t);
  return out;
}

Rational AffineFock::pairing(const FockState& a, const FockState& b) {
  if (a.is_zero() || b.is_zero() || a.degree != b.degree) return 0;
  Rational total = 0;
  for (const auto& [mono, coeff] : a.combination) {
    FockState cur = b;
    for (const auto& mode : mono) cur = apply_mode(mode.index, mode.depth, cur);
    total += coeff * cur.coefficient({}) * adjoint_factor(mono.size()) * kVacuumNorm;
  }
  return total;
}

std::vector<FockMonomial> AffineFock::pbw_basis(int degree) const {
  std::vector<FockMonomial> out;
  const auto dim = static_cast<std::uint32_t>(g_.dim());
  std::function<void(int, int, FockMonomial&)> rec = [&](int left, int max_depth, FockMonomial& cur) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int depth = std::min(left, max_depth); depth >= 1; --depth) {
      std::uint32_t start = 0;
      if (!cur.empty() && cur.back().depth == depth) start = cur.back().index;
      for (std::uint32_t idx = start; idx < dim; ++idx) {
        cur.push_back(FockMode{depth, idx});
        rec(left - depth, depth, cur);
        cur.pop_back();
      }
    }
  };
  FockMonomial cur;
  rec(degree, degree, cur);
  return out;
}

Matrix AffineFock::gram(int degree) {
  const auto basis = pbw_basis(degree);
  if (basis.size() > kFockBasisCap)
    throw Error("the degree-" + std::to_string(degree) + " PBW basis has " + std::to_string(basis.size()) +
                " elements, above the cap of " + std::to_string(kFockBasisCap));
  Matrix g(basis.size(), basis.size());
  std::vector<FockState> states;
  for (const auto& m : basis) states.push_back(make_state({{m, 1}}, degree));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = pairing(states[i], states[j]);
  return g;
}

Vector AffineFock::coordinates(const FockState& s) const {
  const auto basis = pbw_basis(s.degree);
  std::map<FockMonomial, std::size_t> where;
  for (std::size_t i = 0; i < basis.size(); ++i) where.emplace(basis[i], i);
  Vector v(basis.size());
  for (const auto& [m, c] : s.combination) {
    auto it = where.find(m);
    if (it == where.end()) throw Error("monomial is not in canonical PBW order");
    v[it->second] = c;
  }
  return v;
}

FockState AffineFock::from_virasoro(const VirasoroState& s) {
  FockState out = make_state({}, s.degree);
  for (const auto& [parts, c] : s.combination) {
    FockState cur = vacuum();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) cur = sugawara_L(-*it, cur);
    out += c * cur;
  }
  return out;
}

FockState casimir_state(AffineFock& fock, int i) { return fock.casimir_state(i); }

Matrix affine_gram(AffineFock& fock, int degree) { return fock.gram(degree); }

RadicalCertificate radical_membership(AffineFock& fock, const FockState& state) {
  RadicalCertificate cert;
  const auto basis = fock.pbw_basis(state.degree);
  cert.basis_size = basis.size();
  if (basis.size() > kFockBasisCap)
    throw Error("the degree-" + std::to_string(state.degree) + " PBW basis has " + std::to_string(basis.size()) +
                " elements, above the cap of " + std::to_string(kFockBasisCap));
  for (const auto& m : basis) {
    FockState u;
    u.combination[m] = 1;
    u.degree = state.degree;
    cert.residual.push_back(fock.pairing(u, state));
  }
  cert.in_radical = is_zero(cert.residual);
  return cert;
}

KappaIdentities check_kappa_identities(AffineFock& fock) {
  KappaIdentities k;
  k.c = fock.central_charge();
  k.d = static_cast<long>(fock.algebra().dim());
  const Rational& c = k.c;
  const Rational& d = k.d;
  const Rational x2 = 2 * d / c, x3 = d / c;
  const Rational x4 = 3 * d * (c + 2) / (2 * c * (5 * c + 22));
  const Rational y4 = 12 * d / (c * (5 * c + 22));

  const FockState kappa2 = fock.casimir_state(2);
  const FockState kappa3 = fock.casimir_state(3);
  const FockState omega = fock.from_virasoro(vacuum_monomial(c, {2}));
  k.kappa1_zero = fock.casimir_state(1).is_zero();
  k.kappa2_is_multiple_of_omega = kappa2 == x2 * omega;
  k.kappa3_is_half_translate_kappa2 = Rational(2) * kappa3 == fock.translate(kappa2);
  k.kappa3_matches_closed_form = kappa3 == x3 * fock.translate(omega);
  const FockState t2omega = fock.translate(fock.translate(omega));
  const FockState omega_omega = fock.sugawara_L(-2, omega);
  const FockState difference = fock.casimir_state(4) - (x4 * t2omega + y4 * omega_omega);
  k.kappa4_difference = radical_membership(fock, difference);
  return k;
}

bool lemma_A1_holds(AffineFock& fock, const Vector& x, const Vector& a, int q, const FockState& s) {
  const FockState lhs = fock.apply_mode(x, q, fock.apply_mode(a, 0, s));
  const FockState a1x = fock.apply_mode(a, 1, fock.weight_one(x));
  FockState rhs = fock.state_mode(a1x, q - 1, s);
  rhs += fock.apply_mode(x, q - 1, fock.apply_mode(a, 1, s));
  rhs += fock.apply_mode(a, 0, fock.apply_mode(x, q, s));
  rhs -= fock.apply_mode(a, 1, fock.apply_mode(x, q - 1, s));
  return lhs == rhs;
}

FockState random_fock_state(const AffineFock& fock, std::mt19937_64& rng, int degree) {
  const auto basis = fock.pbw_basis(degree);
  FockState s;
  s.degree = degree;
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    const auto& m = basis[rng() % basis.size()];
    const long coeff = static_cast<long>(rng() % 5) - 2;
    s += Rational(coeff) * FockState{{{m, 1}}, degree};
  }
  return s;
}

LemmaA1Report verify_lemma_A1(AffineFock& fock, std::size_t samples, std::uint64_t seed) {
  LemmaA1Report r;
  r.type = fock.algebra().roots().type.label();
  r.seed = seed;
  std::mt19937_64 rng(seed);
  const std::size_t dim = fock.algebra().dim();
  for (std::size_t i = 0; i < samples; ++i) {
    const Vector x = random_small_vector(rng, dim);
    const Vector a = random_small_vector(rng, dim);
    const int q = static_cast<int>(rng() % 5) - 2;
    const int degree = static_cast<int>(rng() % 4);
    const FockState s = random_fock_state(fock, rng, degree);
    ++r.samples;
    if (!lemma_A1_holds(fock, x, a, q, s)) {
      r.passed = false;
      r.counterexample = "sample " + std::to_string(i) + ": q = " + std::to_string(q) + ", state " + fock.to_string(s);
      break;
    }
  }
  return r;
}

FormInvariants form_invariants(const LieAlgebra& g, const std::vector<Vector>& a) {
  if (a.size() != 4) throw Error("four elements are required");
  FormInvariants f;
  f.P = g.form(g.bracket(a[0], a[1]), g.bracket(a[2], a[3]));
  f.Q = g.form(g.bracket(a[0], a[3]), g.bracket(a[1], a[2]));
  f.S = g.form(a[0], a[1]) * g.form(a[2], a[3]) + g.form(a[0], a[2]) * g.form(a[1], a[3]) +
        g.form(a[0], a[3]) * g.form(a[1], a[2]);
  return f;
}

namespace {

FockState product_state(AffineFock& fock, const std::vector<Vector>& a) {
  FockState v = fock.weight_one(a[3]);
  for (std::size_t k = 3; k-- > 0;) v = fock.apply_mode(a[k], -1, v);
  return v;
}

}  // namespace

ProjectionResult appendix_b_projection(AffineFock& fock, const std::vector<Vector>& a) {
  ProjectionResult r;
  const LieAlgebra& g = fock.algebra();
  r.invariants = form_invariants(g, a);
  const Rational c = fock.central_charge();
  const Rational denom = c * (5 * c + 22);
  if (denom == 0) throw Error("the Virasoro Gram matrix at degree 4 is singular");

  const FockState v = product_state(fock, a);
  // <v, L(-4) 1> = <L(4) v, 1> and <v, L(-2)^2 1> = <L(2) L(2) v, 1>.
  const Rational b1 = fock.apply_L(4, v).coefficient({}) * kVacuumNorm;
  const Rational b2 = fock.apply_L(2, fock.apply_L(2, v)).coefficient({}) * kVacuumNorm;
  Matrix gram = gram_matrix(4, c);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) gram(i, j) *= kVacuumNorm;
  auto sol = solve(gram, Vector{b1, b2});
  if (sol.status != SolveStatus::unique) throw Error("the Virasoro Gram matrix at degree 4 is singular");
  r.Z1 = sol.solution[0];
  r.Z2 = sol.solution[1];

  const auto& [P, Q, S] = r.invariants;
  r.Z1_closed = ((c + 14) * P + 12 * Q - 12 * S) / denom;
  r.Z2_closed = (-16 * P - 20 * Q + 20 * S) / denom;
  r.matches = r.Z1 == r.Z1_closed && r.Z2 == r.Z2_closed;
  return r;
}

TraceDecomposition trace_decomposition_check(AffineFock& fock, const std::vector<Vector>& a) {
  TraceDecomposition r;
  const LieAlgebra& g = fock.algebra();
  const Rational c = fock.central_charge();
  const Rational d = static_cast<long>(g.dim());
  r.invariants = form_invariants(g, a);
  r.ad_trace = trace_ad_product(g, a);

  const FockState v = product_state(fock, a);
  for (std::size_t b = 0; b < g.dim(); ++b) {
    const FockState image = fock.state_mode(v, 3, fock.weight_one(g.basis_vector(b)));
    r.mode_trace += image.coefficient({FockMode{1, static_cast<std::uint32_t>(b)}});
  }
  r.decomposition_balances = r.ad_trace == r.mode_trace + r.invariants.P + 2 * r.invariants.Q;

  const auto projection = appendix_b_projection(fock, a);
  r.projected_trace = projection.Z1 * descendant_zero_mode_trace_on_primaries(vacuum_monomial(c, {4}), d) +
                      projection.Z2 * descendant_zero_mode_trace_on_primaries(vacuum_monomial(c, {2, 2}), d);
  r.design_trace_matches = r.projected_trace == r.mode_trace;
  r.theorem_rhs = trace_formula_rhs(g, c, d, a, 4);
  r.theorem_holds = r.ad_trace == r.theorem_rhs &&
                    r.projected_trace + r.invariants.P + 2 * r.invariants.Q == r.theorem_rhs;
  return r;
}

AppendixBReport verify_appendix_b(AffineFock& fock, std::size_t samples, std::uint64_t seed) {
  AppendixBReport r;
  const LieAlgebra& g = fock.algebra();
  r.type = g.roots().type.label();
  r.seed = seed;
  const Rational c = fock.central_charge();
  const Rational d = static_cast<long>(g.dim());
  r.trace_L4 = descendant_zero_mode_trace_on_primaries(vacuum_monomial(c, {4}), d);
  r.trace_L22 = descendant_zero_mode_trace_on_primaries(vacuum_monomial(c, {2, 2}), d);
  r.descendant_traces_ok = r.trace_L4 == 3 * d && r.trace_L22 == 3 * d;

  std::mt19937_64 rng(seed);
  const Vector e = g.basis_vector(g.root_vector(0, false));
  const Vector f = g.basis_vector(g.root_vector(0, true));
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<Vector> a;
    if (i == 0) {
      a = {e, f, e, f};
    } else {
      for (int k = 0; k < 4; ++k) a.push_back(random_small_vector(rng, g.dim()));
    }
    ++r.samples;
    const auto projection = appendix_b_projection(fock, a);
    const auto decomposition = trace_decomposition_check(fock, a);
    if (!projection.matches) r.projections_ok = false;
    if (!decomposition.passed()) r.decompositions_ok = false;
    if (!projection.matches || !decomposition.passed()) {
      r.counterexample = "sample " + std::to_string(i);
      break;
    }
  }
  return r;
}

nlohmann::json to_json(const AffineFock& fock, const FockState& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : s.combination) {
    nlohmann::json modes = nlohmann::json::array();
    for (const auto& mode : m) modes.push_back({{"element", fock.algebra().label(mode.index)}, {"mode", -mode.depth}});
    terms.push_back({{"modes", modes}, {"coefficient", to_string(c)}});
  }
  return {{"degree", s.degree}, {"terms", terms}};
}

nlohmann::json to_json(const RadicalCertificate& c) {
  return {{"in_radical", c.in_radical}, {"basis_size", c.basis_size}, {"residual", to_strings(c.residual)}};
}

nlohmann::json to_json(const KappaIdentities& k) {
  return {{"c", to_string(k.c)},
          {"d", to_string(k.d)},
          {"kappa1_zero", k.kappa1_zero},
          {"kappa2_is_multiple_of_omega", k.kappa2_is_multiple_of_omega},
          {"kappa3_is_half_translate_kappa2", k.kappa3_is_half_translate_kappa2},
          {"kappa3_matches_closed_form", k.kappa3_matches_closed_form},
          {"kappa4_difference", to_json(k.kappa4_difference)},
          {"passed", k.passed()}};
}

nlohmann::json to_json(const LemmaA1Report& r) {
  nlohmann::json j = {{"type", r.type}, {"seed", r.seed}, {"samples", r.samples}, {"passed", r.passed}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

namespace {

nlohmann::json to_json(const FormInvariants& f) {
  return {{"P", to_string(f.P)}, {"Q", to_string(f.Q)}, {"S", to_string(f.S)}};
}

}  // namespace

nlohmann::json to_json(const ProjectionResult& r) {
  return {{"invariants", to_json(r.invariants)},
          {"Z1", to_string(r.Z1)},
          {"Z2", to_string(r.Z2)},
          {"Z1_closed", to_string(r.Z1_closed)},
          {"Z2_closed", to_string(r.Z2_closed)},
          {"matches", r.matches}};
}

nlohmann::json to_json(const TraceDecomposition& r) {
  return {{"ad_trace", to_string(r.ad_trace)},
          {"mode_trace", to_string(r.mode_trace)},
          {"invariants", to_json(r.invariants)},
          {"projected_trace", to_string(r.projected_trace)},
          {"theorem_rhs", to_string(r.theorem_rhs)},
          {"decomposition_balances", r.decomposition_balances},
          {"design_trace_matches", r.design_trace_matches},
          {"theorem_holds", r.theorem_holds},
          {"passed", r.passed()}};
}

nlohmann::json to_json(const AppendixBReport& r) {
  nlohmann::json j = {{"type", r.type},
                      {"seed", r.seed},
                      {"samples", r.samples},
                      {"trace_L4", to_string(r.trace_L4)},
                      {"trace_L22", to_string(r.trace_L22)},
                      {"descendant_traces_ok", r.descendant_traces_ok},
                      {"projections_ok", r.projections_ok},
                      {"decompositions_ok", r.decompositions_ok},
                      {"passed", r.passed()}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

}  // namespace s4
