#include "s4/lie_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace s4 {

namespace {

using Column = SparseIntVector;
using Operator = std::vector<Column>;  // column b holds the image of basis vector b

Column normalize(const std::map<std::uint32_t, std::int64_t>& acc) {
  Column out;
  for (auto [i, c] : acc)
    if (c != 0) out.push_back({i, c});
  return out;
}

Column act(const Operator& a, const Column& v) {
  std::map<std::uint32_t, std::int64_t> acc;
  for (const auto& t : v)
    for (const auto& u : a[t.index]) acc[u.index] += t.coeff * u.coeff;
  return normalize(acc);
}

// (a b - b a) * sign / divisor, requiring exact division.
Operator commutator(const Operator& a, const Operator& b, std::int64_t sign, std::int64_t divisor) {
  Operator out(a.size());
  for (std::size_t col = 0; col < a.size(); ++col) {
    Column unit{{static_cast<std::uint32_t>(col), 1}};
    Column ab = act(a, act(b, unit));
    Column ba = act(b, act(a, unit));
    std::map<std::uint32_t, std::int64_t> acc;
    for (const auto& t : ab) acc[t.index] += t.coeff;
    for (const auto& t : ba) acc[t.index] -= t.coeff;
    for (auto& [i, c] : acc) {
      if (c % divisor != 0) throw Error("structure constant is not divisible by the string length");
      c = sign * c / divisor;
    }
    out[col] = normalize(acc);
  }
  return out;
}

std::string root_label(char prefix, const IntVector& beta) {
  std::string s(1, prefix);
  s += '[';
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(beta[i]);
  }
  return s + ']';
}

IntVector shifted(IntVector v, int i, int delta) {
  v[i] += delta;
  return v;
}

std::string describe(const LieAlgebra& g, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ", ";
    s += g.label(i);
    first = false;
  }
  return s + ")";
}

}  // namespace

LieAlgebra::LieAlgebra(RootSystem roots) : roots_(std::move(roots)) {
  dim_ = roots_.dimension();
  const std::size_t npos = roots_.positive_roots.size();
  labels_.resize(dim_);
  for (std::size_t k = 0; k < npos; ++k) {
    labels_[k] = root_label('e', roots_.positive_roots[k]);
    labels_[npos + roots_.rank + k] = root_label('f', roots_.positive_roots[k]);
  }
  for (int i = 0; i < roots_.rank; ++i) labels_[npos + i] = "h" + std::to_string(i + 1);
  build_brackets();
  build_form();
}

std::size_t LieAlgebra::root_vector(std::size_t positive_index, bool negative) const {
  return negative ? positive_root_count() + static_cast<std::size_t>(rank()) + positive_index : positive_index;
}

Rational LieAlgebra::central_charge_level1() const {
  return fraction(static_cast<long>(dim_), 1 + dual_coxeter());
}

// Structure constants by induction on height. For beta of height >= 2 let i0 be the
// smallest index with gamma0 = beta - alpha_i0 a root, and set
// e_beta = [e_i0, e_gamma0] / (p0 + 1). Negative root vectors are e_{-beta} = -omega(e_beta)
// for the Chevalley involution omega.
void LieAlgebra::build_brackets() {
  const RootSystem& rs = roots_;
  const int r = rs.rank;
  const std::size_t npos = rs.positive_roots.size();
  auto pos = [&](std::size_t k) { return static_cast<std::uint32_t>(k); };
  auto cart = [&](int i) { return static_cast<std::uint32_t>(npos + i); };
  auto neg = [&](std::size_t k) { return static_cast<std::uint32_t>(npos + r + k); };
  auto index = [&](const IntVector& v) { return rs.positive_index(v); };
  auto simple = [&](int i) {
    IntVector e(r, 0);
    e[i] = 1;
    return e;
  };
  auto string_below = [&](const IntVector& beta, int i) {
    int p = 0;
    IntVector v = beta;
    while (true) {
      v[i] -= 1;
      if (!index(v)) return p;
      ++p;
    }
  };

  // E[i][k]: [e_i, e_gamma_k] = E e_{gamma_k + alpha_i}; F[j][k]: [f_j, e_beta_k] = F e_{beta_k - alpha_j}.
  std::vector<std::vector<std::int64_t>> E(r, std::vector<std::int64_t>(npos, 0));
  std::vector<std::vector<std::int64_t>> F(r, std::vector<std::int64_t>(npos, 0));
  std::vector<int> first_index(npos, -1);
  std::vector<std::size_t> first_rest(npos, 0);
  std::vector<std::int64_t> first_scale(npos, 1);

  for (std::size_t k = 0; k < npos; ++k) {
    const IntVector& beta = rs.positive_roots[k];
    if (height(beta) < 2) continue;
    int i0 = -1;
    for (int i = 0; i < r && i0 < 0; ++i)
      if (index(shifted(beta, i, -1))) i0 = i;
    const IntVector gamma0 = shifted(beta, i0, -1);
    const std::size_t g0 = *index(gamma0);
    const std::int64_t p0 = string_below(gamma0, i0);
    first_index[k] = i0;
    first_rest[k] = g0;
    first_scale[k] = p0 + 1;
    E[i0][g0] = p0 + 1;

    for (int j = 0; j < r; ++j) {
      std::int64_t term = 0;
      if (j == i0) term -= rs.coroot_pairing(gamma0, i0);
      if (gamma0 == simple(j)) {
        term += rs.cartan[j][i0];
      } else if (auto delta = index(shifted(gamma0, j, -1))) {
        if (index(shifted(*&rs.positive_roots[*delta], i0, 1))) term += F[j][g0] * E[i0][*delta];
      }
      if (index(shifted(beta, j, -1))) {
        if (term % (p0 + 1) != 0) throw Error("inconsistent lowering constant for " + root_label('e', beta));
        F[j][k] = term / (p0 + 1);
        if (F[j][k] == 0) throw Error("vanishing lowering constant for " + root_label('e', beta));
      } else if (term != 0) {
        throw Error("lowering " + root_label('e', beta) + " leaves the root system");
      }
    }

    for (int i = 0; i < r; ++i) {
      if (i == i0) continue;
      auto gi = index(shifted(beta, i, -1));
      if (!gi) continue;
      const IntVector& gamma = rs.positive_roots[*gi];
      std::int64_t lhs = 0;
      if (gamma == simple(i0)) {
        lhs = rs.cartan[i0][i];
      } else if (auto lower = index(shifted(gamma, i0, -1))) {
        lhs = F[i0][*gi] * E[i][*lower];
      }
      if (lhs % F[i0][k] != 0) throw Error("inconsistent raising constant for " + root_label('e', beta));
      std::int64_t c = lhs / F[i0][k];
      if (std::llabs(c) != string_below(gamma, i) + 1)
        throw Error("raising constant for " + root_label('e', beta) + " is not +-(p+1)");
      E[i][*gi] = c;
    }
  }

  std::vector<Operator> ops(dim_, Operator(dim_));
  for (int i = 0; i < r; ++i) {
    const IntVector ai = simple(i);
    const std::size_t si = *index(ai);
    Operator& e = ops[pos(si)];
    Operator& f = ops[neg(si)];
    Operator& h = ops[cart(i)];
    for (std::size_t k = 0; k < npos; ++k) {
      const IntVector& beta = rs.positive_roots[k];
      if (auto up = index(shifted(beta, i, 1))) {
        e[pos(k)] = {{pos(*up), E[i][k]}};
        f[neg(k)] = {{neg(*up), -E[i][k]}};
      }
      if (beta == ai) {
        e[neg(k)] = {{cart(i), 1}};
        f[pos(k)] = {{cart(i), -1}};
      } else if (auto down = index(shifted(beta, i, -1))) {
        e[neg(k)] = {{neg(*down), -F[i][k]}};
        f[pos(k)] = {{pos(*down), F[i][k]}};
      }
      const std::int64_t pairing = rs.coroot_pairing(beta, i);
      if (pairing != 0) {
        h[pos(k)] = {{pos(k), pairing}};
        h[neg(k)] = {{neg(k), -pairing}};
      }
    }
    for (int j = 0; j < r; ++j) {
      if (rs.cartan[j][i] == 0) continue;
      e[cart(j)] = {{pos(si), -rs.cartan[j][i]}};
      f[cart(j)] = {{neg(si), rs.cartan[j][i]}};
    }
  }
  for (std::size_t k = 0; k < npos; ++k) {
    if (first_index[k] < 0) continue;
    const std::size_t si = *index(simple(first_index[k]));
    const std::size_t g0 = first_rest[k];
    ops[pos(k)] = commutator(ops[pos(si)], ops[pos(g0)], 1, first_scale[k]);
    ops[neg(k)] = commutator(ops[neg(si)], ops[neg(g0)], -1, first_scale[k]);
  }

  table_.assign(dim_ * dim_, {});
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b) table_[a * dim_ + b] = std::move(ops[a][b]);

  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b) {
      const auto& x = table_[a * dim_ + b];
      const auto& y = table_[b * dim_ + a];
      bool ok = x.size() == y.size();
      for (std::size_t t = 0; ok && t < x.size(); ++t) ok = x[t].index == y[t].index && x[t].coeff == -y[t].coeff;
      if (!ok) throw Error("bracket table of " + rs.type.label() + " is not antisymmetric at " + describe(*this, {a, b}));
    }
}

void LieAlgebra::build_form() {
  const RootSystem& rs = roots_;
  const int r = rs.rank;
  const std::size_t npos = rs.positive_roots.size();
  form_rows_.assign(dim_, {});
  for (std::size_t k = 0; k < npos; ++k) {
    Rational v = 2 / rs.norm2(rs.positive_roots[k]);
    form_rows_[k].push_back({static_cast<std::uint32_t>(npos + r + k), v});
    form_rows_[npos + r + k].push_back({static_cast<std::uint32_t>(k), v});
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rational v = 4 * rs.gram(i, j) / (rs.gram(i, i) * rs.gram(j, j));
      if (v != 0) form_rows_[npos + i].push_back({static_cast<std::uint32_t>(npos + j), v});
    }
}

Rational LieAlgebra::form(std::size_t a, std::size_t b) const {
  for (const auto& e : form_rows_[a])
    if (e.index == b) return e.value;
  return 0;
}

Rational LieAlgebra::form(const Vector& x, const Vector& y) const {
  Rational s = 0;
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a] == 0) continue;
    for (const auto& e : form_rows_[a])
      if (y[e.index] != 0) s += x[a] * e.value * y[e.index];
  }
  return s;
}

Matrix LieAlgebra::form_matrix() const {
  Matrix m(dim_, dim_);
  for (std::size_t a = 0; a < dim_; ++a)
    for (const auto& e : form_rows_[a]) m(a, e.index) = e.value;
  return m;
}

Vector LieAlgebra::basis_vector(std::size_t a) const {
  Vector v(dim_);
  v[a] = 1;
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error("bracket: dimension mismatch");
  Vector out(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (y[b] == 0) continue;
      const auto& terms = table_[a * dim_ + b];
      if (terms.empty()) continue;
      Rational xy = x[a] * y[b];
      for (const auto& t : terms) out[t.index] += xy * t.coeff;
    }
  }
  return out;
}

Matrix LieAlgebra::ad_matrix(const Vector& x) const {
  if (x.size() != dim_) throw Error("ad: dimension mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b)
      for (const auto& t : table_[a * dim_ + b]) m(t.index, b) += x[a] * t.coeff;
  }
  return m;
}

LieAlgebra build_chevalley(const RootSystem& rs) { return LieAlgebra(rs); }

namespace {

std::int64_t coefficient(const SparseIntVector& v, std::size_t index) {
  for (const auto& t : v)
    if (t.index == index) return t.coeff;
  return 0;
}

// Integer form scaled by a common denominator.
struct ScaledForm {
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;
  std::int64_t scale = 1;
};

ScaledForm scaled_form(const LieAlgebra& g) {
  Integer l = 1;
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (const auto& e : g.form_row(a)) l = lcm(l, e.value.get_den());
  ScaledForm f;
  f.scale = l.get_si();
  f.rows.resize(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (const auto& e : g.form_row(a)) {
      Rational v = e.value * l;
      f.rows[a].emplace_back(e.index, v.get_num().get_si());
    }
  return f;
}

std::int64_t scaled_pairing(const ScaledForm& f, const SparseIntVector& x, std::size_t b) {
  std::int64_t s = 0;
  for (const auto& t : x)
    for (auto [j, v] : f.rows[t.index])
      if (j == b) s += t.coeff * v;
  return s;
}

}  // namespace

bool check_killing_relation(const LieAlgebra& g, std::optional<std::string>* counterexample) {
  const std::size_t d = g.dim();
  const ScaledForm f = scaled_form(g);
  const std::int64_t two_h = 2 * g.dual_coxeter();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      std::int64_t tr = 0;
      for (std::size_t e = 0; e < d; ++e)
        for (const auto& t : g.bracket(b, e)) tr += t.coeff * coefficient(g.bracket(a, t.index), e);
      std::int64_t phi = 0;
      for (auto [j, v] : f.rows[a])
        if (j == b) phi = v;
      if (tr * f.scale != two_h * phi) {
        if (counterexample) *counterexample = "Killing relation fails at " + describe(g, {a, b});
        return false;
      }
    }
  return true;
}

StructureCheck check_structure(const LieAlgebra& g) {
  StructureCheck report;
  const std::size_t d = g.dim();
  auto fail = [&](bool& flag, std::string what) {
    flag = false;
    if (!report.counterexample) report.counterexample = std::move(what);
  };

  for (std::size_t a = 0; a < d && report.antisymmetry; ++a)
    for (std::size_t b = a; b < d; ++b) {
      const auto& x = g.bracket(a, b);
      const auto& y = g.bracket(b, a);
      bool ok = x.size() == y.size();
      for (std::size_t t = 0; ok && t < x.size(); ++t) ok = x[t].index == y[t].index && x[t].coeff == -y[t].coeff;
      if (!ok) {
        fail(report.antisymmetry, "antisymmetry fails at " + describe(g, {a, b}));
        break;
      }
    }

  std::vector<std::int64_t> acc(d, 0);
  std::vector<std::uint32_t> touched;
  auto add = [&](std::size_t x, const SparseIntVector& inner, std::int64_t sign) {
    for (const auto& t : inner)
      for (const auto& u : g.bracket(x, t.index)) {
        if (acc[u.index] == 0) touched.push_back(u.index);
        acc[u.index] += sign * t.coeff * u.coeff;
      }
  };
  for (std::size_t a = 0; a < d && report.jacobi; ++a)
    for (std::size_t b = a + 1; b < d && report.jacobi; ++b)
      for (std::size_t c = b + 1; c < d; ++c) {
        add(a, g.bracket(b, c), 1);
        add(b, g.bracket(c, a), 1);
        add(c, g.bracket(a, b), 1);
        bool zero = true;
        for (auto i : touched) {
          if (acc[i] != 0) zero = false;
          acc[i] = 0;
        }
        touched.clear();
        ++report.triples_checked;
        if (!zero) {
          fail(report.jacobi, "Jacobi identity fails at " + describe(g, {a, b, c}));
          break;
        }
      }

  const ScaledForm f = scaled_form(g);
  for (std::size_t a = 0; a < d && report.invariance; ++a)
    for (std::size_t b = 0; b < d && report.invariance; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        // phi([x_a, x_b], x_c) + phi(x_b, [x_a, x_c])
        std::int64_t s = scaled_pairing(f, g.bracket(a, b), c) + scaled_pairing(f, g.bracket(a, c), b);
        if (s != 0) {
          fail(report.invariance, "invariance fails at " + describe(g, {a, b, c}));
          break;
        }
      }

  std::optional<std::string> killing;
  if (!check_killing_relation(g, &killing)) fail(report.killing, *killing);
  return report;
}

namespace {

struct Overflow {};

// Sparse row-major integer matrix of ad(x) for x scaled to integer coordinates.
struct IntOperator {
  std::vector<std::size_t> row_start;
  std::vector<std::uint32_t> cols;
  std::vector<Integer> values;
  Integer denominator = 1;
};

IntOperator int_ad(const LieAlgebra& g, const Vector& x) {
  const std::size_t d = g.dim();
  if (x.size() != d) throw Error("trace: argument dimension " + std::to_string(x.size()) + " does not match dim " +
                                 std::to_string(d));
  IntOperator op;
  for (const auto& v : x) op.denominator = lcm(op.denominator, v.get_den());
  std::vector<std::map<std::uint32_t, Integer>> rows(d);
  for (std::size_t a = 0; a < d; ++a) {
    if (x[a] == 0) continue;
    Integer xa = Rational(x[a] * op.denominator).get_num();
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& t : g.bracket(a, b)) rows[t.index][static_cast<std::uint32_t>(b)] += xa * t.coeff;
  }
  op.row_start.push_back(0);
  for (std::size_t r = 0; r < d; ++r) {
    for (auto& [c, v] : rows[r])
      if (v != 0) {
        op.cols.push_back(c);
        op.values.push_back(v);
      }
    op.row_start.push_back(op.cols.size());
  }
  return op;
}

using Wide = __int128;
constexpr Wide kVectorLimit = Wide{1} << 90;
constexpr long kEntryLimit = 1L << 20;

Integer to_integer(Wide v) {
  bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  Integer hi = static_cast<unsigned long>(u >> 64);
  Integer lo = static_cast<unsigned long>(u & ~std::uint64_t{0});
  Integer out = (hi << 64) + lo;
  return negative ? Integer(-out) : out;
}

Integer fold_trace_wide(std::span<const IntOperator> ops, std::size_t d) {
  struct WideOp {
    const IntOperator* op;
    std::vector<long> values;
  };
  std::vector<WideOp> wide;
  for (const auto& op : ops) {
    WideOp w{&op, {}};
    for (const auto& v : op.values) {
      if (!v.fits_slong_p() || v.get_si() > kEntryLimit || v.get_si() < -kEntryLimit) throw Overflow{};
      w.values.push_back(v.get_si());
    }
    wide.push_back(std::move(w));
  }
  if (d > 4096) throw Overflow{};
  Wide trace = 0;
  std::vector<Wide> v(d), next(d);
  const std::size_t m = ops.size();
  for (std::size_t b = 0; b < d; ++b) {
    std::fill(v.begin(), v.end(), 0);
    v[b] = 1;
    for (std::size_t k = m; k-- > 0;) {
      const auto& op = *wide[k].op;
      const auto& vals = wide[k].values;
      for (std::size_t r = 0; r < d; ++r) {
        Wide s = 0;
        for (std::size_t t = op.row_start[r]; t < op.row_start[r + 1]; ++t)
          if (v[op.cols[t]] != 0) s += vals[t] * v[op.cols[t]];
        if (s >= kVectorLimit || s <= -kVectorLimit) throw Overflow{};
        next[r] = s;
      }
      std::swap(v, next);
    }
    trace += v[b];
  }
  return to_integer(trace);
}

Integer fold_trace_exact(std::span<const IntOperator> ops, std::size_t d) {
  Integer trace = 0;
  std::vector<Integer> v(d), next(d);
  for (std::size_t b = 0; b < d; ++b) {
    std::fill(v.begin(), v.end(), Integer(0));
    v[b] = 1;
    for (std::size_t k = ops.size(); k-- > 0;) {
      const auto& op = ops[k];
      for (std::size_t r = 0; r < d; ++r) {
        Integer s = 0;
        for (std::size_t t = op.row_start[r]; t < op.row_start[r + 1]; ++t)
          if (v[op.cols[t]] != 0) s += op.values[t] * v[op.cols[t]];
        next[r] = s;
      }
      std::swap(v, next);
    }
    trace += v[b];
  }
  return trace;
}

Rational trace_of(std::span<const IntOperator> ops, std::size_t d) {
  Integer denominator = 1;
  for (const auto& op : ops) denominator *= op.denominator;
  Integer numerator;
  try {
    numerator = fold_trace_wide(ops, d);
  } catch (const Overflow&) {
    numerator = fold_trace_exact(ops, d);
  }
  return fraction(numerator, denominator);
}

}  // namespace

Rational trace_ad_product(const LieAlgebra& g, std::span<const Vector> args) {
  if (args.empty()) throw Error("trace: at least one argument is required");
  std::vector<IntOperator> ops;
  ops.reserve(args.size());
  for (const auto& x : args) ops.push_back(int_ad(g, x));
  Rational t = trace_of(ops, g.dim());
  t.canonicalize();
  return t;
}

Rational trace_formula_rhs(const LieAlgebra& g, const Rational& c, const Rational& d, std::span<const Vector> args,
                           int order) {
  if (order < 2 || order > 4) throw Error("trace formula order must be 2, 3 or 4");
  if (static_cast<int>(args.size()) != order)
    throw Error("trace formula of order " + std::to_string(order) + " needs " + std::to_string(order) + " arguments");
  if (c == 0) throw Error("trace formula undefined at excluded central charge c = 0");
  const Rational ratio = d / c - 1;
  if (order == 2) return 2 * ratio * g.form(args[0], args[1]);
  if (order == 3) return ratio * g.form(args[0], g.bracket(args[1], args[2]));
  const Rational denom = c * (22 + 5 * c);
  if (denom == 0) throw Error("trace formula undefined at excluded central charge c = -22/5");
  const Rational p = g.form(g.bracket(args[0], args[1]), g.bracket(args[2], args[3]));
  const Rational q = g.form(g.bracket(args[0], args[3]), g.bracket(args[1], args[2]));
  const Rational s = g.form(args[0], args[1]) * g.form(args[2], args[3]) +
                     g.form(args[0], args[2]) * g.form(args[1], args[3]) +
                     g.form(args[0], args[3]) * g.form(args[1], args[2]);
  const Rational k1 = 1 + 3 * d * (c - 2) / denom;
  const Rational k2 = 2 - 24 * d / denom;
  const Rational k3 = 24 * d / denom;
  Rational out = k1 * p + k2 * q + k3 * s;
  out.canonicalize();
  return out;
}

Vector random_small_vector(std::mt19937_64& rng, std::size_t dim) {
  Vector v(dim);
  for (auto& x : v) x = static_cast<long>(rng() % 5) - 2;
  return v;
}

namespace {

std::string render(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + "]";
}

class TraceChecker {
 public:
  TraceChecker(const LieAlgebra& g, TraceReport& report)
      : g_(g), report_(report), c_(g.central_charge_level1()), d_(static_cast<long>(g.dim())) {}

  void check(std::span<const Vector> args, std::span<const IntOperator> ops) {
    const int m = static_cast<int>(args.size());
    Rational lhs = trace_of(ops, g_.dim());
    Rational rhs = trace_formula_rhs(g_, c_, d_, args, m);
    if (lhs != rhs) fail("order " + std::to_string(m) + " formula", args, lhs, rhs);
    (m == 2 ? report_.pairs : m == 3 ? report_.triples : report_.quadruples)++;
    std::vector<IntOperator> reversed(ops.rbegin(), ops.rend());
    Rational back = trace_of(reversed, g_.dim());
    Rational expected = m % 2 == 0 ? lhs : Rational(-lhs);
    ++report_.symmetry_checks;
    if (back != expected) fail("reversal symmetry", args, back, expected);
  }

  void check_odd_powers(const Vector& x, const IntOperator& op) {
    for (int power : {1, 3, 5}) {
      std::vector<IntOperator> ops(static_cast<std::size_t>(power), op);
      Rational t = trace_of(ops, g_.dim());
      ++report_.symmetry_checks;
      if (t != 0) fail("odd power " + std::to_string(power) + " trace", std::vector<Vector>{x}, t, 0);
    }
  }

 private:
  void fail(const std::string& what, std::span<const Vector> args, const Rational& lhs, const Rational& rhs) {
    report_.passed = false;
    if (report_.counterexample) return;
    std::string s = what + " fails for (";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + render(args[i]);
    report_.counterexample = s + "): " + to_string(lhs) + " != " + to_string(rhs);
  }

  const LieAlgebra& g_;
  TraceReport& report_;
  Rational c_;
  Rational d_;
};

}  // namespace

TraceReport verify_trace_formulas(const LieAlgebra& g, const SamplerConfig& config) {
  TraceReport report;
  report.type = g.roots().type.label();
  report.seed = config.seed;
  const std::size_t d = g.dim();
  report.exhaustive = config.exhaustive.value_or(d * d * d * d <= 50000);
  TraceChecker checker(g, report);

  if (report.exhaustive) {
    std::vector<Vector> basis;
    std::vector<IntOperator> ads;
    for (std::size_t a = 0; a < d; ++a) {
      basis.push_back(g.basis_vector(a));
      ads.push_back(int_ad(g, basis.back()));
    }
    for (std::size_t a = 0; a < d; ++a) {
      checker.check_odd_powers(basis[a], ads[a]);
      for (std::size_t b = 0; b < d; ++b) {
        checker.check(std::vector<Vector>{basis[a], basis[b]}, std::vector<IntOperator>{ads[a], ads[b]});
        for (std::size_t c = 0; c < d; ++c) {
          checker.check(std::vector<Vector>{basis[a], basis[b], basis[c]},
                        std::vector<IntOperator>{ads[a], ads[b], ads[c]});
          for (std::size_t e = 0; e < d; ++e)
            checker.check(std::vector<Vector>{basis[a], basis[b], basis[c], basis[e]},
                          std::vector<IntOperator>{ads[a], ads[b], ads[c], ads[e]});
        }
      }
    }
    return report;
  }

  std::mt19937_64 rng(config.seed);
  for (std::size_t s = 0; s < config.samples; ++s) {
    std::vector<Vector> args;
    std::vector<IntOperator> ads;
    for (int k = 0; k < 4; ++k) {
      args.push_back(random_small_vector(rng, d));
      ads.push_back(int_ad(g, args.back()));
    }
    checker.check(std::span(args).first(2), std::span(ads).first(2));
    checker.check(std::span(args).first(3), std::span(ads).first(3));
    checker.check(args, ads);
    checker.check_odd_powers(args[0], ads[0]);
  }
  return report;
}

nlohmann::json to_json(const TraceReport& report) {
  nlohmann::json j{{"type", report.type},
                   {"exhaustive", report.exhaustive},
                   {"pairs", report.pairs},
                   {"triples", report.triples},
                   {"quadruples", report.quadruples},
                   {"symmetry_checks", report.symmetry_checks},
                   {"passed", report.passed}};
  if (!report.exhaustive) j["seed"] = report.seed;
  if (report.counterexample) j["counterexample"] = *report.counterexample;
  return j;
}

nlohmann::json to_json(const LieAlgebra& g) {
  return {{"type", g.roots().type.label()},
          {"dim", g.dim()},
          {"rank", g.rank()},
          {"dual_coxeter", g.dual_coxeter()},
          {"central_charge_level1", to_string(g.central_charge_level1())},
          {"basis", g.labels()}};
}

}  // namespace s4
