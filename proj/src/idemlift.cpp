#include "partcat/idemlift.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "partcat/central.hpp"
#include "partcat/diagrams.hpp"

namespace partcat::idemlift {

using diagrams::Diagram;

namespace {

// Multiplication table of the diagram basis of P_{n,n}.
struct Table {
  int n = 0;
  std::vector<Diagram> basis;
  std::unordered_map<Diagram, int, diagrams::DiagramHash> index;
  std::vector<int> product;    // basis[i] o basis[j] at i * size + j
  std::vector<int> loops;
  std::vector<int> trace_exp;  // loops + trace components of the product

  size_t size() const { return basis.size(); }
};

std::mutex table_mutex;
std::map<int, std::unique_ptr<Table>> table_cache;

void check_arity(int n) {
  if (n < 0 || n > kMaxLiftArity)
    throw ResourceLimit("FP_" + std::to_string(n) + " exceeds the lifting cap n <= " +
                        std::to_string(kMaxLiftArity));
}

const Table& table(int n) {
  check_arity(n);
  std::lock_guard lock(table_mutex);
  auto& slot = table_cache[n];
  if (slot) return *slot;
  auto t = std::make_unique<Table>();
  t->n = n;
  t->basis = diagrams::all_diagrams(n, n);
  const size_t b = t->basis.size();
  for (size_t i = 0; i < b; ++i) t->index.emplace(t->basis[i], static_cast<int>(i));
  t->product.resize(b * b);
  t->loops.resize(b * b);
  t->trace_exp.resize(b * b);
  for (size_t i = 0; i < b; ++i) {
    for (size_t j = 0; j < b; ++j) {
      auto c = diagrams::compose_star(t->basis[i], t->basis[j]);
      const size_t k = i * b + j;
      t->product[k] = t->index.at(c.diagram);
      t->loops[k] = c.loops;
      t->trace_exp[k] = c.loops + diagrams::trace_components(c.diagram);
    }
  }
  slot = std::move(t);
  return *slot;
}

template <class S>
using Dense = std::vector<S>;

template <class S>
Dense<S> to_dense(const Table& tb, const Element<S>& a, const S& zero) {
  if (a.n() != tb.n || a.m() != tb.n) throw ArityMismatch("element is not in FP_" + std::to_string(tb.n));
  Dense<S> v(tb.size(), zero);
  for (const auto& [d, c] : a.terms()) v[tb.index.at(d)] = c;
  return v;
}

template <class S>
Element<S> from_dense(const Table& tb, const Dense<S>& v) {
  Element<S> out(tb.n, tb.n);
  for (size_t i = 0; i < v.size(); ++i) out.add(tb.basis[i], v[i]);
  return out;
}

template <class S>
Dense<S> multiply(const Table& tb, const Dense<S>& g, const Dense<S>& f, partalg::PowerTable<S>& tp,
                  const S& zero) {
  const size_t b = tb.size();
  Dense<S> out(b, zero);
  for (size_t i = 0; i < b; ++i) {
    if (scalars::is_zero(g[i])) continue;
    for (size_t j = 0; j < b; ++j) {
      if (scalars::is_zero(f[j])) continue;
      const size_t k = i * b + j;
      const S& w = tp(tb.loops[k]);
      if (scalars::is_zero(w)) continue;
      S c = g[i] * f[j];
      if (tb.loops[k]) c *= w;
      out[tb.product[k]] += c;
    }
  }
  return out;
}

int sign(const std::vector<int>& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

struct CenterData {
  CentralSeparator separator;
  std::vector<Dense<Polynomial>> z_powers;  // z^0 .. z^(M-1)
  // trace_vectors[k][i] = tr(basis[i] o z^k)
  std::vector<std::vector<Polynomial>> trace_vectors;
};

std::mutex center_mutex;
std::map<int, std::unique_ptr<CenterData>> center_cache;

CentralSeparator build_separator(int n) {
  CentralSeparator sep;
  sep.n = n;
  sep.candidates = young::partitions_up_to(n);
  std::vector<std::vector<Polynomial>> xi;
  for (const auto& nu : sep.candidates) {
    std::vector<Polynomial> row;
    for (int r = 2; r <= n + 1; ++r) row.push_back(central::xi_poly(nu, r));
    xi.push_back(std::move(row));
  }
  for (int attempt = 1; attempt <= 24; ++attempt) {
    std::vector<int> weights;
    for (int r = 2, w = 1; r <= n + 1; ++r, w *= attempt + 1) weights.push_back(w);
    std::vector<Polynomial> values;
    for (const auto& row : xi) {
      Polynomial v;
      for (size_t i = 0; i < row.size(); ++i) v += row[i] * Polynomial(static_cast<long>(weights[i]));
      values.push_back(v);
    }
    bool distinct = true;
    for (size_t i = 0; i < values.size() && distinct; ++i)
      for (size_t j = i + 1; j < values.size() && distinct; ++j) distinct = !(values[i] == values[j]);
    if (distinct) {
      sep.weights = std::move(weights);
      sep.values = std::move(values);
      return sep;
    }
  }
  throw SeparationFailure("no combination of omega^r separates the simple objects of FP_" +
                          std::to_string(n));
}

const CenterData& center(int n) {
  const Table& tb = table(n);
  std::lock_guard lock(center_mutex);
  auto& slot = center_cache[n];
  if (slot) return *slot;
  auto data = std::make_unique<CenterData>();
  data->separator = build_separator(n);
  const Polynomial zero;
  Element<Polynomial> z(n, n);
  for (int r = 2; r <= n + 1; ++r) {
    auto w = central::omega(n, r).value;
    w *= Polynomial(static_cast<long>(data->separator.weights[r - 2]));
    z += w;
  }
  Dense<Polynomial> z_dense = to_dense(tb, z, zero);
  partalg::PowerTable<Polynomial> tp(Polynomial::t());
  data->z_powers.push_back(to_dense(tb, partalg::identity(n, Polynomial(1)), zero));
  const size_t m = data->separator.candidates.size();
  for (size_t k = 1; k < m; ++k)
    data->z_powers.push_back(multiply(tb, data->z_powers.back(), z_dense, tp, zero));
  const size_t b = tb.size();
  for (const auto& zk : data->z_powers) {
    std::vector<Polynomial> tv(b);
    for (size_t i = 0; i < b; ++i) {
      std::vector<Rational> acc;
      for (size_t j = 0; j < b; ++j) {
        const auto& c = zk[j].coeffs();
        if (c.empty()) continue;
        const int shift = tb.trace_exp[i * b + j];
        if (acc.size() < c.size() + shift) acc.resize(c.size() + shift, Rational(0));
        for (size_t e = 0; e < c.size(); ++e) acc[e + shift] += c[e];
      }
      tv[i] = Polynomial(acc);
    }
    data->trace_vectors.push_back(std::move(tv));
  }
  slot = std::move(data);
  return *slot;
}

int candidate_index(const CentralSeparator& sep, const YoungDiagram& lambda) {
  auto it = std::find(sep.candidates.begin(), sep.candidates.end(), lambda);
  if (it == sep.candidates.end())
    throw std::invalid_argument(lambda.to_string() + " is not a simple object of FP_" + std::to_string(sep.n));
  return static_cast<int>(it - sep.candidates.begin());
}

// Coefficients in x of prod_{mu != lambda} (x - z_mu), and prod (z_lambda - z_mu).
std::pair<std::vector<Polynomial>, Polynomial> projector_polynomial(const CentralSeparator& sep, int li) {
  std::vector<Polynomial> q{Polynomial(1)};
  Polynomial den(1);
  for (size_t mi = 0; mi < sep.candidates.size(); ++mi) {
    if (static_cast<int>(mi) == li) continue;
    std::vector<Polynomial> next(q.size() + 1);
    for (size_t k = 0; k < q.size(); ++k) {
      next[k + 1] += q[k];
      next[k] -= q[k] * sep.values[mi];
    }
    q = std::move(next);
    den *= sep.values[li] - sep.values[mi];
  }
  return {q, den};
}

int series_order(const SeriesElement& a) {
  for (const auto& [d, c] : a.terms()) return c.order();
  return -1;
}

SeriesElement series_identity(int n, const Rational& t0, int order) {
  return SeriesElement(diagrams::identity_diagram(n), TruncatedSeries::constant(t0, order, 1));
}

Dense<Rational> check_idempotent(const Table& tb, const Element<Rational>& e, const Rational& t0) {
  auto v = to_dense(tb, e, Rational(0));
  partalg::PowerTable<Rational> tp(t0);
  if (multiply(tb, v, v, tp, Rational(0)) != v)
    throw NotIdempotent("element is not idempotent at t = " + scalars::to_string(t0));
  return v;
}

Dense<TruncatedSeries> lift_dense(const Table& tb, const Dense<Rational>& e, const Rational& t0, int order) {
  const TruncatedSeries zero(t0, order);
  Dense<TruncatedSeries> a;
  for (const auto& c : e) a.push_back(TruncatedSeries::constant(t0, order, c));
  partalg::PowerTable<TruncatedSeries> tp(TruncatedSeries::variable(t0, order));
  for (int iter = 0; iter < 64; ++iter) {
    auto a2 = multiply(tb, a, a, tp, zero);
    if (a2 == a) return a;
    auto a3 = multiply(tb, a2, a, tp, zero);
    for (size_t i = 0; i < a.size(); ++i) {
      a2[i] *= Rational(3);
      a3[i] *= Rational(2);
      a[i] = a2[i] - a3[i];
    }
  }
  throw InternalError("Newton iteration did not converge");
}

struct Attempt {
  bool resolved = false;
  std::vector<YoungDiagram> summands;
  TruncatedSeries trace{Rational(0), 1};
};

Attempt decompose_at(const Table& tb, const Dense<Rational>& e, const Rational& t0, int order) {
  const CenterData& cd = center(tb.n);
  const auto& sep = cd.separator;
  auto eps = lift_dense(tb, e, t0, order);
  std::vector<TruncatedSeries> traces;
  for (const auto& tv : cd.trace_vectors) {
    TruncatedSeries acc(t0, order);
    for (size_t i = 0; i < tb.size(); ++i) {
      if (eps[i].is_zero() || tv[i].is_zero()) continue;
      acc += eps[i] * TruncatedSeries::from_polynomial(tv[i], t0, order);
    }
    traces.push_back(acc);
  }
  Attempt out;
  out.trace = traces[0];
  TruncatedSeries check(t0, order);
  for (size_t li = 0; li < sep.candidates.size(); ++li) {
    auto [q, den] = projector_polynomial(sep, static_cast<int>(li));
    Polynomial p = young::p_poly(sep.candidates[li]);
    auto den_series = TruncatedSeries::from_polynomial(den * p, t0, order);
    TruncatedSeries num(t0, order);
    for (size_t k = 0; k < q.size(); ++k)
      num += TruncatedSeries::from_polynomial(q[k], t0, order) * traces[k];
    const int v = den_series.valuation();
    if (v >= order) return out;
    if (num.valuation() < v)
      throw SeparationFailure("multiplicity of " + sep.candidates[li].to_string() + " is not a power series");
    Rational m = num[v] / den_series[v];
    auto expected = den_series;
    expected *= m;
    if (!(expected == num) || !scalars::is_integer(m) || sgn(m) < 0)
      throw SeparationFailure("inconsistent multiplicity " + scalars::to_string(m) + " for " +
                              sep.candidates[li].to_string());
    const long count = m.get_num().get_si();
    for (long c = 0; c < count; ++c) out.summands.push_back(sep.candidates[li]);
    auto dim = TruncatedSeries::from_polynomial(p, t0, order);
    dim *= m;
    check += dim;
  }
  if (!(check == out.trace)) throw InternalError("summand dimensions do not add up to the trace");
  out.resolved = true;
  return out;
}

}  // namespace

Element<Rational> young_symmetrizer(const YoungDiagram& lambda) {
  const int n = lambda.size();
  if (n > kMaxSymmetrizerSize)
    throw ResourceLimit("Young symmetrizer size " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxSymmetrizerSize));
  // Row-reading tableau: row and column of each entry.
  std::vector<int> row_of, col_of;
  for (int r = 0; r < lambda.num_rows(); ++r)
    for (int c = 0; c < lambda.row(r); ++c) {
      row_of.push_back(r);
      col_of.push_back(c);
    }
  Element<Rational> rows(n, n), cols(n, n);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool keeps_rows = true, keeps_cols = true;
    for (int i = 0; i < n; ++i) {
      keeps_rows = keeps_rows && row_of[p[i]] == row_of[i];
      keeps_cols = keeps_cols && col_of[p[i]] == col_of[i];
    }
    if (keeps_rows) rows.add(diagrams::permutation_diagram(p), Rational(1));
    if (keeps_cols) cols.add(diagrams::permutation_diagram(p), Rational(sign(p)));
  } while (std::next_permutation(p.begin(), p.end()));
  auto c = partalg::compose(rows, cols, Rational(1));
  c *= scalars::make_rational(young::dimension(lambda), scalars::factorial(n));
  return c;
}

const CentralSeparator& central_separator(int n) { return center(n).separator; }

CentralProjector central_projector(const YoungDiagram& lambda, int n) {
  const Table& tb = table(n);
  const CenterData& cd = center(n);
  auto [q, den] = projector_polynomial(cd.separator, candidate_index(cd.separator, lambda));
  Dense<Polynomial> acc(tb.size());
  for (size_t k = 0; k < q.size(); ++k)
    for (size_t i = 0; i < tb.size(); ++i)
      if (!q[k].is_zero() && !cd.z_powers[k][i].is_zero()) acc[i] += q[k] * cd.z_powers[k][i];
  return {from_dense(tb, acc), den};
}

Element<RationalFunction> primitive_idempotent(const YoungDiagram& lambda) {
  const int n = lambda.size();
  const Table& tb = table(n);
  auto proj = central_projector(lambda, n);
  auto c = partalg::promote(young_symmetrizer(lambda), Polynomial(1));
  partalg::PowerTable<Polynomial> tp(Polynomial::t());
  const Polynomial zero;
  auto num = multiply(tb, to_dense(tb, c, zero), to_dense(tb, proj.numerator, zero), tp, zero);
  Element<RationalFunction> out(n, n);
  for (size_t i = 0; i < num.size(); ++i)
    if (!num[i].is_zero()) out.add(tb.basis[i], RationalFunction(num[i], proj.denominator));
  return out;
}

SeriesElement newton_lift(const Element<Rational>& e, const Rational& t0, int order) {
  if (e.n() != e.m()) throw ArityMismatch("idempotents live in FP_n");
  const Table& tb = table(e.n());
  auto v = check_idempotent(tb, e, t0);
  return from_dense(tb, lift_dense(tb, v, t0, order));
}

SeriesElement series_compose(const SeriesElement& g, const SeriesElement& f, const Rational& t0) {
  int order = std::max(series_order(g), series_order(f));
  if (order < 0) return SeriesElement(f.n(), g.m());
  auto t = TruncatedSeries::variable(t0, order);
  if (g.n() == g.m() && f.n() == f.m() && g.n() == f.n() && g.n() <= kMaxLiftArity) {
    const Table& tb = table(g.n());
    const TruncatedSeries zero(t0, order);
    partalg::PowerTable<TruncatedSeries> tp(t);
    return from_dense(tb, multiply(tb, to_dense(tb, g, zero), to_dense(tb, f, zero), tp, zero));
  }
  return partalg::compose(g, f, t);
}

TruncatedSeries series_trace(const SeriesElement& a, const Rational& t0) {
  int order = std::max(series_order(a), 1);
  return partalg::trace(a, TruncatedSeries::variable(t0, order));
}

SeriesElement series_inverse(const SeriesElement& a, const Rational& t0) {
  if (a.n() != a.m()) throw ArityMismatch("inverse of a non-square element");
  const int order = series_order(a);
  if (order < 0) throw NotAUnit("zero is not a unit");
  auto inv0 = partalg::inverse(partalg::at_zero(a), t0);
  if (!inv0) throw NotAUnit("reduction at u = 0 is not invertible");
  auto two = series_identity(a.n(), t0, order);
  two *= TruncatedSeries::constant(t0, order, 2);
  // Newton iteration b <- b (2 - a b); correct to twice as many terms each step.
  auto b = partalg::promote(*inv0, TruncatedSeries::constant(t0, order, 1));
  for (int iter = 0; iter < 64; ++iter) {
    auto next = series_compose(b, two - series_compose(a, b, t0), t0);
    if (next == b) return b;
    b = std::move(next);
  }
  throw InternalError("series inverse did not converge");
}

SeriesElement conjugator(const SeriesElement& eps1, const SeriesElement& eps2, const Rational& t0) {
  if (eps1.n() != eps2.n() || eps1.n() != eps1.m() || eps2.n() != eps2.m())
    throw ArityMismatch("conjugator needs idempotents of the same FP_n");
  if (!(partalg::at_zero(eps1) == partalg::at_zero(eps2)))
    throw NotAUnit("the idempotents have different reductions at u = 0");
  int order = std::max(series_order(eps1), series_order(eps2));
  if (order < 0) order = kDefaultOrder;
  auto one = series_identity(eps1.n(), t0, order);
  return series_compose(eps1, eps2, t0) + series_compose(one - eps1, one - eps2, t0);
}

LiftDecomposition lift_decompose(const Element<Rational>& e, const Rational& t0, int order,
                                 const std::string& source) {
  if (e.n() != e.m()) throw ArityMismatch("idempotents live in FP_n");
  if (order <= 0) throw std::invalid_argument("series order must be positive");
  const Table& tb = table(e.n());
  auto v = check_idempotent(tb, e, t0);
  for (int n_order = order;; n_order *= 2) {
    Attempt a = decompose_at(tb, v, t0, n_order);
    if (a.resolved) {
      LiftDecomposition out;
      out.n = e.n();
      out.source = source;
      out.t0 = t0;
      out.order = n_order;
      out.summands = std::move(a.summands);
      std::sort(out.summands.begin(), out.summands.end());
      out.trace_series = a.trace;
      return out;
    }
    if (n_order * 2 > kMaxOrder)
      throw OrderTooSmall("eigenvalue series collide modulo u^" + std::to_string(n_order));
  }
}

int common_summands(const LiftDecomposition& a, const LiftDecomposition& b) {
  std::map<YoungDiagram, int> count;
  for (const auto& l : a.summands) ++count[l];
  int total = 0;
  for (const auto& l : b.summands) {
    auto it = count.find(l);
    if (it != count.end()) total += it->second;
  }
  return total;
}

}  // namespace partcat::idemlift
