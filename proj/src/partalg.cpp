#include "partcat/partalg.hpp"

#include <mutex>
#include <shared_mutex>

#include "partcat/linalg.hpp"

namespace partcat::partalg {

using diagrams::all_diagrams;
using diagrams::compose_star;

Element<Rational> evaluate(const Element<Polynomial>& a, const Rational& t0) {
  return map_scalars<Rational>(a, [&](const Polynomial& p) { return p.eval(t0); });
}

Element<Rational> evaluate(const Element<RationalFunction>& a, const Rational& t0) {
  return map_scalars<Rational>(a, [&](const RationalFunction& f) { return scalars::ratfunc_eval(f, t0); });
}

Element<TruncatedSeries> to_series(const Element<Polynomial>& a, const Rational& t0, int order) {
  return map_scalars<TruncatedSeries>(
      a, [&](const Polynomial& p) { return TruncatedSeries::from_polynomial(p, t0, order); });
}

Element<Rational> at_zero(const Element<TruncatedSeries>& a) {
  return map_scalars<Rational>(a, [](const TruncatedSeries& s) { return s.at_zero(); });
}

namespace {

std::shared_mutex x_cache_mutex;
std::map<Diagram, Element<Rational>> x_cache;

// Mobius function of the partition lattice: merging the parts of pi into
// blocks of sizes k_i contributes prod (-1)^(k_i-1) (k_i-1)!.
Element<Rational> x_basis_mobius(const Diagram& pi) {
  const int a = pi.num_parts();
  Element<Rational> out(pi.n(), pi.m());
  std::vector<int> merge(a, 0);
  std::array<int, diagrams::kMaxVertices> labels;
  auto emit = [&](int blocks) {
    std::vector<int> sizes(blocks, 0);
    for (int i = 0; i < a; ++i) ++sizes[merge[i]];
    scalars::Integer coeff = 1;
    for (int k : sizes) {
      coeff *= scalars::factorial(k - 1);
      if ((k - 1) % 2) coeff = -coeff;
    }
    for (int v = 0; v < pi.size(); ++v) labels[v] = merge[pi.label(v)];
    out.add(Diagram::from_labels(pi.n(), pi.m(), labels.data()), Rational(coeff));
  };
  auto rec = [&](auto&& self, int i, int max_label) -> void {
    if (i == a) {
      emit(max_label + 1);
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      merge[i] = l;
      self(self, i + 1, std::max(max_label, l));
    }
  };
  if (a == 0) {
    emit(0);
  } else {
    rec(rec, 1, 0);
  }
  return out;
}

}  // namespace

const Element<Rational>& x_basis(const Diagram& pi) {
  {
    std::shared_lock lock(x_cache_mutex);
    auto it = x_cache.find(pi);
    if (it != x_cache.end()) return it->second;
  }
  Element<Rational> x = x_basis_mobius(pi);
  std::unique_lock lock(x_cache_mutex);
  return x_cache.try_emplace(pi, std::move(x)).first->second;
}

Element<Rational> x_basis_recursive(const Diagram& pi) {
  std::map<Diagram, Element<Rational>> memo;
  auto rec = [&](auto&& self, const Diagram& p) -> const Element<Rational>& {
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    Element<Rational> x(p, Rational(1));
    for (const auto& mu : diagrams::coarsenings(p))
      if (mu != p) x -= self(self, mu);
    return memo.emplace(p, std::move(x)).first->second;
  };
  return rec(rec, pi);
}

Element<Rational> from_permutation(const std::vector<int>& sigma) {
  return Element<Rational>(diagrams::permutation_diagram(sigma), Rational(1));
}

Element<Rational> zeta(int n) {
  if (n <= 1) throw ArityTooSmall("zeta needs n > 1");
  std::vector<std::vector<int>> parts;
  for (int j = 0; j < n - 2; ++j) parts.push_back({j, n + j});
  parts.push_back({n - 2, n - 1, 2 * n - 2, 2 * n - 1});
  return Element<Rational>(Diagram(n, n, parts), Rational(1));
}

Diagram zeta_retraction(int n) {
  if (n <= 1) throw ArityTooSmall("zeta needs n > 1");
  std::vector<std::vector<int>> parts;
  for (int j = 0; j < n - 2; ++j) parts.push_back({j, n + j});
  parts.push_back({n - 2, n - 1, n + n - 2});
  return Diagram(n, n - 1, parts);
}

Diagram zeta_section(int n) { return diagrams::dual_diagram(zeta_retraction(n)); }

scalars::PolyMatrix gram_matrix(const std::vector<Diagram>& basis) {
  const size_t dim = basis.size();
  scalars::PolyMatrix g(dim, std::vector<Polynomial>(dim));
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < dim; ++j) {
      auto xy = compose_star(basis[i], basis[j]);
      // Entry = sum over basis c of [c]((x o y) o c), collected by t-degree.
      std::vector<long> by_degree;
      for (const auto& c : basis) {
        auto w = compose_star(xy.diagram, c);
        if (w.diagram != c) continue;
        size_t deg = static_cast<size_t>(xy.loops + w.loops);
        if (by_degree.size() <= deg) by_degree.resize(deg + 1, 0);
        ++by_degree[deg];
      }
      std::vector<Rational> coeffs(by_degree.begin(), by_degree.end());
      g[i][j] = Polynomial(std::move(coeffs));
    }
  }
  return g;
}

GramMatrix gram_matrix(int n, int cap) {
  if (n > cap)
    throw ResourceLimit("Gram matrix of FP_" + std::to_string(n) + " exceeds the cap n <= " +
                        std::to_string(cap));
  GramMatrix out;
  out.basis = all_diagrams(n, n);
  out.entries = gram_matrix(out.basis);
  return out;
}

bool is_negligible(const Element<Polynomial>& h, const std::optional<Rational>& t0) {
  const Polynomial t = Polynomial::t();
  for (const auto& g : all_diagrams(h.m(), h.n())) {
    Element<Polynomial> gp(g, Polynomial(1));
    Polynomial tr = trace(compose(h, gp, t), t);
    if (t0 ? sgn(tr.eval(*t0)) != 0 : !tr.is_zero()) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> left_regular_matrix(const Element<Rational>& a, int source,
                                                       const Rational& t0) {
  auto cols = all_diagrams(source, a.n());
  auto rows = all_diagrams(source, a.m());
  std::map<Diagram, size_t> row_index;
  for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
  std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
  for (size_t j = 0; j < cols.size(); ++j) {
    auto img = compose(a, Element<Rational>(cols[j], Rational(1)), t0);
    for (const auto& [d, c] : img.terms()) m[row_index.at(d)][j] = c;
  }
  return m;
}

std::optional<Element<Rational>> inverse(const Element<Rational>& a, const Rational& t0) {
  if (a.n() != a.m()) throw ArityMismatch("inverse of a non-square element");
  const int n = a.n();
  auto basis = all_diagrams(n, n);
  auto m = left_regular_matrix(a, n, t0);
  std::vector<Rational> rhs(basis.size(), Rational(0));
  Diagram id = diagrams::identity_diagram(n);
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == id) rhs[i] = 1;
  auto x = linalg::solve(m, rhs);
  if (!x) return std::nullopt;
  Element<Rational> inv(n, n);
  for (size_t i = 0; i < basis.size(); ++i) inv.add(basis[i], (*x)[i]);
  // A left-regular solution is a right inverse; in a finite-dimensional
  // algebra it is two-sided.
  return inv;
}

namespace {

template <class S>
std::string element_string(const Element<S>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : a.terms()) {
    if (!first) out += " + ";
    first = false;
    out += "(" + scalars::to_string(c) + ")·" + d.to_string();
  }
  return out;
}

}  // namespace

std::string to_string(const Element<Rational>& a) { return element_string(a); }
std::string to_string(const Element<Polynomial>& a) { return element_string(a); }
std::string to_string(const Element<RationalFunction>& a) { return element_string(a); }

}  // namespace partcat::partalg
