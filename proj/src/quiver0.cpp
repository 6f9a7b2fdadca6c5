#include "partcat/quiver0.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "partcat/linalg.hpp"

namespace partcat::quiver0 {

using diagrams::Diagram;

namespace {

void check_cap(int n, int cap) {
  if (n < 0) throw std::invalid_argument("arity must be nonnegative");
  if (n > cap)
    throw ResourceLimit("arity " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
}

Element<Rational> scaled(Element<Rational> a, const Rational& c) {
  a *= c;
  return a;
}

// Rank of a family of elements of the same Hom space.
int span_dim(const std::vector<Element<Rational>>& family) {
  std::map<Diagram, size_t> column;
  for (const auto& a : family)
    for (const auto& [d, c] : a.terms()) column.emplace(d, 0);
  size_t k = 0;
  for (auto& [d, idx] : column) idx = k++;
  linalg::RationalMatrix rows;
  for (const auto& a : family) {
    std::vector<Rational> row(column.size(), Rational(0));
    for (const auto& [d, c] : a.terms()) row[column.at(d)] = c;
    rows.push_back(std::move(row));
  }
  return static_cast<int>(linalg::rank(rows));
}

// Spans s_m pi s_n over all pi, keeping one representative per line.
std::vector<Element<Rational>> sandwiches(int n, int m) {
  auto sn = antisymmetrizer(n), sm = antisymmetrizer(m);
  std::set<Element<Rational>, bool (*)(const Element<Rational>&, const Element<Rational>&)> seen(
      [](const Element<Rational>& a, const Element<Rational>& b) { return a.terms() < b.terms(); });
  std::vector<Element<Rational>> out;
  for (const auto& pi : diagrams::all_diagrams(n, m)) {
    auto right = compose0(Element<Rational>(pi, Rational(1)), sn);
    if (right.is_zero()) continue;
    auto a = compose0(sm, right);
    if (a.is_zero()) continue;
    a *= Rational(1) / a.terms().begin()->second;
    if (seen.insert(a).second) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

Element<Rational> antisymmetrizer(int n) {
  static std::mutex mutex;
  static std::map<int, Element<Rational>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Element<Rational> s(n, n);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  const Rational unit = scalars::make_rational(1, scalars::factorial(n));
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    s.add(diagrams::permutation_diagram(p), inversions % 2 ? Rational(-unit) : unit);
  } while (std::next_permutation(p.begin(), p.end()));
  cache.emplace(n, s);
  return s;
}

Element<Rational> x_down(int n) {
  Diagram point(1, 0, {{0}});
  return Element<Rational>(diagrams::tensor_diagram(diagrams::identity_diagram(n), point), Rational(1));
}

Element<Rational> x_up(int n) { return partalg::dual(x_down(n)); }

Element<Rational> compose0(const Element<Rational>& g, const Element<Rational>& f) {
  return partalg::compose(g, f, Rational(0));
}

BlockMorphisms block_morphisms(int n, int cap) {
  check_cap(n, cap);
  BlockMorphisms out;
  out.n = n;
  out.s = antisymmetrizer(n);
  auto s_next = antisymmetrizer(n + 1);
  Rational sign_n = n % 2 ? -1 : 1;
  out.alpha = scaled(compose0(s_next, compose0(x_up(n), out.s)), sign_n * Rational(scalars::factorial(n + 1)));
  // Negated so that beta_n alpha_n = gamma_n with alpha and gamma as defined.
  out.beta = scaled(compose0(out.s, compose0(x_down(n), s_next)),
                    scalars::make_rational(-1, scalars::factorial(n)));
  out.gamma = Element<Rational>(n, n);
  if (n > 0) {
    auto loop = compose0(x_up(n - 1), compose0(x_down(n - 1), out.s));
    out.gamma = scaled(compose0(out.s, loop), sign_n * n);
  }
  return out;
}

bool QuiverReport::all_hold() const {
  return std::all_of(relation_results.begin(), relation_results.end(),
                     [](const RelationResult& r) { return r.holds; });
}

QuiverReport verify_relations(int n_max, int cap) {
  check_cap(n_max, cap);
  QuiverReport report;
  report.n_max = n_max;
  // Morphisms around [n] need [n+1]; only those inside arity n_max are kept.
  std::vector<BlockMorphisms> m;
  for (int n = 0; n < n_max; ++n) m.push_back(block_morphisms(n, cap));
  auto add = [&](const std::string& id, int n, bool holds) { report.relation_results.push_back({id, n, holds}); };
  auto gamma = [&](int n) {
    if (n < n_max) return m[n].gamma;
    auto s = antisymmetrizer(n);
    auto loop = compose0(x_up(n - 1), compose0(x_down(n - 1), s));
    return scaled(compose0(s, loop), Rational(n % 2 ? -n : n));
  };
  for (int n = 0; n < n_max; ++n) {
    add("alpha_nonzero", n, !m[n].alpha.is_zero());
    add("beta_nonzero", n, !m[n].beta.is_zero());
  }
  for (int n = 1; n <= n_max; ++n) {
    auto g = gamma(n);
    add("gamma_nonzero", n, !g.is_zero());
    add("gamma_squared_zero", n, compose0(g, g).is_zero());
    add("alpha_beta_is_gamma", n, compose0(m[n - 1].alpha, m[n - 1].beta) == g);
    if (n < n_max) {
      add("beta_alpha_is_gamma", n, compose0(m[n].beta, m[n].alpha) == g);
      add("alpha_alpha_zero", n, compose0(m[n].alpha, m[n - 1].alpha).is_zero());
      add("beta_beta_zero", n, compose0(m[n - 1].beta, m[n].beta).is_zero());
      // -n s_n x x s_n = (n+1) x s_{n+1} x
      auto s = antisymmetrizer(n);
      auto lhs = scaled(compose0(s, compose0(x_up(n - 1), compose0(x_down(n - 1), s))), Rational(-n));
      auto rhs = scaled(compose0(x_down(n), compose0(antisymmetrizer(n + 1), x_up(n))), Rational(n + 1));
      add("loop_identity", n, lhs == rhs);
    }
  }
  if (n_max >= 1) add("beta0_alpha0_zero", 0, compose0(m[0].beta, m[0].alpha).is_zero());
  for (int n = 1; n <= n_max; ++n) {
    int dim = end_dim(n, cap);
    report.dim_results.push_back({n, dim});
    add("end_dim_two", n, dim == 2);
    add("gamma_independent_of_s", n, span_dim({antisymmetrizer(n), gamma(n)}) == 2);
  }
  return report;
}

int end_dim(int n, int cap) { return hom_dim(n, n, cap); }

int hom_dim(int n, int m, int cap) {
  check_cap(std::max(n, m), cap);
  return span_dim(sandwiches(n, m));
}

}  // namespace partcat::quiver0
