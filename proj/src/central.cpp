#include "partcat/central.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace partcat::central {

namespace {

struct ArrowData {
  bool consistent = true;  // x -> y is a partial bijection
  int cycle_classes = 0;   // classes closing up into a cycle of length > 1
};

// Colors are part indices; j contributes the arrow label(j) -> label(j').
ArrowData arrows(const Diagram& pi) {
  const int a = pi.num_parts(), n = pi.n();
  std::vector<int> out(a, -1), in(a, -1);
  ArrowData data;
  for (int j = 0; j < n; ++j) {
    int x = pi.label(j), y = pi.label(n + j);
    if ((out[x] >= 0 && out[x] != y) || (in[y] >= 0 && in[y] != x)) {
      data.consistent = false;
      return data;
    }
    out[x] = y;
    in[y] = x;
  }
  std::vector<bool> seen(a, false);
  for (int x = 0; x < a; ++x) {
    if (seen[x] || out[x] == x) continue;
    // A class is a cycle iff following arrows from x returns to x.
    int y = x;
    bool cycle = false;
    while (y >= 0 && !seen[y]) {
      seen[y] = true;
      y = out[y];
      if (y == x) {
        cycle = true;
        break;
      }
    }
    if (cycle) ++data.cycle_classes;
  }
  return data;
}

}  // namespace

Integer s_count(const Diagram& pi, int r, int d, OneCycles conv) {
  if (pi.n() != pi.m()) throw ArityMismatch("s_count needs a square diagram");
  auto s = diagrams::stats(pi);
  if (r < 1 || r > d || s.a > d) return 0;
  auto data = arrows(pi);
  if (!data.consistent) return 0;
  if (r == 1) {
    if (s.c != s.a) return 0;
    return conv == OneCycles::per_point ? Integer(d) : Integer(1);
  }
  if (data.cycle_classes > 0) {
    // The closed cycle must be the whole r-cycle.
    return (s.c - s.b == 1 && r == s.a - s.b) ? Integer(1) : Integer(0);
  }
  if (r < s.a - s.b || r <= s.a - s.c) return 0;
  return scalars::factorial(r - s.a + s.c - 1) * scalars::binomial(d - s.a, r - s.a + s.b);
}

Integer s_bruteforce(const Diagram& pi, int r, int d, OneCycles conv) {
  if (pi.n() != pi.m()) throw ArityMismatch("s_bruteforce needs a square diagram");
  if (pi.num_parts() > d) return 0;
  Integer count = 0;
  for (const auto& sigma : interp::r_cycles(r, d, conv)) {
    bool ok = true;
    for (int j = 0; j < pi.n() && ok; ++j) ok = sigma[pi.label(j)] == pi.label(pi.n() + j);
    if (ok) ++count;
  }
  return count;
}

Polynomial omega_coefficient(const Diagram& pi, int r, OneCycles conv) {
  auto s = diagrams::stats(pi);
  int d0 = std::max({s.a, r + s.b, r + 1});
  if (s_count(pi, r, d0, conv) == 0) return Polynomial();
  if (r == 1) return conv == OneCycles::per_point ? Polynomial::t() : Polynomial(1);
  const int k = r - s.a + s.b;
  // (r-a+c-1)! * C(t - a, k)
  Polynomial q(scalars::make_rational(scalars::factorial(r - s.a + s.c - 1), scalars::factorial(k)));
  for (int i = 0; i < k; ++i) q *= Polynomial(std::vector<Rational>{Rational(-s.a - i), 1});
  return q;
}

CentralElement omega(int n, int r, OneCycles conv) {
  CentralElement out{n, r, Element<Polynomial>(n, n)};
  for (const auto& pi : diagrams::all_diagrams(n, n)) {
    Polynomial q = omega_coefficient(pi, r, conv);
    if (q.is_zero()) continue;
    for (const auto& [nu, c] : partalg::x_basis(pi).terms()) {
      Polynomial term = q;
      term *= c;
      out.value.add(nu, term);
    }
  }
  return out;
}

RationalFunction frobenius_formula(const std::vector<RationalFunction>& mu, int r) {
  const int k = static_cast<int>(mu.size()) - 1;
  RationalFunction sum;
  for (int i = 0; i <= k; ++i) {
    RationalFunction term(1);
    for (int s = 0; s < r; ++s) term *= mu[i] + RationalFunction(k - s);
    for (int j = 0; j <= k; ++j) {
      if (j == i) continue;
      RationalFunction diff = mu[i] - mu[j];
      term *= (diff - RationalFunction(r)) / diff;
    }
    sum += term;
  }
  return sum / RationalFunction(r);
}

FrobeniusScalar frobenius_xi(const YoungDiagram& lambda, int r, int k) {
  if (k < lambda.num_rows())
    throw CutoffTooSmall("cutoff " + std::to_string(k) + " below the " +
                         std::to_string(lambda.num_rows()) + " rows of " + lambda.to_string());
  if (r < 1) throw std::invalid_argument("r must be positive");
  std::vector<RationalFunction> mu;
  mu.push_back(RationalFunction(Polynomial(std::vector<Rational>{Rational(-lambda.size()), 1})));
  for (int i = 1; i <= k; ++i) mu.push_back(RationalFunction(lambda.row(i - 1) - i));
  RationalFunction xi = frobenius_formula(mu, r);
  if (!xi.is_polynomial())
    throw InternalError("Frobenius scalar did not reduce to a polynomial: " + xi.to_string());
  return {lambda, r, xi.num()};
}

Polynomial xi_poly(const YoungDiagram& lambda, int r) {
  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, int>, Polynomial> cache;
  auto key = std::make_pair(lambda.rows(), r);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Polynomial value = frobenius_xi(lambda, r, lambda.num_rows()).value;
  std::lock_guard lock(mutex);
  cache.emplace(key, value);
  return value;
}

namespace {

// Beta numbers of a shape with L rows: lambda_i + L - i.
std::vector<int> beta_set(const std::vector<int>& rows) {
  const int L = static_cast<int>(rows.size());
  std::vector<int> beta;
  for (int i = 0; i < L; ++i) beta.push_back(rows[i] + L - 1 - i);
  return beta;
}

std::vector<int> rows_from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int L = static_cast<int>(beta.size());
  std::vector<int> rows;
  for (int i = 0; i < L; ++i)
    if (beta[i] - (L - 1 - i) > 0) rows.push_back(beta[i] - (L - 1 - i));
  return rows;
}

Integer mn_rec(const std::vector<int>& rows, const std::vector<int>& cycles, size_t pos,
               std::map<std::pair<std::vector<int>, size_t>, Integer>& memo) {
  if (pos == cycles.size()) return rows.empty() ? 1 : 0;
  auto key = std::make_pair(rows, pos);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int h = cycles[pos];
  auto beta = beta_set(rows);
  Integer total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - h;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++height;
    auto next = beta;
    next[i] = target;
    Integer sub = mn_rec(rows_from_beta(next), cycles, pos + 1, memo);
    total += (height % 2 ? -sub : sub);
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

Integer mn_character(const YoungDiagram& shape, const std::vector<int>& cycle_type) {
  int total = std::accumulate(cycle_type.begin(), cycle_type.end(), 0);
  if (total != shape.size()) throw std::invalid_argument("cycle type and shape sizes differ");
  std::vector<int> cycles = cycle_type;
  std::sort(cycles.rbegin(), cycles.rend());
  std::map<std::pair<std::vector<int>, size_t>, Integer> memo;
  return mn_rec(shape.rows(), cycles, 0, memo);
}

Rational xi_oracle(const YoungDiagram& mu, int r, int d, OneCycles conv) {
  if (mu.size() != d) throw std::invalid_argument("xi_oracle needs |mu| = d");
  if (r < 1 || r > d) throw std::invalid_argument("xi_oracle needs 1 <= r <= d");
  Integer class_size;
  if (r == 1) {
    class_size = conv == OneCycles::per_point ? d : 1;
  } else {
    class_size = scalars::binomial(d, r) * scalars::factorial(r - 1);
  }
  std::vector<int> cycle_type{r};
  for (int i = 0; i < d - r; ++i) cycle_type.push_back(1);
  Integer chi = mn_character(mu, cycle_type);
  return scalars::make_rational(class_size * chi, young::dimension(mu));
}

}  // namespace partcat::central
