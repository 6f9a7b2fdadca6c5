#include "partcat/interp.hpp"

#include <algorithm>
#include <numeric>

#include "partcat/linalg.hpp"

namespace partcat::interp {

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

EquivariantMatrix::EquivariantMatrix(int d_, int n_, int m_, long cap) : d(d_), n(n_), m(m_) {
  if (d < 0) throw std::invalid_argument("negative d");
  auto bounded = [&](int k) {
    long v = 1;
    for (int i = 0; i < k; ++i) {
      v *= d;
      if (v > cap) throw ResourceLimit("coloring space d^" + std::to_string(k) + " exceeds cap " + std::to_string(cap));
    }
    return v;
  };
  cols = bounded(n);
  rows = bounded(m);
  entries.assign(rows * cols, Rational(0));
}

namespace {

// Calls fn(row, col) for every coloring of pi's parts by colors[part] in
// [0,d) (perfect: injective on parts).
template <class Fn>
void for_each_coloring(const Diagram& pi, int d, bool perfect, Fn fn) {
  const int a = pi.num_parts();
  std::vector<int> color(a, 0);
  std::vector<bool> used(d, false);
  auto emit = [&] {
    long col = 0, row = 0;
    for (int j = 0; j < pi.n(); ++j) col = col * d + color[pi.label(j)];
    for (int j = 0; j < pi.m(); ++j) row = row * d + color[pi.label(pi.n() + j)];
    fn(row, col);
  };
  auto rec = [&](auto&& self, int p) -> void {
    if (p == a) {
      emit();
      return;
    }
    for (int c = 0; c < d; ++c) {
      if (perfect && used[c]) continue;
      color[p] = c;
      if (perfect) used[c] = true;
      self(self, p + 1);
      if (perfect) used[c] = false;
    }
  };
  rec(rec, 0);
}

}  // namespace

EquivariantMatrix f_matrix(const Diagram& pi, int d, long cap) {
  EquivariantMatrix out(d, pi.n(), pi.m(), cap);
  if (out.rows == 0 || out.cols == 0) return out;
  for_each_coloring(pi, d, false, [&](long r, long c) { out.at(r, c) = 1; });
  return out;
}

EquivariantMatrix f_x_matrix(const Diagram& pi, int d, long cap) {
  EquivariantMatrix out(d, pi.n(), pi.m(), cap);
  if (out.rows == 0 || out.cols == 0) return out;
  for_each_coloring(pi, d, true, [&](long r, long c) { out.at(r, c) = 1; });
  return out;
}

EquivariantMatrix f_element(const partalg::Element<Rational>& a, int d, long cap) {
  EquivariantMatrix out(d, a.n(), a.m(), cap);
  if (out.rows == 0 || out.cols == 0) return out;
  for (const auto& [pi, coeff] : a.terms())
    for_each_coloring(pi, d, false, [&](long r, long c) { out.at(r, c) += coeff; });
  return out;
}

EquivariantMatrix multiply(const EquivariantMatrix& a, const EquivariantMatrix& b) {
  if (a.n != b.m || a.d != b.d) throw ArityMismatch("matrix product of incompatible shapes");
  EquivariantMatrix out;
  out.d = a.d;
  out.n = b.n;
  out.m = a.m;
  out.rows = a.rows;
  out.cols = b.cols;
  out.entries.assign(out.rows * out.cols, Rational(0));
  for (long i = 0; i < a.rows; ++i)
    for (long k = 0; k < a.cols; ++k) {
      const Rational& x = a.at(i, k);
      if (sgn(x) == 0) continue;
      for (long j = 0; j < b.cols; ++j)
        if (sgn(b.at(k, j)) != 0) out.at(i, j) += x * b.at(k, j);
    }
  return out;
}

EquivariantMatrix kronecker(const EquivariantMatrix& a, const EquivariantMatrix& b) {
  if (a.d != b.d) throw ArityMismatch("kronecker product with different d");
  EquivariantMatrix out;
  out.d = a.d;
  out.n = a.n + b.n;
  out.m = a.m + b.m;
  out.rows = a.rows * b.rows;
  out.cols = a.cols * b.cols;
  out.entries.assign(out.rows * out.cols, Rational(0));
  for (long i = 0; i < a.rows; ++i)
    for (long j = 0; j < a.cols; ++j) {
      if (sgn(a.at(i, j)) == 0) continue;
      for (long k = 0; k < b.rows; ++k)
        for (long l = 0; l < b.cols; ++l) out.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
    }
  return out;
}

EquivariantMatrix scaled(EquivariantMatrix a, const Rational& c) {
  for (auto& x : a.entries) x *= c;
  return a;
}

Rational matrix_trace(const EquivariantMatrix& a) {
  if (a.rows != a.cols) throw ArityMismatch("trace of a non-square matrix");
  Rational tr(0);
  for (long i = 0; i < a.rows; ++i) tr += a.at(i, i);
  return tr;
}

size_t matrix_rank(const EquivariantMatrix& a) {
  linalg::RationalMatrix m(a.rows, std::vector<Rational>(a.cols));
  for (long i = 0; i < a.rows; ++i)
    for (long j = 0; j < a.cols; ++j) m[i][j] = a.at(i, j);
  return linalg::rank(std::move(m));
}

EquivariantMatrix permutation_action(const std::vector<int>& sigma, int k, long cap) {
  const int d = static_cast<int>(sigma.size());
  EquivariantMatrix out(d, k, k, cap);
  std::vector<int> digits(k);
  for (long idx = 0; idx < out.cols; ++idx) {
    long rest = idx;
    for (int j = k - 1; j >= 0; --j) {
      digits[j] = static_cast<int>(rest % d);
      rest /= d;
    }
    long img = 0;
    for (int j = 0; j < k; ++j) img = img * d + sigma[digits[j]];
    out.at(img, idx) += 1;
  }
  return out;
}

bool is_equivariant(const EquivariantMatrix& a, const std::vector<int>& sigma) {
  auto pm = permutation_action(sigma, a.m, a.rows * a.rows + 1);
  auto pn = permutation_action(sigma, a.n, a.cols * a.cols + 1);
  return multiply(pm, a) == multiply(a, pn);
}

bool verify_comp(const Diagram& pi, const Diagram& mu, int d) {
  auto comp = diagrams::compose_star(mu, pi);
  auto lhs = multiply(f_matrix(mu, d), f_matrix(pi, d));
  auto rhs = scaled(f_matrix(comp.diagram, d), Rational(ipow(d, comp.loops)));
  return lhs == rhs;
}

size_t hom_rank(int n, int m, int d, long cap) {
  auto basis = diagrams::all_diagrams(n, m);
  EquivariantMatrix probe(d, n, m, cap);
  const long size = probe.rows * probe.cols;
  if (size == 0) return 0;
  linalg::RowReducer reducer(static_cast<size_t>(size));
  for (const auto& pi : basis) reducer.add(f_matrix(pi, d, cap).entries);
  return reducer.rank();
}

std::vector<std::vector<int>> r_cycles(int r, int d, OneCycles conv) {
  std::vector<std::vector<int>> out;
  if (r < 1 || r > d) return out;
  std::vector<int> id(d);
  std::iota(id.begin(), id.end(), 0);
  if (r == 1) {
    int copies = conv == OneCycles::per_point ? d : 1;
    for (int i = 0; i < copies; ++i) out.push_back(id);
    return out;
  }
  // Cyclic sequences (x_0 x_1 ... x_{r-1}) with x_0 the smallest entry.
  std::vector<int> seq(r);
  std::vector<bool> used(d, false);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      std::vector<int> sigma = id;
      for (int i = 0; i < r; ++i) sigma[seq[i]] = seq[(i + 1) % r];
      out.push_back(std::move(sigma));
      return;
    }
    for (int x = seq[0] + 1; x < d; ++x) {
      if (used[x]) continue;
      used[x] = true;
      seq[pos] = x;
      self(self, pos + 1);
      used[x] = false;
    }
  };
  for (int first = 0; first < d; ++first) {
    seq[0] = first;
    used[first] = true;
    rec(rec, 1);
    used[first] = false;
  }
  return out;
}

EquivariantMatrix omega_action_oracle(int n, int r, int d, OneCycles conv, long cap) {
  EquivariantMatrix out(d, n, n, cap);
  for (const auto& sigma : r_cycles(r, d, conv)) {
    auto p = permutation_action(sigma, n, cap);
    for (size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += p.entries[i];
  }
  return out;
}

}  // namespace partcat::interp
