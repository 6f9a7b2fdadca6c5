#pragma once

#include <vector>

#include "partcat/diagrams.hpp"
#include "partcat/partalg.hpp"
#include "partcat/scalars.hpp"

namespace partcat::interp {

using diagrams::Diagram;
using scalars::Rational;

// How many "1-cycles" S_d has.  per_point counts the d cyclic arrangements
// (1), (2), ..., (d), each acting as the identity, so the class size is
// C(d,r)(r-1)! for every r.  singleton counts the identity once.
enum class OneCycles { per_point, singleton };

inline constexpr long kDefaultMatrixCap = 4096;

// Rows indexed by top colorings [m,d], columns by bottom colorings [n,d],
// both lexicographic with vertex 1 most significant.
struct EquivariantMatrix {
  int d = 0, n = 0, m = 0;
  long rows = 0, cols = 0;
  std::vector<Rational> entries;  // row-major

  EquivariantMatrix() = default;
  EquivariantMatrix(int d, int n, int m, long cap = kDefaultMatrixCap);
  Rational& at(long r, long c) { return entries[r * cols + c]; }
  const Rational& at(long r, long c) const { return entries[r * cols + c]; }
  friend bool operator==(const EquivariantMatrix&, const EquivariantMatrix&) = default;
};

long ipow(long base, int exp);

EquivariantMatrix f_matrix(const Diagram& pi, int d, long cap = kDefaultMatrixCap);
EquivariantMatrix f_x_matrix(const Diagram& pi, int d, long cap = kDefaultMatrixCap);
EquivariantMatrix f_element(const partalg::Element<Rational>& a, int d, long cap = kDefaultMatrixCap);

EquivariantMatrix multiply(const EquivariantMatrix& a, const EquivariantMatrix& b);
EquivariantMatrix kronecker(const EquivariantMatrix& a, const EquivariantMatrix& b);
EquivariantMatrix scaled(EquivariantMatrix a, const Rational& c);
Rational matrix_trace(const EquivariantMatrix& a);
size_t matrix_rank(const EquivariantMatrix& a);
// Matrix of sigma acting diagonally on [k,d] colorings: e_i -> e_{sigma(i)}.
EquivariantMatrix permutation_action(const std::vector<int>& sigma, int k, long cap = kDefaultMatrixCap);
bool is_equivariant(const EquivariantMatrix& a, const std::vector<int>& sigma);

// f(mu) f(pi) == d^loops f(mu . pi).
bool verify_comp(const Diagram& pi, const Diagram& mu, int d);
// Rank of the span of {f(pi) : pi in P_{n,m}}.
size_t hom_rank(int n, int m, int d, long cap = kDefaultMatrixCap);

// Every r-cycle of S_d as a permutation (0-based images), with the 1-cycle
// convention applied at r = 1.
std::vector<std::vector<int>> r_cycles(int r, int d, OneCycles conv = OneCycles::per_point);
// Sum over r-cycles of their action on V_d^{(x) n}.
EquivariantMatrix omega_action_oracle(int n, int r, int d, OneCycles conv = OneCycles::per_point,
                                      long cap = kDefaultMatrixCap);

}  // namespace partcat::interp
