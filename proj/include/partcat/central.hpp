#pragma once

#include <vector>

#include "partcat/diagrams.hpp"
#include "partcat/interp.hpp"
#include "partcat/partalg.hpp"
#include "partcat/scalars.hpp"
#include "partcat/young.hpp"

namespace partcat::central {

using diagrams::Diagram;
using interp::OneCycles;
using partalg::Element;
using scalars::Integer;
using scalars::Polynomial;
using scalars::Rational;
using scalars::RationalFunction;
using young::YoungDiagram;

// Number of r-cycles of S_d carrying a fixed perfect coloring of pi
// (bottom colors) to its top colors; 0 when pi has more than d parts.
Integer s_count(const Diagram& pi, int r, int d, OneCycles conv = OneCycles::per_point);
Integer s_bruteforce(const Diagram& pi, int r, int d, OneCycles conv = OneCycles::per_point);

// The polynomial q_{pi,r,t}; zero when the brute-force count vanishes at
// d0 = max(a, r + b, r + 1).
Polynomial omega_coefficient(const Diagram& pi, int r, OneCycles conv = OneCycles::per_point);

struct CentralElement {
  int n = 0, r = 0;
  Element<Polynomial> value;
};
// sum over pi of q_{pi,r,t} x_pi, in the diagram basis.
CentralElement omega(int n, int r, OneCycles conv = OneCycles::per_point);

// (1/r) sum_i (mu_i+k)(mu_i+k-1)...(mu_i+k-r+1) prod_{j != i} (mu_i-mu_j-r)/(mu_i-mu_j)
// for mu = (mu_0, ..., mu_k).
RationalFunction frobenius_formula(const std::vector<RationalFunction>& mu, int r);

struct FrobeniusScalar {
  YoungDiagram lambda;
  int r = 0;
  Polynomial value;
};
// The formula on mu_0 = t - |lambda|, mu_i = lambda_i - i.
FrobeniusScalar frobenius_xi(const YoungDiagram& lambda, int r, int k);
// Same with k = number of rows.
Polynomial xi_poly(const YoungDiagram& lambda, int r);

// chi^shape at cycle type (parts in any order), by Murnaghan-Nakayama.
Integer mn_character(const YoungDiagram& shape, const std::vector<int>& cycle_type);
// Scalar by which the sum of r-cycles acts on the simple module of shape
// mu (|mu| = d): class size * character / dimension.
Rational xi_oracle(const YoungDiagram& mu, int r, int d, OneCycles conv = OneCycles::per_point);

}  // namespace partcat::central
