#pragma once

#include <string>
#include <vector>

#include "partcat/partalg.hpp"
#include "partcat/scalars.hpp"
#include "partcat/young.hpp"

namespace partcat::idemlift {

using partalg::Element;
using scalars::Polynomial;
using scalars::Rational;
using scalars::RationalFunction;
using scalars::TruncatedSeries;
using young::YoungDiagram;

using SeriesElement = Element<TruncatedSeries>;

inline constexpr int kMaxSymmetrizerSize = 6;
// FP_n with n above this is too large for the symbolic projectors.
inline constexpr int kMaxLiftArity = 3;
inline constexpr int kDefaultOrder = 8;
inline constexpr int kMaxOrder = 32;

// (dim lambda / n!) * (row symmetrizer) o (column antisymmetrizer) for the
// row-reading tableau, as a combination of permutation diagrams.
Element<Rational> young_symmetrizer(const YoungDiagram& lambda);

// Scalars of the central element z = sum_r c_r omega^r on the candidates
// |nu| <= n, chosen so that they are pairwise distinct.
struct CentralSeparator {
  int n = 0;
  std::vector<int> weights;           // c_r for r = 2..n+1
  std::vector<YoungDiagram> candidates;
  std::vector<Polynomial> values;     // z acting on L(candidate)
};
const CentralSeparator& central_separator(int n);

// Central idempotent of L(lambda) in FP_n(t) as numerator / denominator.
struct CentralProjector {
  Element<Polynomial> numerator;
  Polynomial denominator;
};
CentralProjector central_projector(const YoungDiagram& lambda, int n);

// c_lambda times the central idempotent of L(lambda); its trace is P_lambda(t).
Element<RationalFunction> primitive_idempotent(const YoungDiagram& lambda);

// Lift of an idempotent of FP_n(t0) to FP_n over Q[[u]], t = t0 + u, mod u^order.
SeriesElement newton_lift(const Element<Rational>& e, const Rational& t0, int order = kDefaultOrder);
// Inverse of a unit of FP_n over Q[[u]] at t = t0 + u.
SeriesElement series_inverse(const SeriesElement& a, const Rational& t0);
// a = eps1 eps2 + (1 - eps1)(1 - eps2), so eps1 a = a eps2.
SeriesElement conjugator(const SeriesElement& eps1, const SeriesElement& eps2, const Rational& t0);

SeriesElement series_compose(const SeriesElement& g, const SeriesElement& f, const Rational& t0);
TruncatedSeries series_trace(const SeriesElement& a, const Rational& t0);

struct LiftDecomposition {
  int n = 0;
  std::string source;
  Rational t0;
  int order = 0;
  std::vector<YoungDiagram> summands;  // with multiplicity, sorted
  TruncatedSeries trace_series{Rational(0), 1};
};

// Decomposition of Lift_{t0}(([n], e)) into L(lambda)'s.  The order is
// doubled up to kMaxOrder before OrderTooSmall is raised.
LiftDecomposition lift_decompose(const Element<Rational>& e, const Rational& t0,
                                 int order = kDefaultOrder, const std::string& source = "");

// sum over lambda of m_a(lambda) * m_b(lambda), the dimension of Hom
// between the two lifted objects.
int common_summands(const LiftDecomposition& a, const LiftDecomposition& b);

}  // namespace partcat::idemlift
