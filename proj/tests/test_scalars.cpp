#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "partcat/scalars.hpp"

using namespace partcat;
using namespace partcat::scalars;

namespace {

Polynomial poly(std::vector<long> c) {
  std::vector<Rational> q;
  for (long x : c) q.emplace_back(x);
  return Polynomial(q);
}

}  // namespace

TEST_CASE("rationals parse into lowest terms") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("6/4").get_den() == 2);
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational(" 0/5 ") == Rational(0));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(make_rational(4, -6) == Rational(-2, 3));
  CHECK(make_rational(4, -6).get_den() == 3);
  CHECK(is_integer(Rational(4)));
  CHECK_FALSE(is_integer(Rational(1, 3)));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(6) == 720);
}

TEST_CASE("polynomial arithmetic") {
  auto t = Polynomial::t();
  auto p = t * t - Polynomial(1);
  CHECK(p == poly({-1, 0, 1}));
  CHECK(p.eval(Rational(3)) == 8);
  CHECK(p.derivative() == poly({0, 2}));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p.shift(Rational(1)) == poly({0, 2, 1}));
  auto [q, r] = divmod(p, t - Polynomial(1));
  CHECK(q == t + Polynomial(1));
  CHECK(r.is_zero());
  CHECK(exact_div(p, t + Polynomial(1)) == t - Polynomial(1));
  CHECK_THROWS_AS(exact_div(p, t), InternalError);
  CHECK(gcd(p, t * t - t) == t - Polynomial(1));
  CHECK(gcd(Polynomial(), Polynomial()).is_zero());
  CHECK(pow(t + Polynomial(1), 3) == poly({1, 3, 3, 1}));
  CHECK(Polynomial::from_roots({1, 2}) == poly({2, -3, 1}));
  CHECK(p.to_string() == "t^2 - 1");
}

TEST_CASE("rational roots and factored printing") {
  auto p = Polynomial::from_roots({0, 1, 2, 5, 7});
  p *= Rational(1, 24);
  CHECK(factored_string(p) == "(1/24)·t·(t-1)·(t-2)·(t-5)·(t-7)");
  auto roots = rational_roots(Polynomial::from_roots({Rational(1, 2), Rational(1, 2), -3}));
  CHECK(roots.size() == 2);
  CHECK(roots[Rational(1, 2)] == 2);
  CHECK(roots[Rational(-3)] == 1);
  CHECK(rational_roots(poly({1, 0, 1})).empty());
  CHECK(factored_string(Polynomial::monomial(1, 2)) == "t^2");
  CHECK(factored_string(Polynomial(7)) == "7");
}

TEST_CASE("rational functions stay reduced") {
  auto t = RationalFunction::t();
  auto f = (t * t - RationalFunction(1)) / (t - RationalFunction(1));
  CHECK(f.is_polynomial());
  CHECK(f.to_polynomial() == poly({1, 1}));
  auto g = RationalFunction(1) / t;
  CHECK_FALSE(g.is_polynomial());
  CHECK((g * t) == RationalFunction(1));
  CHECK(ratfunc_eval(g, Rational(2)) == Rational(1, 2));
  CHECK_THROWS_AS(ratfunc_eval(g, Rational(0)), PoleAtPoint);
  CHECK_THROWS_AS(g / RationalFunction(), std::domain_error);
}

TEST_CASE("truncated series") {
  auto x = TruncatedSeries::variable(Rational(2), 5);
  CHECK(x.at_zero() == 2);
  CHECK(x[1] == 1);
  auto inv = series_invert(x);
  auto one = x * inv;
  CHECK(one == TruncatedSeries::constant(Rational(2), 5, 1));
  CHECK(inv[1] == Rational(-1, 4));
  auto u = x - TruncatedSeries::constant(Rational(2), 5, 2);
  CHECK(u.valuation() == 1);
  CHECK_THROWS_AS(series_invert(u), NotAUnit);
  CHECK_THROWS_AS(x + TruncatedSeries::variable(Rational(2), 4), OrderMismatch);
  CHECK_THROWS_AS(x + TruncatedSeries::variable(Rational(1), 5), OrderMismatch);
  auto p = TruncatedSeries::from_polynomial(poly({0, 0, 1}), Rational(1), 4);
  CHECK(p.coeffs() == std::vector<Rational>{1, 2, 1, 0});
  CHECK(u.to_string() == "u + O(u^5)");
}

TEST_CASE("interpolation through points") {
  std::vector<std::pair<Rational, Rational>> pts{{0, 1}, {1, 0}, {2, 1}};
  CHECK(lagrange_interpolate(pts) == poly({1, -2, 1}));
  pts.push_back({1, 3});
  CHECK_THROWS_AS(lagrange_interpolate(pts), DuplicateAbscissa);
}

TEST_CASE("Bareiss determinant agrees with elimination") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 5;
    PolyMatrix m(n, std::vector<Polynomial>(n));
    for (auto& row : m)
      for (auto& e : row) e = poly({c(rng), c(rng), c(rng)});
    CHECK(oracle::det_matches(m, polymatrix_det(m)));
  }
  CHECK(polymatrix_det({}) == Polynomial(1));
}
