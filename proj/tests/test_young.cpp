#include "doctest.h"
#include "oracles.hpp"
#include "partcat/young.hpp"

using namespace partcat;
using namespace partcat::young;

namespace {

// p(n) by the pentagonal number recurrence.
std::vector<long> euler_partition_counts(int max_n) {
  std::vector<long> p(max_n + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      long sign = k % 2 ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  return p;
}

YoungDiagram yd(std::vector<int> rows) { return YoungDiagram(std::move(rows)); }

}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(YoungDiagram::parse("3,2") == yd({3, 2}));
  CHECK(YoungDiagram::parse("") == YoungDiagram());
  CHECK(YoungDiagram::parse("0") == YoungDiagram());
  CHECK(yd({3, 2}).to_string() == "(3,2)");
  CHECK(YoungDiagram().to_string() == "∅");
  CHECK(yd({3, 2}).size() == 5);
  CHECK(yd({3, 2}).row(5) == 0);
  CHECK_THROWS(YoungDiagram::parse("2,3"));
  CHECK_THROWS(YoungDiagram::parse("a"));
  CHECK_THROWS(yd({2, -1}));
}

TEST_CASE("partition enumeration") {
  auto p = euler_partition_counts(15);
  for (int n = 0; n <= 15; ++n) {
    CHECK(partition_count(n) == static_cast<unsigned long>(p[n]));
    auto all = partitions(n);
    CHECK(all.size() == static_cast<size_t>(p[n]));
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].rows() > all[i].rows());
    for (const auto& l : all) CHECK(l.size() == n);
  }
  CHECK(partitions(3) == std::vector<YoungDiagram>{yd({3}), yd({2, 1}), yd({1, 1, 1})});
  CHECK(partitions_up_to(3).size() == 1 + 1 + 2 + 3);
}

TEST_CASE("hooks and dimensions") {
  CHECK(hook_lengths(yd({3, 1})) == std::vector<std::vector<int>>{{4, 2, 1}, {1}});
  CHECK(hook_product(yd({3, 2})) == 24);
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : partitions(n)) CHECK(dimension(l) == oracle::character(l, std::vector<int>(n, 1)));
}

TEST_CASE("completions") {
  auto c = completion(yd({2, 1}), Rational(5));
  CHECK(c.valid);
  CHECK(c.parts == std::vector<Rational>{2, 2, 1});
  CHECK_FALSE(completion(yd({2, 1}), Rational(4)).valid);
  CHECK_FALSE(completion(YoungDiagram(), Rational(5, 2)).valid);
  CHECK_FALSE(completion(YoungDiagram(), Rational(-1)).valid);
  CHECK(completed_diagram(yd({2, 1}), 5) == yd({2, 2, 1}));
  CHECK(completed_diagram(YoungDiagram(), 3) == yd({3}));
  CHECK_THROWS(completed_diagram(yd({2, 1}), 4));
}

TEST_CASE("mu sequences") {
  MuSequence mu(yd({2, 1}), Rational(7, 2));
  CHECK(mu.at(0) == Rational(1, 2));
  CHECK(mu.at(1) == 1);
  CHECK(mu.at(2) == -1);
  CHECK(mu.at(5) == -5);
  CHECK(mu.head(2) == std::vector<Rational>{Rational(1, 2), 1, -1});
  CHECK(mu.cutoff() >= 2);
}

TEST_CASE("dimension polynomials") {
  auto p = p_poly(yd({3, 2}));
  CHECK(scalars::factored_string(p) == "(1/24)·t·(t-1)·(t-2)·(t-5)·(t-7)");
  CHECK(p_roots(yd({3, 2})) == std::vector<long>{0, 1, 2, 5, 7});
  CHECK(p_poly(YoungDiagram()) == Polynomial(1));
  for (int n = 0; n <= 6; ++n)
    for (const auto& l : partitions(n)) {
      auto q = p_poly(l);
      CHECK(q.degree() == n);
      CHECK(q.coeffs().back() == scalars::make_rational(1, hook_product(l)));
      for (long r : p_roots(l)) CHECK(q.eval(Rational(r)).get_num() == 0);
      for (long d = n; d <= n + 8; ++d)
        if (completion(l, Rational(d)).valid) CHECK(q.eval(Rational(d)) == Rational(dimension(completed_diagram(l, d))));
    }
}

TEST_CASE("dominance is a partial order") {
  CHECK(dominance(yd({3, 1, 1, 1}), yd({2, 2, 2})) == Dominance::incomparable);
  CHECK(dominance(yd({2, 1}), yd({3})) == Dominance::less);
  CHECK(dominance(yd({3}), yd({2, 1})) == Dominance::greater);
  CHECK(dominance(yd({2, 2}), yd({2, 2})) == Dominance::equal);
  CHECK_THROWS(dominance(yd({2}), yd({3})));
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : partitions(n))
      for (const auto& b : partitions(n)) {
        auto ab = dominance(a, b), ba = dominance(b, a);
        if (ab == Dominance::less) CHECK(ba == Dominance::greater);
        if (ab == Dominance::incomparable) CHECK(ba == Dominance::incomparable);
        CHECK((ab == Dominance::equal) == (a == b));
      }
}
