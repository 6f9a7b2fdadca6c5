#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "partcat/diagrams.hpp"

using namespace partcat;
using namespace partcat::diagrams;

namespace {

// Reference composite: graph search over bottom(pi) + middle + top(mu).
Composite compose_by_search(const Diagram& mu, const Diagram& pi) {
  const int n = pi.n(), m = pi.m(), l = mu.m();
  const int total = n + m + l;
  std::vector<std::vector<int>> adj(total);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  // pi: bottom v -> v, top v -> n + v.  mu: bottom v -> n + v, top v -> n + m + v.
  for (const auto& part : pi.parts())
    for (size_t i = 1; i < part.size(); ++i) link(part[0], part[i]);
  for (const auto& part : mu.parts())
    for (size_t i = 1; i < part.size(); ++i) link(n + part[0], n + part[i]);
  std::vector<int> comp(total, -1);
  int count = 0;
  for (int s = 0; s < total; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  std::vector<int> labels(n + l);
  std::set<int> outer;
  for (int v = 0; v < n; ++v) outer.insert(labels[v] = comp[v]);
  for (int v = 0; v < l; ++v) outer.insert(labels[n + v] = comp[n + m + v]);
  std::set<int> all(comp.begin(), comp.end());
  return {Diagram::from_labels(n, l, labels.data()), static_cast<int>(all.size() - outer.size())};
}

}  // namespace

TEST_CASE("storage is canonical") {
  auto a = Diagram::parse("{2,1'}{1,3}{2'}");
  auto b = Diagram::parse("{3,1}{2'}{1',2}");
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a.n() == 3);
  CHECK(a.m() == 2);
  CHECK(a.num_parts() == 3);
  CHECK(a.to_string() == "{1,3}{2,1'}{2'}");
  CHECK(Diagram::parse(a.to_string(), 3, 2) == a);
  CHECK(Diagram::from_signed(3, 2, a.to_signed()) == a);
  CHECK(Diagram(0, 0, {}).to_string() == "{}");
  CHECK(Diagram::parse("{}", 0, 0) == Diagram(0, 0, {}));
}

TEST_CASE("malformed diagrams are rejected") {
  CHECK_THROWS_AS(Diagram::parse("{1,1'"), ParseError);
  CHECK_THROWS_AS(Diagram::parse("{0}"), ParseError);
  CHECK_THROWS_AS(Diagram::parse("{1}{1}"), ParseError);
  CHECK_THROWS_AS(Diagram::parse("{1,2}", 1, 0), ParseError);
  CHECK_THROWS_AS(Diagram::parse("{1}", 2, 0), ParseError);
  CHECK_THROWS_AS(Diagram(1, 1, {{0}}), ParseError);
  CHECK_THROWS_AS(Diagram(20, 20, {}), ResourceLimit);
}

TEST_CASE("enumeration gives Bell numbers of distinct diagrams") {
  for (int k = 0; k <= 7; ++k) {
    for (int n = 0; n <= k; ++n) {
      auto all = all_diagrams(n, k - n);
      CHECK(all.size() == bell_number(k));
      std::set<Diagram> unique(all.begin(), all.end());
      CHECK(unique.size() == all.size());
    }
  }
  CHECK(bell_number(10) == 115975);
  CHECK_THROWS_AS(all_diagrams(7, 7), ResourceLimit);
}

TEST_CASE("composition matches a graph search") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> arity(0, 4);
  for (int k = 0; k < 400; ++k) {
    int n = arity(rng), m = arity(rng), l = arity(rng);
    auto pi = fixtures::random_diagram(rng, n, m);
    auto mu = fixtures::random_diagram(rng, m, l);
    auto got = compose_star(mu, pi);
    auto expected = compose_by_search(mu, pi);
    CHECK(got.diagram == expected.diagram);
    CHECK(got.loops == expected.loops);
  }
  CHECK_THROWS_AS(compose_star(identity_diagram(2), identity_diagram(3)), ArityMismatch);
}

TEST_CASE("category laws") {
  std::mt19937 rng(5);
  for (int k = 0; k < 200; ++k) {
    auto pi = fixtures::random_diagram(rng, 2, 3);
    auto mu = fixtures::random_diagram(rng, 3, 2);
    auto nu = fixtures::random_diagram(rng, 2, 1);
    CHECK(compose_star(identity_diagram(3), pi).diagram == pi);
    CHECK(compose_star(pi, identity_diagram(2)).diagram == pi);
    auto left = compose_star(nu, mu);
    auto a = compose_star(left.diagram, pi);
    auto right = compose_star(mu, pi);
    auto b = compose_star(nu, right.diagram);
    CHECK(a.diagram == b.diagram);
    CHECK(a.loops + left.loops == b.loops + right.loops);
    CHECK(dual_diagram(dual_diagram(pi)) == pi);
    auto dual_comp = compose_star(dual_diagram(pi), dual_diagram(mu));
    CHECK(dual_comp.diagram == dual_diagram(right.diagram));
    auto t = tensor_diagram(pi, nu);
    CHECK(t.n() == 4);
    CHECK(t.m() == 4);
    CHECK(t.num_parts() == pi.num_parts() + nu.num_parts());
  }
}

TEST_CASE("evaluation and coevaluation satisfy the zigzag identity") {
  for (int n = 0; n <= 3; ++n) {
    auto id = identity_diagram(n);
    auto left = tensor_diagram(id, coevaluation_diagram(n));
    auto right = tensor_diagram(evaluation_diagram(n), id);
    auto c = compose_star(right, left);
    CHECK(c.diagram == id);
    CHECK(c.loops == 0);
  }
}

TEST_CASE("statistics and trace components") {
  auto id = identity_diagram(3);
  CHECK(stats(id) == DiagramStats{3, 3, 3});
  auto pi = Diagram::parse("{1}{1'}", 1, 1);
  CHECK(stats(pi) == DiagramStats{2, 0, 1});
  CHECK(trace_components(permutation_diagram({1, 2, 0})) == 1);
  CHECK(trace_components(permutation_diagram({1, 0, 2})) == 2);
  CHECK_THROWS_AS(trace_components(Diagram::parse("{1}", 1, 0)), ArityMismatch);
}

TEST_CASE("coarsenings") {
  auto pi = Diagram::parse("{1}{2}{1'}", 2, 1);
  auto c = coarsenings(pi);
  CHECK(c.size() == bell_number(3));
  for (const auto& mu : c) CHECK(is_coarser_or_equal(mu, pi));
  CHECK_FALSE(is_coarser_or_equal(pi, Diagram::parse("{1,2}{1'}", 2, 1)));
}
