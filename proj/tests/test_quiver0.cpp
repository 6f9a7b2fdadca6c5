#include "doctest.h"
#include "partcat/blocks.hpp"
#include "partcat/quiver0.hpp"

using namespace partcat;
using namespace partcat::quiver0;

TEST_CASE("antisymmetrizers") {
  CHECK(antisymmetrizer(0) == partalg::identity(0, Rational(1)));
  CHECK(antisymmetrizer(1) == partalg::identity(1, Rational(1)));
  for (int n = 0; n <= 4; ++n) {
    auto s = antisymmetrizer(n);
    CHECK(compose0(s, s) == s);
    CHECK(s.size() == static_cast<size_t>(scalars::factorial(n).get_si()));
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<int> swap(n);
      for (int k = 0; k < n; ++k) swap[k] = k;
      std::swap(swap[i], swap[i + 1]);
      auto minus_s = s;
      minus_s *= Rational(-1);
      CHECK(compose0(partalg::from_permutation(swap), s) == minus_s);
    }
  }
  CHECK(antisymmetrizer(5).size() == 120);
  CHECK_THROWS(antisymmetrizer(-1));
}

TEST_CASE("small cases") {
  auto m0 = block_morphisms(0);
  CHECK(m0.alpha == compose0(antisymmetrizer(1), compose0(x_up(0), antisymmetrizer(0))));
  CHECK(m0.gamma.is_zero());
  auto m1 = block_morphisms(1);
  auto g1 = compose0(antisymmetrizer(1), compose0(x_up(0), compose0(x_down(0), antisymmetrizer(1))));
  g1 *= Rational(-1);
  CHECK(m1.gamma == g1);
  CHECK(x_down(0).n() == 1);
  CHECK(x_down(0).m() == 0);
  CHECK(x_up(2).n() == 2);
  CHECK(x_up(2).m() == 3);
  CHECK(partalg::dual(x_down(2)) == x_up(2));
}

TEST_CASE("the relations of the block hold") {
  for (int n = 1; n <= 3; ++n) {
    auto m = block_morphisms(n), prev = block_morphisms(n - 1);
    CHECK(compose0(m.beta, m.alpha) == m.gamma);
    CHECK(compose0(prev.alpha, prev.beta) == m.gamma);
    CHECK(compose0(m.gamma, m.gamma).is_zero());
    CHECK_FALSE(m.gamma.is_zero());
  }
  CHECK(compose0(block_morphisms(1).alpha, block_morphisms(0).alpha).is_zero());
  CHECK(compose0(block_morphisms(0).beta, block_morphisms(1).beta).is_zero());
  auto report = verify_relations(3);
  CHECK(report.all_hold());
  for (const auto& r : report.relation_results) {
    INFO(r.id, " at n = ", r.n);
    CHECK(r.holds);
  }
  CHECK(report.dim_results.size() == 3);
}

TEST_CASE("dimensions of hom spaces") {
  CHECK(end_dim(0) == 1);
  CHECK(end_dim(1) == 2);
  CHECK(end_dim(2) == 2);
  CHECK(end_dim(3) == 2);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      CHECK(hom_dim(i, j) == hom_dim(j, i));
      CHECK(hom_dim(i, j) == blocks::hom_dim_predict(i, j));
    }
  CHECK_THROWS_AS(end_dim(5), ResourceLimit);
  CHECK(end_dim(4, 5) == 2);
}
