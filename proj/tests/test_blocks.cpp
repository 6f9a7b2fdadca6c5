#include <algorithm>

#include "doctest.h"
#include "partcat/blocks.hpp"
#include "partcat/central.hpp"

using namespace partcat;
using namespace partcat::blocks;

namespace {

YoungDiagram yd(std::vector<int> rows) { return YoungDiagram(std::move(rows)); }

bool same_central_character(const YoungDiagram& a, const YoungDiagram& b, long d, int r_max) {
  for (int r = 1; r <= r_max; ++r)
    if (central::xi_poly(a, r).eval(Rational(d)) != central::xi_poly(b, r).eval(Rational(d))) return false;
  return true;
}

}  // namespace

TEST_CASE("equivalence examples") {
  CHECK(equivalent(yd({2, 2}), yd({4, 3, 3}), Rational(7)));
  CHECK_FALSE(equivalent(yd({2, 2}), yd({4, 3, 3}), Rational(8)));
  CHECK_FALSE(equivalent(yd({2, 2}), yd({4, 3, 3}), std::nullopt));
  CHECK(equivalent(yd({1}), yd({1}), Rational(1, 2)));
  CHECK(class_of(yd({2, 1}), Rational(2)).trivial);
  CHECK_FALSE(class_of(yd({2, 1}), Rational(3)).trivial);
  CHECK(class_of(YoungDiagram(), Rational(5, 2)).trivial);
  CHECK(class_of(YoungDiagram(), std::nullopt).trivial);
}

TEST_CASE("equivalence is detected by central characters") {
  for (long d = 0; d <= 6; ++d) {
    auto all = young::partitions_up_to(5);
    for (const auto& a : all)
      for (const auto& b : all) {
        bool eq = equivalent(a, b, Rational(d));
        CHECK(eq == equivalent(b, a, Rational(d)));
        CHECK(eq == same_central_character(a, b, d, 7));
        auto ca = class_of(a, Rational(d)), cb = class_of(b, Rational(d));
        if (!ca.trivial && !cb.trivial) CHECK(eq == (ca == cb));
        if (ca.trivial && a != b) CHECK_FALSE(eq);
      }
  }
}

TEST_CASE("block members") {
  auto c = class_of(YoungDiagram(), Rational(3));
  REQUIRE_FALSE(c.trivial);
  CHECK(c.lambda == YoungDiagram());
  auto members = block_members(c, 3);
  CHECK(members == std::vector<YoungDiagram>{YoungDiagram(), yd({4}), yd({4, 1}), yd({4, 1, 1})});
  for (int i = 0; i <= 3; ++i) {
    CHECK(member_index(members[i], 3) == i);
    CHECK(class_of(members[i], Rational(3)) == c);
  }
  for (long d = 0; d <= 5; ++d)
    for (const auto& l : young::partitions_up_to(5)) {
      auto cl = class_of(l, Rational(d));
      if (cl.trivial) continue;
      auto ms = block_members(cl, 5);
      for (size_t i = 1; i < ms.size(); ++i) CHECK(ms[i - 1].size() < ms[i].size());
      CHECK(std::find(ms.begin(), ms.end(), l) != ms.end());
      CHECK(dim_sign_check(cl, 4));
    }
  CHECK_THROWS_AS(block_members(class_of(yd({2, 1}), Rational(2)), 2), TrivialClass);
}

TEST_CASE("ordering of classes") {
  auto empty3 = class_of(YoungDiagram(), Rational(3));
  auto box3 = class_of(yd({1}), Rational(3));
  CHECK(minimal_completion(empty3) == yd({3}));
  CHECK(block_compare(empty3, box3) == Dominance::greater);
  CHECK(block_compare(box3, empty3) == Dominance::less);
  auto a = class_of(yd({1, 1, 1}), Rational(6)), b = class_of(yd({2, 2}), Rational(6));
  CHECK(minimal_completion(a) == yd({3, 1, 1, 1}));
  CHECK(minimal_completion(b) == yd({2, 2, 2}));
  CHECK(block_compare(a, b) == Dominance::incomparable);
  CHECK_THROWS_AS(block_compare(empty3, class_of(YoungDiagram(), Rational(4))), ParameterMismatch);
  CHECK_THROWS_AS(minimal_completion(class_of(yd({2, 1}), Rational(2))), TrivialClass);
}

TEST_CASE("block partners walk down dominance") {
  auto c = class_of(YoungDiagram(), Rational(3));
  auto p1 = block_partner(c);
  CHECK(minimal_completion(p1) == yd({2, 1}));
  auto p2 = block_partner(p1);
  CHECK(minimal_completion(p2) == yd({1, 1, 1}));
  CHECK_THROWS_AS(block_partner(p2), MinimalClass);
  for (long d = 1; d <= 6; ++d)
    for (const auto& l : young::partitions(d)) {
      auto cl = class_of(l, Rational(d));
      if (cl.trivial) continue;
      if (minimal_completion(cl) == YoungDiagram(std::vector<int>(d, 1)))
        CHECK_THROWS_AS(block_partner(cl), MinimalClass);
      else
        CHECK(block_compare(block_partner(cl), cl) == Dominance::less);
    }
}

TEST_CASE("tensoring with the box") {
  auto out = tensor_box(yd({3, 1}));
  // Added: (4,1) (3,2) (3,1,1).  Removed: (2,1) (3).  Removed then added from
  // (2,1): (3,1) (2,2) (2,1,1); from (3): (4) (3,1).
  std::vector<YoungDiagram> expected{yd({4, 1}), yd({3, 2}), yd({3, 1, 1}), yd({2, 1}), yd({3}),
                                     yd({3, 1}), yd({2, 2}), yd({2, 1, 1}), yd({4}),    yd({3, 1})};
  std::sort(expected.begin(), expected.end());
  CHECK(out == expected);
  CHECK(tensor_box(YoungDiagram()) == std::vector<YoungDiagram>{yd({1})});
  for (long d = 2; d <= 6; ++d)
    for (const auto& l : young::partitions_up_to(3)) {
      auto next = tensor_box(l);
      for (const auto& nu : next)
        if (nu.size() != l.size() && class_of(l, Rational(d)) != class_of(nu, Rational(d))) {
          // Neighbouring objects differ by one step up and one step down.
          CHECK(tensor_box_mu_check(l, nu, d));
        }
    }
}

TEST_CASE("hom dimensions and semisimplicity") {
  CHECK(hom_dim_predict(0, 0) == 1);
  CHECK(hom_dim_predict(2, 2) == 2);
  CHECK(hom_dim_predict(1, 2) == 1);
  CHECK(hom_dim_predict(0, 2) == 0);
  CHECK_THROWS(hom_dim_predict(-1, 0));
  CHECK(category_semisimple(Rational(5, 2)));
  CHECK(category_semisimple(Rational(-1)));
  CHECK(category_semisimple(std::nullopt));
  CHECK_FALSE(category_semisimple(Rational(0)));
  CHECK_FALSE(category_semisimple(Rational(4)));
}
