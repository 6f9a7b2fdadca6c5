#pragma once

#include <optional>
#include <vector>

#include "partcat/scalars.hpp"
#include "partcat/young.hpp"

namespace partcat::blocks {

using scalars::Rational;
using young::Dominance;
using young::YoungDiagram;

// A value of the parameter t; empty means symbolic t.
using Param = std::optional<Rational>;

bool is_nonnegative_integer(const Param& t0);

struct BlockClass {
  Param t0;
  bool trivial = true;
  YoungDiagram lambda;  // the object itself when trivial, else the minimal member
  long d = 0;           // the integer parameter when nontrivial

  friend bool operator==(const BlockClass&, const BlockClass&) = default;
};

bool equivalent(const YoungDiagram& a, const YoungDiagram& b, const Param& t0);
BlockClass class_of(const YoungDiagram& lambda, const Param& t0);
// lambda^(0), ..., lambda^(count).
std::vector<YoungDiagram> block_members(const BlockClass& block, int count);
// Position i of lambda in its nontrivial class.
int member_index(const YoungDiagram& lambda, long d);
// Completion of the minimal member, a Young diagram of size d.
YoungDiagram minimal_completion(const BlockClass& block);
// Dominance of minimal completions: less means c1 precedes c2.
Dominance block_compare(const BlockClass& c1, const BlockClass& c2);

// Add a box; delete a box; delete a box then add one.
std::vector<YoungDiagram> tensor_box(const YoungDiagram& lambda);
bool tensor_box_mu_check(const YoungDiagram& lambda, const YoungDiagram& nu, long d);
int hom_dim_predict(int i, int j);
bool category_semisimple(const Param& t0);
bool dim_sign_check(const BlockClass& block, int i_max);
// Moves a box from the last row of length > 1 to the first empty row of
// the minimal completion.
BlockClass block_partner(const BlockClass& block);

}  // namespace partcat::blocks
