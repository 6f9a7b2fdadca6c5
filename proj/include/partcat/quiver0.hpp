#pragma once

#include <string>
#include <utility>
#include <vector>

#include "partcat/partalg.hpp"
#include "partcat/scalars.hpp"

namespace partcat::quiver0 {

using partalg::Element;
using scalars::Rational;

inline constexpr int kDefaultMaxArity = 4;

// s_n = (1/n!) sum sgn(sigma) sigma in FP_n(0).
Element<Rational> antisymmetrizer(int n);
// id_n (x) (the diagram [1] -> [0]) : [n+1] -> [n].
Element<Rational> x_down(int n);
// Its dual [n] -> [n+1].
Element<Rational> x_up(int n);

// The morphisms of the nontrivial block of Rep(S_0) around [n].
struct BlockMorphisms {
  int n = 0;
  Element<Rational> s;      // s_n
  Element<Rational> alpha;  // [n] -> [n+1]
  Element<Rational> beta;   // [n+1] -> [n], -(1/n!) s_n x s_{n+1}
  Element<Rational> gamma;  // [n] -> [n], zero for n = 0
};
BlockMorphisms block_morphisms(int n, int cap = kDefaultMaxArity);

// g o f at t = 0.
Element<Rational> compose0(const Element<Rational>& g, const Element<Rational>& f);

struct RelationResult {
  std::string id;
  int n = 0;
  bool holds = false;
};

struct QuiverReport {
  int n_max = 0;
  std::vector<RelationResult> relation_results;
  std::vector<std::pair<int, int>> dim_results;  // (n, dim s_n FP_n(0) s_n)
  bool all_hold() const;
};

// Checks every relation whose objects have arity <= n_max.
QuiverReport verify_relations(int n_max, int cap = kDefaultMaxArity);

// dim of s_n FP_n(0) s_n.
int end_dim(int n, int cap = kDefaultMaxArity);
// dim of s_m P_{n,m} s_n at t = 0.
int hom_dim(int n, int m, int cap = kDefaultMaxArity);

}  // namespace partcat::quiver0
