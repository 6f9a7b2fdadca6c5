#pragma once

#include <optional>
#include <vector>

#include "partcat/scalars.hpp"

namespace partcat::linalg {

using scalars::Rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

size_t rank(RationalMatrix rows);

// Basis of {x : A x = 0}.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);

// Some solution of A x = b, if one exists.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

// Incremental row echelon form; add() reports whether the vector enlarged the span.
class RowReducer {
 public:
  explicit RowReducer(size_t dim) : dim_(dim) {}
  bool add(std::vector<Rational> v);
  size_t rank() const { return rows_.size(); }
  bool contains(std::vector<Rational> v) const;

 private:
  void reduce(std::vector<Rational>& v) const;
  size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<size_t> pivots_;
};

}  // namespace partcat::linalg
