#pragma once

#include <compare>
#include <string>
#include <vector>

#include "partcat/scalars.hpp"

namespace partcat::young {

using scalars::Polynomial;
using scalars::Rational;

// Weakly decreasing positive rows; the empty diagram has no rows.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);
  // "3,2"; "" and "0" give the empty diagram.
  static YoungDiagram parse(const std::string& text);

  const std::vector<int>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int size() const;
  bool empty() const { return rows_.empty(); }
  // Row i (0-based) or 0 past the end.
  int row(int i) const { return i < num_rows() ? rows_[i] : 0; }
  // "(3,2)", or "∅".
  std::string to_string() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return b.rows_ <=> a.rows_;
  }

 private:
  std::vector<int> rows_;
};

// Partitions of n, in decreasing lexicographic order.
std::vector<YoungDiagram> partitions(int n);
std::vector<YoungDiagram> partitions_up_to(int max_size);
unsigned long partition_count(int n);

struct Completion {
  std::vector<Rational> parts;  // (t0 - |lambda|, lambda_1, lambda_2, ...)
  bool valid = false;           // a genuine Young diagram
};
Completion completion(const YoungDiagram& lambda, const Rational& t0);
// The completion as a diagram of size d; throws if it is not one.
YoungDiagram completed_diagram(const YoungDiagram& lambda, long d);

// (t0 - |lambda|, lambda_1 - 1, lambda_2 - 2, ...) with tail mu_i = -i.
class MuSequence {
 public:
  MuSequence(const YoungDiagram& lambda, const Rational& t0);
  static int default_cutoff(const YoungDiagram& lambda, const Rational& t0);

  int cutoff() const { return cutoff_; }
  Rational at(int i) const;
  // Entries 0..k.
  std::vector<Rational> head(int k) const;

 private:
  YoungDiagram lambda_;
  Rational head0_;
  int cutoff_;
};

std::vector<std::vector<int>> hook_lengths(const YoungDiagram& lambda);
scalars::Integer hook_product(const YoungDiagram& lambda);
// Number of standard tableaux, |lambda|! / prod hooks.
scalars::Integer dimension(const YoungDiagram& lambda);
Polynomial p_poly(const YoungDiagram& lambda);
std::vector<long> p_roots(const YoungDiagram& lambda);

// Dominance of partitions of the same size.
enum class Dominance { less, greater, equal, incomparable };
Dominance dominance(const YoungDiagram& a, const YoungDiagram& b);

}  // namespace partcat::young
