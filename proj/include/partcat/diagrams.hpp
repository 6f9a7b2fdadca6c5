#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "partcat/errors.hpp"

namespace partcat::diagrams {

// Largest total arity n + m a Diagram can hold.
inline constexpr int kMaxVertices = 32;
// Default cap on n + m for exhaustive enumeration.
inline constexpr int kDefaultEnumerationCap = 12;

// A set partition of {1..n, 1'..m'}: a morphism [n] -> [m].
//
// Vertices are flat indices: 0..n-1 for 1..n and n..n+m-1 for 1'..m'.
// Storage is a restricted growth string: label[v] is the index of v's part,
// parts numbered in order of their least vertex.  Equal diagrams have
// identical storage.
class Diagram {
 public:
  Diagram() = default;
  // parts use flat vertex indices; they must be disjoint and cover.
  Diagram(int n, int m, const std::vector<std::vector<int>>& parts);
  // Any labelling of the vertices; canonicalized.
  static Diagram from_labels(int n, int m, const int* labels);

  int n() const { return n_; }
  int m() const { return m_; }
  int size() const { return n_ + m_; }
  int num_parts() const { return parts_; }
  int label(int v) const { return label_[v]; }
  std::vector<std::vector<int>> parts() const;

  // "{1,3,2',3'}{2,4}{1'}".  The empty partition prints as "{}".
  std::string to_string() const;
  // Signed 1-based vertex lists, negative = primed.
  std::vector<std::vector<int>> to_signed() const;
  static Diagram from_signed(int n, int m, const std::vector<std::vector<int>>& parts);
  // Arities default to the largest index of each kind.
  static Diagram parse(const std::string& text, int n = -1, int m = -1);

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.label_ == b.label_;
  }
  friend std::strong_ordering operator<=>(const Diagram& a, const Diagram& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    for (int v = 0; v < a.size(); ++v)
      if (auto c = a.label_[v] <=> b.label_[v]; c != 0) return c;
    return std::strong_ordering::equal;
  }
  size_t hash() const;

 private:
  uint8_t n_ = 0, m_ = 0, parts_ = 0;
  std::array<uint8_t, kMaxVertices> label_{};
};

struct DiagramHash {
  size_t operator()(const Diagram& d) const { return d.hash(); }
};

struct DiagramStats {
  int a = 0;  // parts
  int b = 0;  // parts containing some pair j, j'
  int c = 0;  // components of the trace closure
  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

// Every diagram of P_{n,m} in lexicographic order of the stored labels.
std::vector<Diagram> all_diagrams(int n, int m, int cap = kDefaultEnumerationCap);
unsigned long long bell_number(int k);

struct Composite {
  Diagram diagram;
  int loops = 0;
};
// mu : [m] -> [l] after pi : [n] -> [m].
Composite compose_star(const Diagram& mu, const Diagram& pi);

Diagram tensor_diagram(const Diagram& pi, const Diagram& mu);
Diagram dual_diagram(const Diagram& pi);
std::vector<Diagram> coarsenings(const Diagram& pi);
// Each part of coarse is a union of parts of fine.
bool is_coarser_or_equal(const Diagram& coarse, const Diagram& fine);
DiagramStats stats(const Diagram& pi);
// Components after joining j to j' for every j.
int trace_components(const Diagram& pi);

Diagram identity_diagram(int n);
// sigma[i] is the image of i (0-based); parts {i, sigma(i)'}.
Diagram permutation_diagram(const std::vector<int>& sigma);
// [2n] -> [0], parts {j, 2n+1-j}.
Diagram evaluation_diagram(int n);
// [0] -> [2n], the dual of evaluation_diagram.
Diagram coevaluation_diagram(int n);

}  // namespace partcat::diagrams
