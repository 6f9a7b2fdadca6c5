#include "partcat/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace partcat::diagrams {

namespace {

struct UnionFind {
  std::array<int, 3 * kMaxVertices> parent;
  explicit UnionFind(int size) { std::iota(parent.begin(), parent.begin() + size, 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void check_arity(int n, int m) {
  if (n < 0 || m < 0) throw ArityMismatch("negative arity");
  if (n + m > kMaxVertices)
    throw ResourceLimit("diagram with " + std::to_string(n + m) + " vertices exceeds " +
                        std::to_string(kMaxVertices));
}

std::string vertex_name(int v, int n) {
  return v < n ? std::to_string(v + 1) : std::to_string(v - n + 1) + "'";
}

}  // namespace

Diagram Diagram::from_labels(int n, int m, const int* labels) {
  check_arity(n, m);
  Diagram d;
  d.n_ = static_cast<uint8_t>(n);
  d.m_ = static_cast<uint8_t>(m);
  // Labels are below 3 * kMaxVertices (union-find roots of a composite).
  std::array<int, 3 * kMaxVertices> seen;
  seen.fill(-1);
  int next = 0;
  for (int v = 0; v < n + m; ++v) {
    int& s = seen[labels[v]];
    if (s < 0) s = next++;
    d.label_[v] = static_cast<uint8_t>(s);
  }
  d.parts_ = static_cast<uint8_t>(next);
  return d;
}

Diagram::Diagram(int n, int m, const std::vector<std::vector<int>>& parts) {
  check_arity(n, m);
  std::vector<int> labels(n + m, -1);
  for (size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw ParseError("empty part");
    for (int v : parts[p]) {
      if (v < 0 || v >= n + m) throw ParseError("vertex out of range");
      if (labels[v] >= 0) throw ParseError("vertex in two parts");
      labels[v] = static_cast<int>(p);
    }
  }
  for (int v = 0; v < n + m; ++v)
    if (labels[v] < 0) throw ParseError("vertex " + vertex_name(v, n) + " not covered");
  *this = from_labels(n, m, labels.data());
}

std::vector<std::vector<int>> Diagram::parts() const {
  std::vector<std::vector<int>> out(parts_);
  for (int v = 0; v < size(); ++v) out[label_[v]].push_back(v);
  return out;
}

std::string Diagram::to_string() const {
  if (size() == 0) return "{}";
  std::string s;
  for (const auto& part : parts()) {
    s += "{";
    for (size_t i = 0; i < part.size(); ++i) {
      if (i) s += ",";
      s += vertex_name(part[i], n_);
    }
    s += "}";
  }
  return s;
}

std::vector<std::vector<int>> Diagram::to_signed() const {
  std::vector<std::vector<int>> out;
  for (const auto& part : parts()) {
    std::vector<int> p;
    for (int v : part) p.push_back(v < n_ ? v + 1 : -(v - n_ + 1));
    out.push_back(std::move(p));
  }
  return out;
}

Diagram Diagram::from_signed(int n, int m, const std::vector<std::vector<int>>& parts) {
  std::vector<std::vector<int>> flat;
  for (const auto& part : parts) {
    std::vector<int> p;
    for (int x : part) {
      if (x == 0) throw ParseError("vertex 0 in signed diagram");
      p.push_back(x > 0 ? x - 1 : n + (-x) - 1);
      if (x > n || -x > m) throw ParseError("vertex out of range in signed diagram");
    }
    flat.push_back(std::move(p));
  }
  return Diagram(n, m, flat);
}

Diagram Diagram::parse(const std::string& text, int n, int m) {
  std::vector<std::vector<std::pair<int, bool>>> parts;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  int max_bottom = 0, max_top = 0;
  while (i < text.size()) {
    if (text[i] != '{') throw ParseError("expected '{' in diagram: " + text);
    ++i;
    std::vector<std::pair<int, bool>> part;
    skip();
    if (i < text.size() && text[i] == '}') {
      ++i;
      skip();
      if (!parts.empty() || i < text.size()) throw ParseError("empty part in diagram: " + text);
      break;
    }
    while (true) {
      skip();
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("expected vertex number in diagram: " + text);
      int v = std::stoi(text.substr(start, i - start));
      if (v <= 0) throw ParseError("vertices are numbered from 1: " + text);
      bool primed = false;
      if (i < text.size() && text[i] == '\'') {
        primed = true;
        ++i;
      }
      (primed ? max_top : max_bottom) = std::max(primed ? max_top : max_bottom, v);
      part.push_back({v, primed});
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw ParseError("unterminated part in diagram: " + text);
    }
    parts.push_back(std::move(part));
    skip();
  }
  if (n < 0) n = max_bottom;
  if (m < 0) m = max_top;
  if (max_bottom > n || max_top > m) throw ParseError("vertex exceeds arity in diagram: " + text);
  std::vector<std::vector<int>> flat;
  for (const auto& part : parts) {
    std::vector<int> p;
    for (auto [v, primed] : part) p.push_back(primed ? n + v - 1 : v - 1);
    flat.push_back(std::move(p));
  }
  return Diagram(n, m, flat);
}

size_t Diagram::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&](uint8_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(n_);
  mix(m_);
  for (int v = 0; v < size(); ++v) mix(label_[v]);
  return h;
}

unsigned long long bell_number(int k) {
  // Bell triangle.
  std::vector<unsigned long long> row{1};
  for (int i = 0; i < k; ++i) {
    std::vector<unsigned long long> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

std::vector<Diagram> all_diagrams(int n, int m, int cap) {
  check_arity(n, m);
  if (n + m > cap)
    throw ResourceLimit("enumerating P_{" + std::to_string(n) + "," + std::to_string(m) +
                        "} exceeds the size cap " + std::to_string(cap));
  int size = n + m;
  std::vector<Diagram> out;
  out.reserve(bell_number(size));
  std::vector<int> labels(size + 1, 0);
  // Restricted growth strings in lexicographic order.
  auto rec = [&](auto&& self, int v, int max_label) -> void {
    if (v == size) {
      out.push_back(Diagram::from_labels(n, m, labels.data()));
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      labels[v] = l;
      self(self, v + 1, std::max(max_label, l));
    }
  };
  if (size == 0) {
    out.push_back(Diagram::from_labels(0, 0, labels.data()));
  } else {
    labels[0] = 0;
    rec(rec, 1, 0);
  }
  return out;
}

Composite compose_star(const Diagram& mu, const Diagram& pi) {
  if (mu.n() != pi.m())
    throw ArityMismatch("cannot compose " + mu.to_string() + " after " + pi.to_string());
  const int n = pi.n(), m = pi.m(), l = mu.m();
  const int total = n + m + l;
  UnionFind uf(total);
  std::array<int, kMaxVertices> first;
  first.fill(-1);
  for (int v = 0; v < n + m; ++v) {
    int& f = first[pi.label(v)];
    if (f < 0) f = v;
    else uf.unite(f, v);
  }
  first.fill(-1);
  for (int w = 0; w < m + l; ++w) {
    int& f = first[mu.label(w)];
    if (f < 0) f = n + w;
    else uf.unite(f, n + w);
  }
  std::array<int, kMaxVertices> labels;
  std::array<bool, 3 * kMaxVertices> outer{};
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    labels[v] = r;
    outer[r] = true;
  }
  for (int w = 0; w < l; ++w) {
    int r = uf.find(n + m + w);
    labels[n + w] = r;
    outer[r] = true;
  }
  int loops = 0;
  for (int v = n; v < n + m; ++v)
    if (uf.find(v) == v && !outer[v]) ++loops;
  return {Diagram::from_labels(n, l, labels.data()), loops};
}

Diagram tensor_diagram(const Diagram& pi, const Diagram& mu) {
  const int n1 = pi.n(), m1 = pi.m(), n2 = mu.n(), m2 = mu.m();
  check_arity(n1 + n2, m1 + m2);
  std::array<int, kMaxVertices> labels;
  const int off = pi.num_parts();
  for (int j = 0; j < n1; ++j) labels[j] = pi.label(j);
  for (int j = 0; j < n2; ++j) labels[n1 + j] = off + mu.label(j);
  const int top = n1 + n2;
  for (int j = 0; j < m1; ++j) labels[top + j] = pi.label(n1 + j);
  for (int j = 0; j < m2; ++j) labels[top + m1 + j] = off + mu.label(n2 + j);
  return Diagram::from_labels(n1 + n2, m1 + m2, labels.data());
}

Diagram dual_diagram(const Diagram& pi) {
  const int n = pi.n(), m = pi.m();
  std::array<int, kMaxVertices> labels;
  for (int j = 0; j < m; ++j) labels[j] = pi.label(n + j);
  for (int j = 0; j < n; ++j) labels[m + j] = pi.label(j);
  return Diagram::from_labels(m, n, labels.data());
}

std::vector<Diagram> coarsenings(const Diagram& pi) {
  const int a = pi.num_parts();
  std::vector<Diagram> out;
  std::vector<int> merge(a + 1, 0);
  std::array<int, kMaxVertices> labels;
  auto emit = [&] {
    for (int v = 0; v < pi.size(); ++v) labels[v] = merge[pi.label(v)];
    out.push_back(Diagram::from_labels(pi.n(), pi.m(), labels.data()));
  };
  auto rec = [&](auto&& self, int i, int max_label) -> void {
    if (i == a) {
      emit();
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      merge[i] = l;
      self(self, i + 1, std::max(max_label, l));
    }
  };
  if (a == 0) {
    emit();
  } else {
    merge[0] = 0;
    rec(rec, 1, 0);
  }
  return out;
}

bool is_coarser_or_equal(const Diagram& coarse, const Diagram& fine) {
  if (coarse.n() != fine.n() || coarse.m() != fine.m()) return false;
  std::vector<int> image(fine.num_parts(), -1);
  for (int v = 0; v < fine.size(); ++v) {
    int& img = image[fine.label(v)];
    if (img < 0) img = coarse.label(v);
    else if (img != coarse.label(v)) return false;
  }
  return true;
}

int trace_components(const Diagram& pi) {
  if (pi.n() != pi.m()) throw ArityMismatch("trace of a non-square diagram " + pi.to_string());
  UnionFind uf(pi.num_parts());
  for (int j = 0; j < pi.n(); ++j) uf.unite(pi.label(j), pi.label(pi.n() + j));
  int c = 0;
  for (int p = 0; p < pi.num_parts(); ++p)
    if (uf.find(p) == p) ++c;
  return c;
}

DiagramStats stats(const Diagram& pi) {
  DiagramStats s;
  s.a = pi.num_parts();
  s.c = trace_components(pi);
  std::vector<bool> paired(s.a, false);
  for (int j = 0; j < pi.n(); ++j)
    if (pi.label(j) == pi.label(pi.n() + j)) paired[pi.label(j)] = true;
  s.b = static_cast<int>(std::count(paired.begin(), paired.end(), true));
  return s;
}

Diagram identity_diagram(int n) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  return permutation_diagram(sigma);
}

Diagram permutation_diagram(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  check_arity(n, n);
  std::array<int, kMaxVertices> labels;
  for (int i = 0; i < n; ++i) {
    labels[i] = i;
    labels[n + sigma[i]] = i;
  }
  return Diagram::from_labels(n, n, labels.data());
}

Diagram evaluation_diagram(int n) {
  check_arity(2 * n, 0);
  std::array<int, kMaxVertices> labels;
  for (int j = 0; j < n; ++j) {
    labels[j] = j;
    labels[2 * n - 1 - j] = j;
  }
  return Diagram::from_labels(2 * n, 0, labels.data());
}

Diagram coevaluation_diagram(int n) { return dual_diagram(evaluation_diagram(n)); }

}  // namespace partcat::diagrams
