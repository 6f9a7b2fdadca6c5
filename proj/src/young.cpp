#include "partcat/young.hpp"

#include <algorithm>
#include <sstream>

namespace partcat::young {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("Young diagram rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("Young diagram rows must be weakly decreasing");
  }
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')') s.push_back(ch);
  if (s.empty() || s == "0" || s == "∅") return YoungDiagram();
  std::vector<int> rows;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw ParseError("not a Young diagram: " + text);
    rows.push_back(std::stoi(item));
  }
  try {
    return YoungDiagram(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": " + text);
  }
}

int YoungDiagram::size() const {
  int s = 0;
  for (int r : rows_) s += r;
  return s;
}

std::string YoungDiagram::to_string() const {
  if (rows_.empty()) return "∅";
  std::string s = "(";
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows_[i]);
  }
  return s + ")";
}

std::vector<YoungDiagram> partitions(int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<YoungDiagram> partitions_up_to(int max_size) {
  std::vector<YoungDiagram> out;
  for (int n = 0; n <= max_size; ++n)
    for (auto& p : partitions(n)) out.push_back(std::move(p));
  return out;
}

unsigned long partition_count(int n) { return partitions(n).size(); }

Completion completion(const YoungDiagram& lambda, const Rational& t0) {
  Completion c;
  Rational first = t0 - lambda.size();
  c.parts.push_back(first);
  for (int r : lambda.rows()) c.parts.push_back(r);
  c.valid = scalars::is_integer(t0) && first >= lambda.row(0);
  return c;
}

YoungDiagram completed_diagram(const YoungDiagram& lambda, long d) {
  long first = d - lambda.size();
  if (first < lambda.row(0))
    throw std::invalid_argument("completion of " + lambda.to_string() + " at " + std::to_string(d) +
                                " is not a Young diagram");
  std::vector<int> rows{static_cast<int>(first)};
  for (int r : lambda.rows()) rows.push_back(r);
  return YoungDiagram(rows);
}

int MuSequence::default_cutoff(const YoungDiagram& lambda, const Rational& t0) {
  // mu_0 can coincide with tail values down to index |lambda| - t0.
  mpz_class ceil_abs;
  mpz_cdiv_q(ceil_abs.get_mpz_t(), Rational(abs(t0)).get_num_mpz_t(), t0.get_den_mpz_t());
  int extra = static_cast<int>(ceil_abs.get_si());
  return std::max(lambda.num_rows(), lambda.size()) + std::max(0, extra) + 1;
}

MuSequence::MuSequence(const YoungDiagram& lambda, const Rational& t0)
    : lambda_(lambda), head0_(t0 - lambda.size()), cutoff_(default_cutoff(lambda, t0)) {}

Rational MuSequence::at(int i) const {
  if (i == 0) return head0_;
  return Rational(lambda_.row(i - 1) - i);
}

std::vector<Rational> MuSequence::head(int k) const {
  std::vector<Rational> out;
  for (int i = 0; i <= k; ++i) out.push_back(at(i));
  return out;
}

std::vector<std::vector<int>> hook_lengths(const YoungDiagram& lambda) {
  std::vector<std::vector<int>> hooks;
  const auto& rows = lambda.rows();
  for (int i = 0; i < lambda.num_rows(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < rows[i]; ++j) {
      int arm = rows[i] - j - 1;
      int leg = 0;
      for (int k = i + 1; k < lambda.num_rows() && rows[k] > j; ++k) ++leg;
      row.push_back(arm + leg + 1);
    }
    hooks.push_back(std::move(row));
  }
  return hooks;
}

scalars::Integer hook_product(const YoungDiagram& lambda) {
  scalars::Integer p = 1;
  for (const auto& row : hook_lengths(lambda))
    for (int h : row) p *= h;
  return p;
}

scalars::Integer dimension(const YoungDiagram& lambda) {
  return scalars::factorial(lambda.size()) / hook_product(lambda);
}

Polynomial p_poly(const YoungDiagram& lambda) {
  const int n = lambda.size();
  std::vector<std::pair<Rational, Rational>> points;
  for (int d = 2 * n; d <= 3 * n; ++d) {
    YoungDiagram full = completed_diagram(lambda, d);
    points.push_back({Rational(d), Rational(dimension(full))});
  }
  return scalars::lagrange_interpolate(points);
}

std::vector<long> p_roots(const YoungDiagram& lambda) {
  const int n = lambda.size();
  std::vector<long> roots;
  for (int i = 1; i <= n; ++i) roots.push_back(n + lambda.row(i - 1) - i);
  std::sort(roots.begin(), roots.end());
  return roots;
}

Dominance dominance(const YoungDiagram& a, const YoungDiagram& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominance needs partitions of equal size");
  bool a_le = true, b_le = true;
  int sa = 0, sb = 0;
  int rows = std::max(a.num_rows(), b.num_rows());
  for (int i = 0; i < rows; ++i) {
    sa += a.row(i);
    sb += b.row(i);
    if (sa > sb) a_le = false;
    if (sb > sa) b_le = false;
  }
  if (a_le && b_le) return Dominance::equal;
  if (a_le) return Dominance::less;
  if (b_le) return Dominance::greater;
  return Dominance::incomparable;
}

}  // namespace partcat::young
