#include "partcat/blocks.hpp"

#include <algorithm>
#include <functional>

namespace partcat::blocks {

namespace {

int cutoff_for(const YoungDiagram& a, const YoungDiagram& b, const Rational& t0) {
  return std::max(young::MuSequence::default_cutoff(a, t0), young::MuSequence::default_cutoff(b, t0));
}

std::vector<Rational> sorted_head(const YoungDiagram& lambda, const Rational& t0, int k) {
  auto head = young::MuSequence(lambda, t0).head(k);
  std::sort(head.begin(), head.end());
  return head;
}

bool distinct_entries(const YoungDiagram& lambda, const Rational& t0) {
  auto head = sorted_head(lambda, t0, young::MuSequence::default_cutoff(lambda, t0));
  return std::adjacent_find(head.begin(), head.end()) == head.end();
}

// mu_lambda(d) relabelled so that mu_0 > mu_1 > ...; length covers rows up to `len`.
std::vector<long> sorted_mu(const YoungDiagram& lambda, long d, int len) {
  int k = young::MuSequence::default_cutoff(lambda, Rational(d));
  std::vector<long> mu;
  mu.push_back(d - lambda.size());
  for (int i = 1; i <= std::max(k, len); ++i) mu.push_back(lambda.row(i - 1) - i);
  std::sort(mu.rbegin(), mu.rend());
  return mu;
}

void require_nontrivial(const BlockClass& block) {
  if (block.trivial) throw TrivialClass("the class of " + block.lambda.to_string() + " is trivial");
}

}  // namespace

bool is_nonnegative_integer(const Param& t0) {
  return t0 && scalars::is_integer(*t0) && sgn(*t0) >= 0;
}

bool equivalent(const YoungDiagram& a, const YoungDiagram& b, const Param& t0) {
  if (!is_nonnegative_integer(t0)) return a == b;
  int k = cutoff_for(a, b, *t0);
  return sorted_head(a, *t0, k) == sorted_head(b, *t0, k);
}

BlockClass class_of(const YoungDiagram& lambda, const Param& t0) {
  BlockClass c;
  c.t0 = t0;
  if (!is_nonnegative_integer(t0) || !distinct_entries(lambda, *t0)) {
    c.lambda = lambda;
    return c;
  }
  c.trivial = false;
  c.d = t0->get_num().get_si();
  auto mu = sorted_mu(lambda, c.d, 0);
  std::vector<int> rows;
  for (size_t j = 1; j < mu.size(); ++j) rows.push_back(static_cast<int>(mu[j] + static_cast<long>(j)));
  c.lambda = YoungDiagram(rows);
  return c;
}

std::vector<YoungDiagram> block_members(const BlockClass& block, int count) {
  require_nontrivial(block);
  auto mu = sorted_mu(block.lambda, block.d, count + 1);
  std::vector<YoungDiagram> out;
  for (int i = 0; i <= count; ++i) {
    std::vector<int> rows;
    for (size_t j = 1; j < mu.size(); ++j) {
      long v = static_cast<long>(j) <= i ? mu[j - 1] + static_cast<long>(j) : mu[j] + static_cast<long>(j);
      rows.push_back(static_cast<int>(v));
    }
    out.emplace_back(rows);
  }
  return out;
}

int member_index(const YoungDiagram& lambda, long d) {
  auto c = class_of(lambda, Rational(d));
  require_nontrivial(c);
  int i = lambda.size() - c.lambda.size();
  // Sizes grow by at least one per step, so i bounds the index.
  auto members = block_members(c, i);
  auto it = std::find(members.begin(), members.end(), lambda);
  if (it == members.end()) throw InternalError(lambda.to_string() + " not found in its own class");
  return static_cast<int>(it - members.begin());
}

YoungDiagram minimal_completion(const BlockClass& block) {
  require_nontrivial(block);
  return young::completed_diagram(block.lambda, block.d);
}

Dominance block_compare(const BlockClass& c1, const BlockClass& c2) {
  require_nontrivial(c1);
  require_nontrivial(c2);
  if (c1.d != c2.d)
    throw ParameterMismatch("classes at d=" + std::to_string(c1.d) + " and d=" + std::to_string(c2.d));
  return young::dominance(minimal_completion(c1), minimal_completion(c2));
}

std::vector<YoungDiagram> tensor_box(const YoungDiagram& lambda) {
  auto added = [](const YoungDiagram& l) {
    std::vector<YoungDiagram> out;
    const auto& rows = l.rows();
    for (int i = 0; i <= l.num_rows(); ++i) {
      if (i > 0 && l.row(i) == rows[i - 1]) continue;
      auto next = rows;
      if (i == l.num_rows()) next.push_back(1);
      else ++next[i];
      out.emplace_back(next);
    }
    return out;
  };
  auto removed = [](const YoungDiagram& l) {
    std::vector<YoungDiagram> out;
    const auto& rows = l.rows();
    for (int i = 0; i < l.num_rows(); ++i) {
      if (l.row(i + 1) == rows[i]) continue;
      auto next = rows;
      --next[i];
      out.emplace_back(next);
    }
    return out;
  };
  std::vector<YoungDiagram> out = added(lambda);
  for (const auto& r : removed(lambda)) {
    out.push_back(r);
    for (auto& a : added(r)) out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool tensor_box_mu_check(const YoungDiagram& lambda, const YoungDiagram& nu, long d) {
  Rational t0(d);
  int k = cutoff_for(lambda, nu, t0);
  young::MuSequence a(lambda, t0), b(nu, t0);
  int plus = 0, minus = 0;
  for (int i = 0; i <= k; ++i) {
    Rational diff = a.at(i) - b.at(i);
    if (diff == 1) ++plus;
    else if (diff == -1) ++minus;
    else if (diff != 0) return false;
  }
  return plus == 1 && minus == 1;
}

int hom_dim_predict(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("block indices must be nonnegative");
  if (i == j) return i > 0 ? 2 : 1;
  return std::abs(i - j) == 1 ? 1 : 0;
}

bool category_semisimple(const Param& t0) { return !is_nonnegative_integer(t0); }

bool dim_sign_check(const BlockClass& block, int i_max) {
  require_nontrivial(block);
  Rational d(block.d);
  auto members = block_members(block, i_max);
  Rational base = young::p_poly(members[0]).eval(d);
  for (int i = 0; i <= i_max; ++i) {
    Rational expected = i % 2 ? Rational(-base) : base;
    if (young::p_poly(members[i]).eval(d) != expected) return false;
  }
  return true;
}

BlockClass block_partner(const BlockClass& block) {
  auto rows = minimal_completion(block).rows();
  int m = -1;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    if (rows[i] > 1) m = i;
  if (m < 0) throw MinimalClass("the class with completion (1^" + std::to_string(block.d) + ") is minimal");
  --rows[m];
  rows.push_back(1);
  std::vector<int> tail(rows.begin() + 1, rows.end());
  return class_of(YoungDiagram(tail), Rational(block.d));
}

}  // namespace partcat::blocks
