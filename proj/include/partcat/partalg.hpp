#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "partcat/diagrams.hpp"
#include "partcat/scalars.hpp"

namespace partcat::partalg {

using diagrams::Diagram;
using scalars::Polynomial;
using scalars::Rational;
using scalars::RationalFunction;
using scalars::TruncatedSeries;

// A linear combination of diagrams of P_{n,m}.  S is Rational (t fixed to a
// number), Polynomial or RationalFunction (symbolic t), or TruncatedSeries
// (t = t0 + u).  The value of t is passed to the operations that need it.
template <class S>
class Element {
 public:
  using Terms = std::map<Diagram, S>;

  Element() = default;
  Element(int n, int m) : n_(n), m_(m) {}
  Element(const Diagram& d, const S& coeff) : n_(d.n()), m_(d.m()) { add(d, coeff); }

  int n() const { return n_; }
  int m() const { return m_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const Diagram& d, const S& coeff) {
    if (d.n() != n_ || d.m() != m_)
      throw ArityMismatch("term " + d.to_string() + " does not match element arities");
    if (scalars::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(d, coeff);
    if (!inserted) {
      it->second += coeff;
      if (scalars::is_zero(it->second)) terms_.erase(it);
    }
  }

  const S* find(const Diagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? nullptr : &it->second;
  }

  Element& operator+=(const Element& o) {
    check_same(o);
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_same(o);
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
  }
  Element& operator*=(const S& c) {
    if (scalars::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= c;
      if (scalars::is_zero(it->second)) it = terms_.erase(it);
      else ++it;
    }
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const S& c, Element a) { return a *= c; }
  friend Element operator-(Element a) {
    for (auto& [d, c] : a.terms_) c = -c;
    return a;
  }
  friend bool operator==(const Element& a, const Element& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const Element& o) const {
    if (o.n_ != n_ || o.m_ != m_) throw ArityMismatch("adding elements of different arities");
  }
  int n_ = 0, m_ = 0;
  Terms terms_;
};

// Powers t^k, built lazily from a sample value of t.
template <class S>
class PowerTable {
 public:
  explicit PowerTable(const S& t) : t_(t) { powers_.push_back(scalars::one_like(t)); }
  const S& operator()(int k) {
    while (static_cast<int>(powers_.size()) <= k) powers_.push_back(powers_.back() * t_);
    return powers_[k];
  }

 private:
  S t_;
  std::vector<S> powers_;
};

// g o f with the weight t^loops on each diagram product.
template <class S>
Element<S> compose(const Element<S>& g, const Element<S>& f, const S& t) {
  if (g.n() != f.m())
    throw ArityMismatch("composing [" + std::to_string(g.n()) + "]->[" + std::to_string(g.m()) +
                        "] after [" + std::to_string(f.n()) + "]->[" + std::to_string(f.m()) + "]");
  PowerTable<S> tp(t);
  std::map<Diagram, S> acc;
  for (const auto& [dg, cg] : g.terms()) {
    for (const auto& [df, cf] : f.terms()) {
      auto comp = diagrams::compose_star(dg, df);
      const S& w = tp(comp.loops);
      if (scalars::is_zero(w)) continue;
      S coeff = cg * cf;
      if (comp.loops) coeff *= w;
      auto [it, inserted] = acc.try_emplace(comp.diagram, coeff);
      if (!inserted) it->second += coeff;
    }
  }
  Element<S> out(f.n(), g.m());
  for (auto& [d, c] : acc) out.add(d, c);
  return out;
}

template <class S>
Element<S> tensor(const Element<S>& a, const Element<S>& b) {
  Element<S> out(a.n() + b.n(), a.m() + b.m());
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) out.add(diagrams::tensor_diagram(da, db), ca * cb);
  return out;
}

template <class S>
Element<S> dual(const Element<S>& a) {
  Element<S> out(a.m(), a.n());
  for (const auto& [d, c] : a.terms()) out.add(diagrams::dual_diagram(d), c);
  return out;
}

template <class S>
S trace(const Element<S>& a, const S& t) {
  if (a.n() != a.m()) throw ArityMismatch("trace of a non-square element");
  PowerTable<S> tp(t);
  S acc = scalars::zero_like(t);
  for (const auto& [d, c] : a.terms()) acc += c * tp(diagrams::trace_components(d));
  return acc;
}

template <class S>
Element<S> identity(int n, const S& one) {
  return Element<S>(diagrams::identity_diagram(n), one);
}

// Applies fn to every coefficient.
template <class T, class S, class Fn>
Element<T> map_scalars(const Element<S>& a, Fn fn) {
  Element<T> out(a.n(), a.m());
  for (const auto& [d, c] : a.terms()) out.add(d, fn(c));
  return out;
}

template <class S>
Element<S> promote(const Element<Rational>& a, const S& one) {
  return map_scalars<S>(a, [&](const Rational& c) {
    S s = one;
    s *= c;
    return s;
  });
}
template <>
inline Element<Polynomial> promote(const Element<Rational>& a, const Polynomial&) {
  return map_scalars<Polynomial>(a, [](const Rational& c) { return Polynomial(c); });
}
template <>
inline Element<RationalFunction> promote(const Element<Rational>& a, const RationalFunction&) {
  return map_scalars<RationalFunction>(a, [](const Rational& c) { return RationalFunction(c); });
}
template <>
inline Element<Rational> promote(const Element<Rational>& a, const Rational&) {
  return a;
}

Element<Rational> evaluate(const Element<Polynomial>& a, const Rational& t0);
// PoleAtPoint if some coefficient has a pole at t0.
Element<Rational> evaluate(const Element<RationalFunction>& a, const Rational& t0);
Element<TruncatedSeries> to_series(const Element<Polynomial>& a, const Rational& t0, int order);
Element<Rational> at_zero(const Element<TruncatedSeries>& a);

// The Mobius-inverted basis element x_pi (memoized).
const Element<Rational>& x_basis(const Diagram& pi);
// The same element computed by the defining recursion
// x_pi = pi - sum over strictly coarser mu of x_mu.
Element<Rational> x_basis_recursive(const Diagram& pi);

// sigma[i] is the image of i (0-based).
Element<Rational> from_permutation(const std::vector<int>& sigma);
Element<Rational> zeta(int n);
// [n] -> [n-1] and [n-1] -> [n] merging the last two strands; their
// composites are id_{n-1} and zeta(n).
Diagram zeta_retraction(int n);
Diagram zeta_section(int n);

struct GramMatrix {
  std::vector<Diagram> basis;
  scalars::PolyMatrix entries;
};
// Trace form on FP_n(t) in the diagram basis (canonical order).
GramMatrix gram_matrix(int n, int cap = 3);
// Same form on an explicit basis of P_{n,n}.
scalars::PolyMatrix gram_matrix(const std::vector<Diagram>& basis);

// True iff tr(h o g) vanishes for every diagram g of P_{m,n}; t0 empty
// means identically in t.
bool is_negligible(const Element<Polynomial>& h, const std::optional<Rational>& t0);

// Matrix of left multiplication a o (-) on FP_{n,m}(t0) in the diagram basis.
std::vector<std::vector<Rational>> left_regular_matrix(const Element<Rational>& a, int source,
                                                       const Rational& t0);
// Two-sided inverse in FP_n(t0), if a is a unit.
std::optional<Element<Rational>> inverse(const Element<Rational>& a, const Rational& t0);

std::string to_string(const Element<Rational>& a);
std::string to_string(const Element<Polynomial>& a);
std::string to_string(const Element<RationalFunction>& a);

}  // namespace partcat::partalg
