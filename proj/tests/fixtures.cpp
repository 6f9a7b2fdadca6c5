#include "fixtures.hpp"

namespace fixtures {

namespace pa = partcat::partalg;
namespace dg = partcat::diagrams;

namespace {

Element<Rational> unit_diagram(const Diagram& d) { return Element<Rational>(d, Rational(1)); }

std::vector<Element<Rational>> base_idempotents(int n, const Rational& t0) {
  std::vector<Element<Rational>> out;
  const auto id = pa::identity(n, Rational(1));
  out.push_back(id);
  out.push_back(Element<Rational>(n, n));
  const bool invertible_t = sgn(t0) != 0;
  if (n == 1) {
    if (invertible_t) {
      auto p = unit_diagram(Diagram::parse("{1}{1'}", 1, 1));
      p *= Rational(1) / t0;
      out.push_back(p);
      out.push_back(id - p);
    }
  }
  if (n == 2) {
    auto swap = unit_diagram(dg::permutation_diagram({1, 0}));
    auto sym = id + swap, alt = id - swap;
    sym *= Rational(1, 2);
    alt *= Rational(1, 2);
    out.push_back(sym);
    out.push_back(alt);
    auto zeta = pa::zeta(2);
    out.push_back(zeta);
    out.push_back(id - zeta);
    if (invertible_t) {
      auto cup = unit_diagram(Diagram::parse("{1,2}{1',2'}", 2, 2));
      cup *= Rational(1) / t0;
      out.push_back(cup);
      out.push_back(id - cup);
      auto half = unit_diagram(Diagram::parse("{1,1'}{2}{2'}", 2, 2));
      half *= Rational(1) / t0;
      out.push_back(half);
      out.push_back(id - half);
    }
  }
  return out;
}

}  // namespace

Diagram random_diagram(std::mt19937& rng, int n, int m) {
  std::vector<int> labels(n + m);
  int next = 0;
  for (auto& l : labels) {
    std::uniform_int_distribution<int> pick(0, next);
    l = pick(rng);
    if (l == next) ++next;
  }
  return Diagram::from_labels(n, m, labels.data());
}

Element<Rational> random_idempotent(std::mt19937& rng, int n, const Rational& t0) {
  auto bases = base_idempotents(n, t0);
  std::uniform_int_distribution<size_t> which(0, bases.size() - 1);
  const auto e = bases[which(rng)];
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int attempt = 0; attempt < 50; ++attempt) {
    auto u = pa::identity(n, Rational(1));
    for (int k = 0; k < 2; ++k) u.add(random_diagram(rng, n, n), partcat::scalars::make_rational(coeff(rng), 2));
    auto inv = pa::inverse(u, t0);
    if (!inv) continue;
    return pa::compose(pa::compose(u, e, t0), *inv, t0);
  }
  return e;
}

}  // namespace fixtures
