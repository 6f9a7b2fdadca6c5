#include "partcat/scalars.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace partcat::scalars {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw ParseError("empty rational");
  auto valid_int = [](const std::string& part) {
    size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("not a rational: " + text);
  if (num[0] == '+') num = num.substr(1);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator: " + text);
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Rational pow(const Rational& x, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Integer r;
  Integer nn(n);
  mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::t() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  Polynomial p;
  if (sgn(c) == 0) return p;
  p.c_.assign(degree + 1, Rational(0));
  p.c_[degree] = c;
  return p;
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial p(1);
  for (const auto& r : roots) p *= Polynomial(std::vector<Rational>{-r, 1});
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shift(const Rational& a) const {
  // Horner in the ring Q[u]: p(a + u).
  Polynomial acc;
  Polynomial lin(std::vector<Rational>{a, 1});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  Polynomial p = *this;
  Rational lead = c_.back();
  for (auto& x : p.c_) x /= lead;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& o) {
  if (sgn(o) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= o;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

namespace {

std::string coeff_prefix(const Rational& c, bool has_var) {
  // c is positive here.
  if (has_var && c == 1) return "";
  if (is_integer(c)) return c.get_str();
  return "(" + c.get_str() + ")";
}

}  // namespace

std::string Polynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    out << coeff_prefix(a, i > 0);
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {Polynomial(), a};
  std::vector<Rational> q(dq + 1, Rational(0));
  const Rational& lead = b.coeffs().back();
  for (int k = dq; k >= 0; --k) {
    Rational f = r[k + db] / lead;
    q[k] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) r[k + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial r(1);
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

namespace {

// Prime factorization by trial division up to a bound; leftover cofactor is
// returned as a single "prime".
std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, int>> out;
  n = abs(n);
  if (n <= 1) return out;
  const unsigned long bound = 2000000;
  for (unsigned long p = 2; p <= bound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({Integer(p), e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> ds{1};
  for (const auto& [p, e] : factor_integer(n)) {
    size_t base = ds.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

}  // namespace

std::map<Rational, int> rational_roots(const Polynomial& p) {
  std::map<Rational, int> roots;
  if (p.degree() <= 0) return roots;
  Polynomial q = p;
  int zero_mult = 0;
  while (sgn(q.coeff(0)) == 0) {
    q = exact_div(q, Polynomial::t());
    ++zero_mult;
  }
  if (zero_mult) roots[Rational(0)] = zero_mult;
  if (q.degree() <= 0) return roots;
  Integer lcm = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer a0 = Rational(q.coeff(0) * lcm).get_num();
  Integer an = Rational(q.leading() * lcm).get_num();
  auto num_divs = divisors(a0);
  auto den_divs = divisors(an);
  std::set<Rational> candidates;
  for (const auto& a : num_divs)
    for (const auto& b : den_divs) {
      Rational r(a, b);
      r.canonicalize();
      candidates.insert(r);
      candidates.insert(-r);
    }
  for (const auto& r : candidates) {
    Polynomial lin(std::vector<Rational>{-r, 1});
    int mult = 0;
    while (q.degree() >= 1 && sgn(q.eval(r)) == 0) {
      q = exact_div(q, lin);
      ++mult;
    }
    if (mult) roots[r] = mult;
  }
  return roots;
}

std::string factored_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  if (p.degree() == 0) return p.leading().get_str();
  auto roots = rational_roots(p);
  Polynomial rest = p.monic();
  std::vector<std::string> factors;
  for (const auto& [r, mult] : roots) {
    Polynomial lin(std::vector<Rational>{-r, 1});
    for (int i = 0; i < mult; ++i) rest = exact_div(rest, lin);
  }
  Rational lead = p.leading();
  std::string prefix;
  if (lead == -1) {
    prefix = "-";
  } else if (lead != 1) {
    prefix = is_integer(lead) ? lead.get_str() : "(" + lead.get_str() + ")";
  }
  // Roots printed in increasing order, t itself first when 0 is a root.
  for (const auto& [r, mult] : roots) {
    std::string f;
    if (sgn(r) == 0) {
      f = var;
    } else {
      f = "(" + var + (sgn(r) > 0 ? "-" : "+") + Rational(abs(r)).get_str() + ")";
    }
    if (mult > 1) f += "^" + std::to_string(mult);
    factors.push_back(f);
  }
  if (rest.degree() >= 1) factors.push_back("(" + rest.to_string(var) + ")");
  std::string out = prefix;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i > 0 || (!prefix.empty() && prefix != "-")) out += "·";
    out += factors[i];
  }
  return out;
}

// ---------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const Rational& c) : num_(c) {}
RationalFunction::RationalFunction(long c) : num_(c) {}
RationalFunction::RationalFunction(const Polynomial& p) : num_(p) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Polynomial RationalFunction::to_polynomial() const {
  if (!is_polynomial()) throw InternalError("rational function is not a polynomial: " + to_string());
  return num_;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunction operator-(RationalFunction a) {
  a.num_ = -a.num_;
  return a;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

Rational ratfunc_eval(const RationalFunction& f, const Rational& t0) {
  Rational d = f.den().eval(t0);
  if (sgn(d) == 0)
    throw PoleAtPoint("denominator " + f.den().to_string() + " vanishes at t=" + t0.get_str());
  return f.num().eval(t0) / d;
}

// ------------------------------------------------------------ TruncatedSeries

TruncatedSeries::TruncatedSeries(Rational base, int order)
    : base_(std::move(base)), c_(order, Rational(0)) {
  if (order <= 0) throw std::invalid_argument("series order must be positive");
}

TruncatedSeries::TruncatedSeries(Rational base, int order, std::vector<Rational> coeffs)
    : TruncatedSeries(std::move(base), order) {
  for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
}

TruncatedSeries TruncatedSeries::constant(const Rational& base, int order, const Rational& c) {
  TruncatedSeries s(base, order);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(const Rational& base, int order) {
  TruncatedSeries s(base, order);
  s.c_[0] = base;
  if (order > 1) s.c_[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, const Rational& base,
                                                 int order) {
  return TruncatedSeries(base, order, p.shift(base).coeffs());
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

int TruncatedSeries::valuation() const {
  for (int i = 0; i < order(); ++i)
    if (sgn(c_[i]) != 0) return i;
  return order();
}

void TruncatedSeries::check(const TruncatedSeries& o) const {
  if (o.c_.size() != c_.size() || o.base_ != base_)
    throw OrderMismatch("series with different base point or truncation order");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  check(o);
  int n = order();
  std::vector<Rational> r(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (int j = 0; i + j < n; ++j)
      if (sgn(o.c_[j]) != 0) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

TruncatedSeries operator-(TruncatedSeries a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.base_ == b.base_ && a.c_ == b.c_;
}

std::string TruncatedSeries::to_string() const {
  Polynomial p{std::vector<Rational>(c_)};
  std::string body = p.to_string("u");
  return body + " + O(u^" + std::to_string(order()) + ")";
}

TruncatedSeries series_invert(const TruncatedSeries& s) {
  if (sgn(s.at_zero()) == 0) throw NotAUnit("series has zero constant term");
  int n = s.order();
  std::vector<Rational> inv(n, Rational(0));
  inv[0] = 1 / s[0];
  for (int k = 1; k < n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += s[j] * inv[k - j];
    inv[k] = -acc * inv[0];
  }
  return TruncatedSeries(s.base(), n, std::move(inv));
}

// ------------------------------------------------------------------- misc

Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw DuplicateAbscissa("abscissa " + points[i].first.get_str() + " repeated");
  Polynomial result;
  for (size_t i = 0; i < points.size(); ++i) {
    Polynomial basis(1);
    Rational denom(1);
    for (size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      basis *= Polynomial(std::vector<Rational>{-points[j].first, 1});
      denom *= points[i].first - points[j].first;
    }
    basis *= Rational(points[i].second / denom);
    result += basis;
  }
  return result;
}

Polynomial polymatrix_det(PolyMatrix m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Polynomial(1);
  Polynomial prev(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Polynomial();
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Polynomial v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(v, prev);
      }
      m[i][k] = Polynomial();
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace partcat::scalars
