#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "partcat/errors.hpp"

namespace partcat::scalars {

// mpq_class keeps values in lowest terms with positive denominator after
// every arithmetic operation; values built from strings are canonicalized
// by parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& text);
// num/den in lowest terms.
Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Rational& x);
bool is_integer(const Rational& x);
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
Rational pow(const Rational& x, unsigned k);
Integer factorial(unsigned k);
Integer binomial(long n, long k);

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants promote implicitly
  Polynomial(long c);             // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial t();
  static Polynomial monomial(const Rational& c, int degree);
  // Product (t - r_1)(t - r_2)...
  static Polynomial from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Rational eval(const Rational& x) const;
  // Coefficients of p(a + u) in u.
  Polynomial shift(const Rational& a) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Human readable, e.g. "t^2 - 3t + 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Throws InternalError if b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, unsigned k);

// Rational roots with multiplicity, found among rational-root-theorem
// candidates.  Candidate enumeration factors integers by trial division;
// cofactors above the trial bound are treated as prime.
std::map<Rational, int> rational_roots(const Polynomial& p);
// "(1/24)·t·(t-1)·(t-2)·(t-5)·(t-7)"; an unfactored remainder is printed
// in parentheses at the end.
std::string factored_string(const Polynomial& p, const std::string& var = "t");

class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const Rational& c);    // NOLINT
  RationalFunction(long c);               // NOLINT
  RationalFunction(const Polynomial& p);  // NOLINT
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction t() { return RationalFunction(Polynomial::t()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  Polynomial to_polynomial() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_ = Polynomial(1);
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
Rational ratfunc_eval(const RationalFunction& f, const Rational& t0);

// Power series in u = T - base, truncated modulo u^order.
class TruncatedSeries {
 public:
  TruncatedSeries(Rational base, int order);
  TruncatedSeries(Rational base, int order, std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& base, int order, const Rational& c);
  // The series of T itself: base + u.
  static TruncatedSeries variable(const Rational& base, int order);
  static TruncatedSeries from_polynomial(const Polynomial& p, const Rational& base, int order);

  const Rational& base() const { return base_; }
  int order() const { return static_cast<int>(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int i) const { return c_[i]; }
  const Rational& at_zero() const { return c_[0]; }
  bool is_zero() const;
  // Index of the first nonzero coefficient, or order() for zero.
  int valuation() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator-(TruncatedSeries a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string to_string() const;

 private:
  void check(const TruncatedSeries& o) const;
  Rational base_;
  std::vector<Rational> c_;
};

inline bool is_zero(const TruncatedSeries& s) { return s.is_zero(); }
// Inverse modulo u^order; NotAUnit if the constant term vanishes.
TruncatedSeries series_invert(const TruncatedSeries& s);

// Unit and zero of the same kind as a sample value (series need base/order).
inline Rational one_like(const Rational&) { return Rational(1); }
inline Polynomial one_like(const Polynomial&) { return Polynomial(1); }
inline RationalFunction one_like(const RationalFunction&) { return RationalFunction(1); }
inline TruncatedSeries one_like(const TruncatedSeries& s) {
  return TruncatedSeries::constant(s.base(), s.order(), 1);
}
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Polynomial zero_like(const Polynomial&) { return Polynomial(); }
inline RationalFunction zero_like(const RationalFunction&) { return RationalFunction(); }
inline TruncatedSeries zero_like(const TruncatedSeries& s) {
  return TruncatedSeries(s.base(), s.order());
}
inline std::string to_string(const Polynomial& p) { return p.to_string(); }
inline std::string to_string(const RationalFunction& f) { return f.to_string(); }
inline std::string to_string(const TruncatedSeries& s) { return s.to_string(); }

Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

using PolyMatrix = std::vector<std::vector<Polynomial>>;
// Fraction-free (Bareiss) elimination over Q[t].
Polynomial polymatrix_det(PolyMatrix m);

}  // namespace partcat::scalars
