#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace derange {

// Dense univariate polynomial over Rational, coefficients stored by
// ascending power with no trailing zeros. The zero polynomial has an
// empty coefficient list, so structural equality is semantic equality.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);
  explicit Poly(std::vector<Rational> coeffs);
  static Poly x() { return monomial(1); }
  static Poly monomial(unsigned k, const Rational& c = Rational(1));

  int degree() const { return static_cast<int>(coef_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coef_.empty(); }
  Rational coeff(unsigned k) const;  // 0 beyond the degree
  const std::vector<Rational>& coeffs() const { return coef_; }
  Rational leading() const;
  Rational constant() const { return coeff(0); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(Poly a, const Poly& b) { a *= b; return a; }
  friend Poly operator*(Poly a, const Rational& c) { a *= c; return a; }
  friend Poly operator*(const Rational& c, Poly a) { a *= c; return a; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coef_ == b.coef_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;
  // p(a*x + b), expanded exactly.
  Poly affine_compose(const Rational& a, const Rational& b) const;
  Poly derivative() const;
  Rational eval(const Rational& z) const;
  GaussianRational eval(const GaussianRational& z) const;

 private:
  std::vector<Rational> coef_;
  void trim();
};

// Bivariate polynomial in (x, y): sparse map keyed by (x-power, y-power),
// no explicit zero entries.
class BiPoly {
 public:
  using Key = std::pair<unsigned, unsigned>;

  BiPoly() = default;
  BiPoly(const Rational& c);
  static BiPoly monomial(unsigned xp, unsigned yp, const Rational& c = Rational(1));
  static BiPoly from_x_poly(const Poly& p);

  bool is_zero() const { return terms_.empty(); }
  int x_degree() const;
  int y_degree() const;
  Rational coeff(unsigned xp, unsigned yp) const;
  const std::map<Key, Rational>& terms() const { return terms_; }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { a *= b; return a; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { a *= c; return a; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { a *= c; return a; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly pow(unsigned e) const;
  BiPoly partial_x() const;
  BiPoly partial_y() const;
  BiPoly shift_x(const Rational& r) const;  // x -> x + r
  BiPoly negate_y() const;                  // y -> -y
  Poly substitute_y(const Rational& y0) const;
  Poly at_y_zero() const { return substitute_y(Rational(0)); }
  Rational eval(const Rational& a, const Rational& b) const;

 private:
  std::map<Key, Rational> terms_;
  void add_term(unsigned xp, unsigned yp, const Rational& c);
};

}  // namespace derange
