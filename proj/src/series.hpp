#pragma once

#include <utility>
#include <vector>

#include "rational.hpp"

namespace derange {

// Truncated formal power series over Rational: c_0 + c_1 t + ... + c_N t^N
// with N the fixed truncation order. Coefficients are ordinary; the
// exponential-generating-function coefficient at index n is n! * c_n.
//
// All binary operations require equal orders; mixing orders throws rather
// than silently truncating.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order);
  TruncatedSeries(unsigned order, std::vector<Rational> coeffs);

  static TruncatedSeries one(unsigned order);
  static TruncatedSeries t(unsigned order);
  // e^{c t}
  static TruncatedSeries exp_ct(const Rational& c, unsigned order);
  // 1/(1-t)
  static TruncatedSeries geometric(unsigned order);
  static TruncatedSeries cos_yt(const Rational& y, unsigned order);
  static TruncatedSeries sin_yt(const Rational& y, unsigned order);

  unsigned order() const { return order_; }
  const Rational& coeff(unsigned n) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  // n! * c_n; n beyond the order throws.
  Rational egf_coeff(unsigned n) const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator/=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { a += b; return a; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { a -= b; return a; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { a *= b; return a; }
  friend TruncatedSeries operator/(TruncatedSeries a, const TruncatedSeries& b) { a /= b; return a; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { a *= c; return a; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { a *= c; return a; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  // exp(a); requires zero constant term.
  TruncatedSeries exp() const;
  // log(1 + a); requires zero constant term.
  TruncatedSeries log1p() const;
  // this(inner); inner must have zero constant term.
  TruncatedSeries compose(const TruncatedSeries& inner) const;

 private:
  unsigned order_;
  std::vector<Rational> c_;  // size order_ + 1
  void require_same_order(const TruncatedSeries& o) const;
};

// cos(yt) and sin(yt) as a pair.
std::pair<TruncatedSeries, TruncatedSeries> trig_series(const Rational& y, unsigned order);

}  // namespace derange
