#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace derange {

// Arbitrary-precision integer. GMP does the heavy lifting.
using Integer = mpz_class;

// base^e for nonnegative integer exponents.
Integer int_pow(const Integer& base, unsigned long e);

// Exact rational scalar. Canonical at all times: lowest terms,
// denominator > 0, zero is 0/1. Structural equality is semantic equality.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  // Parses "num" or "num/den", base 10.
  static Rational from_string(const std::string& s);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational pow(unsigned long e) const;
  Rational abs() const;
  Rational inverse() const;

  double to_double() const { return q_.get_d(); }
  std::string to_string() const { return q_.get_str(); }

 private:
  struct raw_tag {};
  Rational(raw_tag, mpq_class q) : q_(std::move(q)) {}
  static Rational wrap(mpq_class q) { return Rational(raw_tag{}, std::move(q)); }
  mpq_class q_;  // invariant: canonical
};

// Complex number with rational components; field arithmetic is exact.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_real() const { return im.is_zero(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational conj() const { return GaussianRational(re, -im); }
  Rational norm() const { return re * re + im * im; }  // re^2 + im^2

  GaussianRational operator-() const { return GaussianRational(-re, -im); }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { a += b; return a; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { a -= b; return a; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { a *= b; return a; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { a /= b; return a; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational pow(unsigned long e) const;
  std::string to_string() const;
};

}  // namespace derange
