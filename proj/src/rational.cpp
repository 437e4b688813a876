#include "rational.hpp"

namespace derange {

Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("invalid rational literal: '" + s + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::domain_error("rational with zero denominator: '" + s + "'");
  q.canonicalize();
  return wrap(std::move(q));
}

Rational Rational::operator-() const {
  mpq_class r;
  mpq_neg(r.get_mpq_t(), q_.get_mpq_t());
  return wrap(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned long e) const {
  return Rational(int_pow(num(), e), int_pow(den(), e));
}

Rational Rational::abs() const {
  mpq_class r;
  mpq_abs(r.get_mpq_t(), q_.get_mpq_t());
  return wrap(std::move(r));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(den(), num());
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("division by zero");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

GaussianRational GaussianRational::pow(unsigned long e) const {
  GaussianRational acc(Rational(1));
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

std::string GaussianRational::to_string() const {
  if (im.is_zero()) return re.to_string();
  std::string s;
  if (!re.is_zero()) s = re.to_string() + (im.sign() > 0 ? " + " : " - ");
  else if (im.sign() < 0) s = "-";
  Rational a = im.abs();
  s += (a == Rational(1)) ? "i" : a.to_string() + "i";
  return s;
}

}  // namespace derange
