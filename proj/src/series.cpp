#include "series.hpp"

#include <stdexcept>

namespace derange {

namespace {
Integer factorial_of(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}
}  // namespace

TruncatedSeries::TruncatedSeries(unsigned order)
    : order_(order), c_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
  if (c_.size() > order_ + 1)
    throw std::invalid_argument("coefficient list longer than truncation order allows");
  c_.resize(order_ + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::one(unsigned order) {
  TruncatedSeries s(order);
  s.c_[0] = Rational(1);
  return s;
}

TruncatedSeries TruncatedSeries::t(unsigned order) {
  TruncatedSeries s(order);
  if (order >= 1) s.c_[1] = Rational(1);
  return s;
}

TruncatedSeries TruncatedSeries::exp_ct(const Rational& c, unsigned order) {
  TruncatedSeries s(order);
  Rational term(1);
  s.c_[0] = term;
  for (unsigned n = 1; n <= order; ++n) {
    term = term * c / Rational(Integer(n));
    s.c_[n] = term;
  }
  return s;
}

TruncatedSeries TruncatedSeries::geometric(unsigned order) {
  TruncatedSeries s(order);
  for (unsigned n = 0; n <= order; ++n) s.c_[n] = Rational(1);
  return s;
}

TruncatedSeries TruncatedSeries::cos_yt(const Rational& y, unsigned order) {
  TruncatedSeries s(order);
  Rational term(1);  // (-1)^m y^{2m} / (2m)!
  s.c_[0] = term;
  for (unsigned m = 1; 2 * m <= order; ++m) {
    term = -term * y * y / Rational(Integer(2 * m - 1)) / Rational(Integer(2 * m));
    s.c_[2 * m] = term;
  }
  return s;
}

TruncatedSeries TruncatedSeries::sin_yt(const Rational& y, unsigned order) {
  TruncatedSeries s(order);
  if (order < 1) return s;
  Rational term = y;  // (-1)^m y^{2m+1} / (2m+1)!
  s.c_[1] = term;
  for (unsigned m = 1; 2 * m + 1 <= order; ++m) {
    term = -term * y * y / Rational(Integer(2 * m)) / Rational(Integer(2 * m + 1));
    s.c_[2 * m + 1] = term;
  }
  return s;
}

const Rational& TruncatedSeries::coeff(unsigned n) const {
  if (n > order_) throw std::out_of_range("beyond truncation");
  return c_[n];
}

Rational TruncatedSeries::egf_coeff(unsigned n) const {
  if (n > order_) throw std::out_of_range("beyond truncation");
  return c_[n] * Rational(factorial_of(n));
}

void TruncatedSeries::require_same_order(const TruncatedSeries& o) const {
  if (order_ != o.order_) throw std::invalid_argument("truncation order mismatch");
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(o);
  for (unsigned n = 0; n <= order_; ++n) c_[n] += o.c_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(o);
  for (unsigned n = 0; n <= order_; ++n) c_[n] -= o.c_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  require_same_order(o);
  std::vector<Rational> out(order_ + 1, Rational(0));
  for (unsigned i = 0; i <= order_; ++i) {
    if (c_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= order_; ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator/=(const TruncatedSeries& o) {
  require_same_order(o);
  if (o.c_[0].is_zero()) throw std::domain_error("non-unit divisor");
  std::vector<Rational> q(order_ + 1, Rational(0));
  for (unsigned n = 0; n <= order_; ++n) {
    Rational acc = c_[n];
    for (unsigned k = 1; k <= n; ++k) acc -= o.c_[k] * q[n - k];
    q[n] = acc / o.c_[0];
  }
  c_ = std::move(q);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& k : c_) k *= c;
  return *this;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!c_[0].is_zero()) throw std::domain_error("non-nilpotent argument");
  // e' = a' e  gives  n e_n = sum_{k=1..n} k a_k e_{n-k}.
  TruncatedSeries e(order_);
  e.c_[0] = Rational(1);
  for (unsigned n = 1; n <= order_; ++n) {
    Rational acc(0);
    for (unsigned k = 1; k <= n; ++k) acc += Rational(Integer(k)) * c_[k] * e.c_[n - k];
    e.c_[n] = acc / Rational(Integer(n));
  }
  return e;
}

TruncatedSeries TruncatedSeries::log1p() const {
  if (!c_[0].is_zero()) throw std::domain_error("non-nilpotent argument");
  // (1+a) l' = a'  gives  n l_n = n a_n - sum_{j=1..n-1} j l_j a_{n-j}.
  TruncatedSeries l(order_);
  for (unsigned n = 1; n <= order_; ++n) {
    Rational acc = Rational(Integer(n)) * c_[n];
    for (unsigned j = 1; j < n; ++j) acc -= Rational(Integer(j)) * l.c_[j] * c_[n - j];
    l.c_[n] = acc / Rational(Integer(n));
  }
  return l;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  require_same_order(inner);
  if (!inner.c_[0].is_zero()) throw std::domain_error("non-nilpotent argument");
  // Horner over the inner series.
  TruncatedSeries acc(order_);
  for (unsigned i = order_ + 1; i-- > 0;) {
    acc *= inner;
    acc.c_[0] += c_[i];
  }
  return acc;
}

std::pair<TruncatedSeries, TruncatedSeries> trig_series(const Rational& y, unsigned order) {
  return {TruncatedSeries::cos_yt(y, order), TruncatedSeries::sin_yt(y, order)};
}

}  // namespace derange
