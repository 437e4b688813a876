#include "poly.hpp"

#include <algorithm>

namespace derange {

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) coef_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coef_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(unsigned k, const Rational& c) {
  Poly p;
  if (c.is_zero()) return p;
  p.coef_.assign(k + 1, Rational(0));
  p.coef_[k] = c;
  return p;
}

void Poly::trim() {
  while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

Rational Poly::coeff(unsigned k) const {
  return k < coef_.size() ? coef_[k] : Rational(0);
}

Rational Poly::leading() const {
  return coef_.empty() ? Rational(0) : coef_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Rational(0));
  for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Rational(0));
  for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coef_.clear();
    return *this;
  }
  std::vector<Rational> out(coef_.size() + o.coef_.size() - 1, Rational(0));
  for (size_t i = 0; i < coef_.size(); ++i)
    for (size_t j = 0; j < o.coef_.size(); ++j) out[i + j] += coef_[i] * o.coef_[j];
  coef_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coef_.clear();
    return *this;
  }
  for (auto& k : coef_) k *= c;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly acc(Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

Poly Poly::affine_compose(const Rational& a, const Rational& b) const {
  // Horner over the substituted variable a*x + b.
  Poly arg(std::vector<Rational>{b, a});
  Poly acc;
  for (size_t i = coef_.size(); i-- > 0;) {
    acc *= arg;
    acc += Poly(coef_[i]);
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coef_.size() <= 1) return Poly();
  std::vector<Rational> out(coef_.size() - 1, Rational(0));
  for (size_t k = 1; k < coef_.size(); ++k) out[k - 1] = coef_[k] * Rational(Integer(k));
  return Poly(std::move(out));
}

Rational Poly::eval(const Rational& z) const {
  Rational acc(0);
  for (size_t i = coef_.size(); i-- > 0;) acc = acc * z + coef_[i];
  return acc;
}

GaussianRational Poly::eval(const GaussianRational& z) const {
  GaussianRational acc;
  for (size_t i = coef_.size(); i-- > 0;) acc = acc * z + GaussianRational(coef_[i]);
  return acc;
}

BiPoly::BiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Key{0, 0}, c);
}

BiPoly BiPoly::monomial(unsigned xp, unsigned yp, const Rational& c) {
  BiPoly p;
  if (!c.is_zero()) p.terms_.emplace(Key{xp, yp}, c);
  return p;
}

BiPoly BiPoly::from_x_poly(const Poly& p) {
  BiPoly r;
  const auto& cs = p.coeffs();
  for (size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) r.terms_.emplace(Key{static_cast<unsigned>(i), 0}, cs[i]);
  return r;
}

int BiPoly::x_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.first));
  return d;
}

int BiPoly::y_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.second));
  return d;
}

Rational BiPoly::coeff(unsigned xp, unsigned yp) const {
  auto it = terms_.find(Key{xp, yp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(unsigned xp, unsigned yp, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{xp, yp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  BiPoly out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  terms_ = std::move(out.terms_);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly acc(Rational(1));
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

BiPoly BiPoly::partial_x() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.first > 0) r.add_term(k.first - 1, k.second, c * Rational(Integer(k.first)));
  return r;
}

BiPoly BiPoly::partial_y() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.second > 0) r.add_term(k.first, k.second - 1, c * Rational(Integer(k.second)));
  return r;
}

BiPoly BiPoly::shift_x(const Rational& r) const {
  if (r.is_zero()) return *this;
  BiPoly out;
  for (const auto& [k, c] : terms_) {
    // (x + r)^i expanded binomially into the x slot.
    Rational rpow(1);
    for (unsigned j = 0; j <= k.first; ++j) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), k.first, j);
      out.add_term(k.first - j, k.second, c * Rational(b) * rpow);
      rpow *= r;
    }
  }
  return out;
}

BiPoly BiPoly::negate_y() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.terms_)
    if (k.second % 2 == 1) c = -c;
  return r;
}

Poly BiPoly::substitute_y(const Rational& y0) const {
  int xd = x_degree();
  if (xd < 0) return Poly();
  std::vector<Rational> out(static_cast<size_t>(xd) + 1, Rational(0));
  for (const auto& [k, c] : terms_) out[k.first] += c * y0.pow(k.second);
  return Poly(std::move(out));
}

Rational BiPoly::eval(const Rational& a, const Rational& b) const {
  Rational acc(0);
  for (const auto& [k, c] : terms_) acc += c * a.pow(k.first) * b.pow(k.second);
  return acc;
}

}  // namespace derange
