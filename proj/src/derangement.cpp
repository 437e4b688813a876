#include "derangement.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sequences.hpp"

namespace derange {

namespace {

Rational falling_quotient(unsigned n, unsigned m) {
  // n! / m! for m <= n
  Integer r(1);
  for (unsigned i = m + 1; i <= n; ++i) r *= i;
  return Rational(r);
}

}  // namespace

Poly derangement_poly_taylor_form(unsigned n) {
  Poly acc;
  Poly xm1(std::vector<Rational>{Rational(-1), Rational(1)});
  Poly pw(Rational(1));
  for (unsigned m = 0; m <= n; ++m) {
    acc += pw * falling_quotient(n, m);
    pw *= xm1;
  }
  return acc;
}

Poly derangement_poly_binomial_form(unsigned n) {
  Poly acc;
  for (unsigned l = 0; l <= n; ++l)
    acc += Poly::monomial(n - l, Rational(binomial(n, l) * derangement_number(l)));
  return acc;
}

namespace {

Poly build_derangement_poly(unsigned n) {
  Poly p = derangement_poly_taylor_form(n);
  if (p != derangement_poly_binomial_form(n))
    throw std::logic_error("internal cross-check failure: derangement polynomial closed forms differ");
  if (p.degree() != static_cast<int>(n) || p.leading() != Rational(1) ||
      p.constant() != Rational(derangement_number(n)) ||
      p.eval(Rational(1)) != Rational(factorial(n)))
    throw std::logic_error("internal cross-check failure: derangement polynomial invariants");
  return p;
}

}  // namespace

Poly derangement_poly(unsigned n) {
  static std::mutex mu;
  static std::vector<Poly> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) cache.push_back(build_derangement_poly(static_cast<unsigned>(cache.size())));
  return cache[n];
}

Poly fixed_point_enumerator(unsigned n) {
  if (n > 8) throw std::domain_error("oracle too large");
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<Rational> counts(n + 1, Rational(0));
  do {
    unsigned fix = 0;
    for (unsigned i = 0; i < n; ++i)
      if (perm[i] == i) ++fix;
    counts[fix] += Rational(1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Poly(std::move(counts));
}

namespace {

// Bivariate polynomial with Gaussian-rational coefficients, as a
// (real, imaginary) pair. Only what the complex-pair expansions need.
struct GaussianBiPoly {
  BiPoly re, im;
};

GaussianBiPoly operator*(const GaussianBiPoly& a, const GaussianBiPoly& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BiPoly build_cosine(unsigned n) {
  BiPoly acc;
  for (unsigned m = 0; 2 * m <= n; ++m) {
    for (unsigned k = 2 * m; k <= n; ++k) {
      Rational c(binomial(n, k) * binomial(k, 2 * m) * derangement_number(n - k));
      if (m % 2 == 1) c = -c;
      acc += BiPoly::monomial(k - 2 * m, 2 * m, c);
    }
  }
  return acc;
}

BiPoly build_sine(unsigned n) {
  BiPoly acc;
  for (unsigned m = 0; 2 * m + 1 <= n; ++m) {
    Rational c(binomial(n, 2 * m + 1));
    if (m % 2 == 1) c = -c;
    acc += BiPoly::from_x_poly(derangement_poly(n - 2 * m - 1)) * BiPoly::monomial(0, 2 * m + 1, c);
  }
  return acc;
}

// Shared worker for the complex-pair routes. Powers of w = (x-1) + iy and
// of its conjugate are expanded independently; the combination that must be
// real (or purely imaginary) is asserted so, not assumed.
BiPoly complex_pair_expansion(unsigned n, TrigKind kind) {
  GaussianBiPoly w{BiPoly::from_x_poly(Poly(std::vector<Rational>{Rational(-1), Rational(1)})),
                   BiPoly::monomial(0, 1, Rational(1))};
  GaussianBiPoly wbar{w.re, -w.im};
  GaussianBiPoly wp{BiPoly(Rational(1)), BiPoly()};
  GaussianBiPoly wbarp = wp;
  BiPoly acc;
  for (unsigned m = 0; m <= n; ++m) {
    if (m > 0) {
      wp = wp * w;
      wbarp = wbarp * wbar;
    }
    Rational scale = falling_quotient(n, m) * Rational(1, 2);
    if (kind == TrigKind::Cosine) {
      if (wp.im + wbarp.im != BiPoly())
        throw std::logic_error("internal cross-check failure: complex pair has nonzero imaginary part");
      acc += (wp.re + wbarp.re) * scale;
    } else {
      if (wp.re - wbarp.re != BiPoly())
        throw std::logic_error("internal cross-check failure: complex pair has nonzero real part");
      acc += (wp.im - wbarp.im) * scale;
    }
  }
  return acc;
}

}  // namespace

BiPoly cosine_via_complex_pair(unsigned n) { return complex_pair_expansion(n, TrigKind::Cosine); }

BiPoly sine_via_complex_pair(unsigned n) { return complex_pair_expansion(n, TrigKind::Sine); }

BiPoly sine_via_double_sum(unsigned n) {
  BiPoly acc;
  for (unsigned j = 1; j <= n; ++j) {
    for (unsigned m = 0; 2 * m + 1 <= j; ++m) {
      Rational c(binomial(j, 2 * m + 1) * binomial(n, j) * derangement_number(n - j));
      if (m % 2 == 1) c = -c;  // alternating sign from the sine series
      acc += BiPoly::monomial(j - 2 * m - 1, 2 * m + 1, c);
    }
  }
  return acc;
}

BiPoly cosine_derangement(unsigned n) {
  static std::mutex mu;
  static std::vector<BiPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    unsigned k = static_cast<unsigned>(cache.size());
    BiPoly p = build_cosine(k);
    if (p != cosine_via_complex_pair(k))
      throw std::logic_error("internal cross-check failure: cosine-derangement expansions differ");
    cache.push_back(std::move(p));
  }
  return cache[n];
}

BiPoly sine_derangement(unsigned n) {
  static std::mutex mu;
  static std::vector<BiPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    unsigned k = static_cast<unsigned>(cache.size());
    BiPoly p = build_sine(k);
    if (p != sine_via_complex_pair(k) || p != sine_via_double_sum(k))
      throw std::logic_error("internal cross-check failure: sine-derangement expansions differ");
    cache.push_back(std::move(p));
  }
  return cache[n];
}

GaussianRational derangement_complex_eval(unsigned n, const GaussianRational& z) {
  GaussianRational shifted = z - GaussianRational(Rational(1));
  GaussianRational acc;
  GaussianRational pw(Rational(1));
  for (unsigned m = 0; m <= n; ++m) {
    if (m > 0) pw *= shifted;
    acc += pw * GaussianRational(falling_quotient(n, m));
  }
  return acc;
}

}  // namespace derange
