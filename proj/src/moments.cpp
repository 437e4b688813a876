#include "moments.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "derangement.hpp"
#include "sequences.hpp"

namespace derange {

Rational gamma_moment_exact(const GammaParams& params, unsigned n) {
  if (params.alpha.sign() <= 0 || params.lambda.sign() <= 0)
    throw std::domain_error("gamma parameters must be positive");
  Rational acc(1);
  for (unsigned i = 0; i < n; ++i) acc *= params.alpha + Rational(Integer(i));
  return acc / params.lambda.pow(n);
}

double gamma_moment(double alpha, double lambda, unsigned n) {
  if (!(alpha > 0.0) || !(lambda > 0.0))
    throw std::domain_error("gamma parameters must be positive");
  double acc = 1.0;
  for (unsigned i = 0; i < n; ++i) acc *= alpha + i;
  return acc / std::pow(lambda, n);
}

IdentityReport moment_identity_exact(const Rational& p, unsigned n) {
  IdentityReport rep;
  rep.id = "theorem-18";
  rep.statement = "E[(X-1+p)^n] = D_n(p) for X ~ Gamma(1,1)";
  rep.mode = CheckMode::ExactPoint;
  rep.params = {{"p", p.to_string()}, {"n", std::to_string(n)}};
  auto start = std::chrono::steady_clock::now();

  const GammaParams unit{Rational(1), Rational(1)};
  Rational lhs(0);
  for (unsigned l = 0; l <= n; ++l)
    lhs += Rational(binomial(n, l)) * (p - Rational(1)).pow(n - l) * gamma_moment_exact(unit, l);
  Rational rhs = derangement_poly(n).eval(p);

  rep.pass = lhs == rhs;
  if (rep.pass && p.is_zero() && lhs != Rational(derangement_number(n))) {
    rep.pass = false;
    rhs = Rational(derangement_number(n));
  }
  if (!rep.pass)
    rep.witness = Witness{"n=" + std::to_string(n) + ", p=" + p.to_string(), lhs.to_string(),
                          rhs.to_string()};
  rep.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return rep;
}

IdentityReport trig_moment_identity_exact(const Rational& p, const Rational& q, unsigned n) {
  IdentityReport rep;
  rep.id = "theorem-20";
  rep.statement =
      "E[((X-1+p+iq)^n + (X-1+p-iq)^n)/2] = D^c_n(p,q), and the sine analogue with 1/(2i)";
  rep.mode = CheckMode::ExactPoint;
  rep.params = {{"p", p.to_string()}, {"q", q.to_string()}, {"n", std::to_string(n)}};
  auto start = std::chrono::steady_clock::now();

  // E[(X-1+p+iq)^n] = sum_l C(n,l) (p-1+iq)^{n-l} l!, exactly over
  // Gaussian rationals; likewise for the conjugate shift.
  auto expect = [&](const GaussianRational& shift) {
    GaussianRational acc;
    for (unsigned l = 0; l <= n; ++l)
      acc += GaussianRational(Rational(binomial(n, l) * factorial(l))) * shift.pow(n - l);
    return acc;
  };
  GaussianRational plus = expect(GaussianRational(p - Rational(1), q));
  GaussianRational minus = expect(GaussianRational(p - Rational(1), -q));

  GaussianRational cos_side = (plus + minus) / GaussianRational(Rational(2));
  GaussianRational sin_side = (plus - minus) / GaussianRational(Rational(0), Rational(2));
  GaussianRational cos_exact(cosine_derangement(n).eval(p, q));
  GaussianRational sin_exact(sine_derangement(n).eval(p, q));

  rep.pass = cos_side == cos_exact && sin_side == sin_exact;
  if (!rep.pass) {
    bool cos_bad = cos_side != cos_exact;
    rep.witness = Witness{"n=" + std::to_string(n) + ", p=" + p.to_string() +
                              ", q=" + q.to_string() + (cos_bad ? " (cos)" : " (sin)"),
                          (cos_bad ? cos_side : sin_side).to_string(),
                          (cos_bad ? cos_exact : sin_exact).to_string()};
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return rep;
}

namespace {

IdentityReport sweep(const std::string& id, const std::string& statement, unsigned n_max,
                     const std::function<IdentityReport(unsigned)>& point) {
  IdentityReport rep;
  rep.id = id;
  rep.statement = statement;
  rep.mode = CheckMode::ExactPoint;
  rep.params["n_max"] = std::to_string(n_max);
  rep.pass = true;
  auto start = std::chrono::steady_clock::now();
  for (unsigned n = 0; n <= n_max && rep.pass; ++n) {
    IdentityReport r = point(n);
    if (!r.pass) {
      rep.pass = false;
      rep.witness = r.witness;
    }
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return rep;
}

const std::vector<Rational>& plain_grid() {
  static const std::vector<Rational> g{Rational(-2), Rational(-1, 2), Rational(0),
                                       Rational(1, 2), Rational(1),   Rational(3)};
  return g;
}

const std::vector<Rational>& trig_grid() {
  static const std::vector<Rational> g{Rational(-1), Rational(0), Rational(1, 2), Rational(2)};
  return g;
}

}  // namespace

IdentityReport verify_moment_grid(unsigned n_max) {
  return sweep("theorem-18", "E[(X-1+p)^n] = D_n(p) for X ~ Gamma(1,1)", n_max, [&](unsigned n) {
    for (const Rational& p : plain_grid()) {
      IdentityReport r = moment_identity_exact(p, n);
      if (!r.pass) return r;
    }
    return moment_identity_exact(Rational(0), n);
  });
}

IdentityReport verify_moment_closed_form(unsigned n_max) {
  return sweep(
      "corollary-19", "D_n(p) = sum_l C(n,l) (p-1)^{n-l} l!, with the p=0 alternating case", n_max,
      [&](unsigned n) {
        IdentityReport rep;
        rep.pass = true;
        for (const Rational& p : plain_grid()) {
          Rational sum(0);
          for (unsigned l = 0; l <= n; ++l)
            sum += Rational(binomial(n, l) * factorial(l)) * (p - Rational(1)).pow(n - l);
          Rational expected = derangement_poly(n).eval(p);
          if (sum != expected) {
            rep.pass = false;
            rep.witness = Witness{"n=" + std::to_string(n) + ", p=" + p.to_string(),
                                  sum.to_string(), expected.to_string()};
            return rep;
          }
        }
        Rational alt(0);
        for (unsigned l = 0; l <= n; ++l) {
          Rational t(binomial(n, l) * factorial(l));
          alt += (n - l) % 2 == 0 ? t : -t;
        }
        if (alt != Rational(derangement_number(n))) {
          rep.pass = false;
          rep.witness = Witness{"n=" + std::to_string(n) + ", p=0 (alternating)", alt.to_string(),
                                Rational(derangement_number(n)).to_string()};
        }
        return rep;
      });
}

IdentityReport verify_trig_moment_grid(unsigned n_max) {
  return sweep("theorem-20", "trigonometric moments of Gamma(1,1) shifts match D^c_n and D^s_n",
               n_max, [&](unsigned n) {
                 for (const Rational& p : trig_grid())
                   for (const Rational& q : trig_grid()) {
                     IdentityReport r = trig_moment_identity_exact(p, q, n);
                     if (!r.pass) return r;
                   }
                 return trig_moment_identity_exact(Rational(0), Rational(0), n);
               });
}

namespace {

double eval_double(const Poly& p, double x) {
  double acc = 0.0;
  const auto& cs = p.coeffs();
  for (size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i].to_double();
  return acc;
}

double eval_double(const BiPoly& p, double x, double y) {
  double acc = 0.0;
  for (const auto& [k, c] : p.terms())
    acc += c.to_double() * std::pow(x, k.first) * std::pow(y, k.second);
  return acc;
}

double real_pow(double base, unsigned n) {
  double acc = 1.0;
  for (unsigned i = 0; i < n; ++i) acc *= base;
  return acc;
}

std::complex<double> complex_pow(std::complex<double> base, unsigned n) {
  std::complex<double> acc(1.0, 0.0);
  for (unsigned i = 0; i < n; ++i) acc *= base;
  return acc;
}

}  // namespace

MomentEstimate mc_moment(double p, double q, unsigned n, McKind kind, std::uint64_t samples,
                         std::uint64_t seed) {
  if (samples < 10000) throw std::invalid_argument("insufficient samples");
  std::mt19937_64 gen(seed);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    // top 53 bits -> uniform in [0, 1); fixed mapping, not
    // std::uniform_real_distribution, which is implementation-defined
    double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    double x = -std::log1p(-u);
    double shifted = x - 1.0 + p;
    double v;
    if (kind == McKind::Plain) {
      v = real_pow(shifted, n);
    } else {
      std::complex<double> z = complex_pow({shifted, q}, n);
      v = (kind == McKind::Cosine) ? z.real() : z.imag();
    }
    sum += v;
    sum_sq += v * v;
  }
  const double nd = static_cast<double>(samples);
  const double mean = sum / nd;
  double variance = (sum_sq - nd * mean * mean) / (nd - 1.0);
  if (variance < 0.0) variance = 0.0;  // cancellation on degenerate streams
  return MomentEstimate{mean, std::sqrt(variance / nd), samples, seed};
}

double mc_exact_value(double p, double q, unsigned n, McKind kind) {
  switch (kind) {
    case McKind::Plain: return eval_double(derangement_poly(n), p);
    case McKind::Cosine: return eval_double(cosine_derangement(n), p, q);
    case McKind::Sine: return eval_double(sine_derangement(n), p, q);
  }
  return 0.0;
}

}  // namespace derange
