#include "identities.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "moments.hpp"
#include "render.hpp"
#include "sequences.hpp"
#include "series.hpp"

namespace derange {

const char* check_mode_name(CheckMode m) {
  switch (m) {
    case CheckMode::ExactPoly: return "exact-poly";
    case CheckMode::ExactPoint: return "exact-point";
    case CheckMode::NumericTolerance: return "numeric-tolerance";
  }
  return "?";
}

VerifyConfig VerifyConfig::defaults() {
  VerifyConfig cfg;
  cfg.n_max = 20;
  return cfg;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Collects the first failing point; timing is attached in finish().
class CheckRun {
 public:
  CheckRun(std::string id, std::string statement, CheckMode mode)
      : t0_(std::chrono::steady_clock::now()) {
    rep_.id = std::move(id);
    rep_.statement = std::move(statement);
    rep_.mode = mode;
    rep_.pass = true;
  }

  void param(const std::string& key, const std::string& value) { rep_.params[key] = value; }

  bool failed() const { return !rep_.pass; }

  void fail(const std::string& point, const std::string& lhs, const std::string& rhs) {
    if (!rep_.pass) return;
    rep_.pass = false;
    rep_.witness = Witness{point, lhs, rhs};
  }

  void require_poly(const std::string& point, const Poly& lhs, const Poly& rhs) {
    if (!rep_.pass || lhs == rhs) return;
    fail(point, to_text(lhs), to_text(rhs));
  }

  void require_bipoly(const std::string& point, const BiPoly& lhs, const BiPoly& rhs) {
    if (!rep_.pass || lhs == rhs) return;
    fail(point, to_text(lhs), to_text(rhs));
  }

  void require_rational(const std::string& point, const Rational& lhs, const Rational& rhs) {
    if (!rep_.pass || lhs == rhs) return;
    fail(point, lhs.to_string(), rhs.to_string());
  }

  void require_gaussian(const std::string& point, const GaussianRational& lhs,
                        const GaussianRational& rhs) {
    if (!rep_.pass || lhs == rhs) return;
    fail(point, lhs.to_string(), rhs.to_string());
  }

  void require_residual(const std::string& point, double lhs, double rhs, double tolerance) {
    if (!rep_.pass || std::abs(lhs - rhs) < tolerance) return;
    fail(point, format_double(lhs), format_double(rhs));
  }

  IdentityReport finish() {
    rep_.elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0_);
    return std::move(rep_);
  }

 private:
  IdentityReport rep_;
  std::chrono::steady_clock::time_point t0_;
};

std::string point_n(unsigned n) { return "n=" + std::to_string(n); }

int parity_sign(unsigned long k) { return k % 2 == 0 ? 1 : -1; }

Poly one_minus_x_pow(unsigned e) {
  return Poly(std::vector<Rational>{Rational(1), Rational(-1)}).pow(e);
}

Poly x_minus_one_pow(unsigned e) {
  return Poly(std::vector<Rational>{Rational(-1), Rational(1)}).pow(e);
}

}  // namespace

IdentityReport check_poly_family(const std::string& id, const std::string& statement,
                                 unsigned n_lo, unsigned n_hi,
                                 const std::function<Poly(unsigned)>& lhs,
                                 const std::function<Poly(unsigned)>& rhs) {
  CheckRun run(id, statement, CheckMode::ExactPoly);
  run.param("n_max", std::to_string(n_hi));
  for (unsigned n = n_lo; n <= n_hi && !run.failed(); ++n)
    run.require_poly(point_n(n), lhs(n), rhs(n));
  return run.finish();
}

IdentityReport check_bipoly_family(const std::string& id, const std::string& statement,
                                   unsigned n_lo, unsigned n_hi,
                                   const std::function<BiPoly(unsigned)>& lhs,
                                   const std::function<BiPoly(unsigned)>& rhs) {
  CheckRun run(id, statement, CheckMode::ExactPoly);
  run.param("n_max", std::to_string(n_hi));
  for (unsigned n = n_lo; n <= n_hi && !run.failed(); ++n)
    run.require_bipoly(point_n(n), lhs(n), rhs(n));
  return run.finish();
}

IdentityReport verify_lemma1(unsigned n_max) {
  return check_poly_family(
      "lemma-1", "D_n(x) - n D_{n-1}(x) = (x-1)^n", 1, n_max,
      [](unsigned n) { return derangement_poly(n) - Rational(Integer(n)) * derangement_poly(n - 1); },
      [](unsigned n) { return x_minus_one_pow(n); });
}

IdentityReport verify_theorem2_forward(unsigned n_max) {
  return check_poly_family(
      "theorem-2a", "Bel_n(1-x) = sum_{j<=n} sum_{l<=j} C(n,j) (-1)^l D_l(x) S2(j,l)", 0, n_max,
      [](unsigned n) { return bell_polynomial(n).affine_compose(Rational(-1), Rational(1)); },
      [](unsigned n) {
        Poly acc;
        for (unsigned j = 0; j <= n; ++j)
          for (unsigned l = 0; l <= j; ++l) {
            Rational c(binomial(n, j) * stirling_second(j, l) * parity_sign(l));
            acc += derangement_poly(l) * c;
          }
        return acc;
      });
}

IdentityReport verify_theorem2_inverse(unsigned n_max) {
  return check_poly_family(
      "theorem-2b", "D_n(x) = sum_{l<=n} sum_{m<=l} C(l,m) Bel_m(1-x) (-1)^{n-m-l} S1(n,l)", 0, n_max,
      [](unsigned n) { return derangement_poly(n); },
      [](unsigned n) {
        Poly acc;
        for (unsigned l = 0; l <= n; ++l)
          for (unsigned m = 0; m <= l; ++m) {
            Rational c(binomial(l, m) * stirling_first(n, l) * parity_sign(n + m + l));
            acc += bell_polynomial(m).affine_compose(Rational(-1), Rational(1)) * c;
          }
        return acc;
      });
}

IdentityReport verify_corollary3(unsigned n_max) {
  CheckRun run("corollary-3", "Bel_n and D_n as mutual double sums (the x=0 specialization)",
               CheckMode::ExactPoint);
  run.param("n_max", std::to_string(n_max));
  for (unsigned n = 0; n <= n_max && !run.failed(); ++n) {
    Rational bell_sum(0);
    for (unsigned j = 0; j <= n; ++j)
      for (unsigned l = 0; l <= j; ++l)
        bell_sum += Rational(binomial(n, j) * stirling_second(j, l) * derangement_number(l) *
                             parity_sign(l));
    run.require_rational(point_n(n) + " (Bel)", Rational(bell_number(n)), bell_sum);
    Rational d_sum(0);
    for (unsigned l = 0; l <= n; ++l)
      for (unsigned m = 0; m <= l; ++m)
        d_sum += Rational(binomial(l, m) * bell_number(m) * stirling_first(n, l) *
                          parity_sign(n + m + l));
    run.require_rational(point_n(n) + " (D)", Rational(derangement_number(n)), d_sum);
  }
  return run.finish();
}

IdentityReport verify_proposition5(unsigned r_max, unsigned n_max) {
  CheckRun run("proposition-5",
               "C(r+n-1,n) = (1/n!) sum_k sum_{l_1+..+l_{r-1}=k} C(k;l) C(n,k) D_{l_1}..D_{l_{r-1}} "
               "D_{n-k}(r)",
               CheckMode::ExactPoint);
  run.param("n_max", std::to_string(n_max));
  run.param("r_max", std::to_string(r_max));
  std::vector<unsigned> parts;
  std::function<void(unsigned, unsigned, Integer&)> enumerate =
      [&](unsigned remaining, unsigned slots, Integer& acc) {
        if (slots == 0) {
          if (remaining != 0) return;
          unsigned k = 0;
          for (unsigned p : parts) k += p;
          Integer prod = multinomial(k, parts);
          for (unsigned p : parts) prod *= derangement_number(p);
          acc += prod;
          return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
          parts.push_back(v);
          enumerate(remaining - v, slots - 1, acc);
          parts.pop_back();
        }
      };
  for (unsigned r = 1; r <= r_max && !run.failed(); ++r) {
    for (unsigned n = 0; n <= n_max && !run.failed(); ++n) {
      Rational total(0);
      for (unsigned k = 0; k <= n; ++k) {
        Integer inner(0);
        enumerate(k, r - 1, inner);
        total += Rational(inner * binomial(n, k)) *
                 derangement_poly(n - k).eval(Rational(Integer(r)));
      }
      total /= Rational(factorial(n));
      run.require_rational("r=" + std::to_string(r) + ", " + point_n(n),
                           Rational(binomial(r + n - 1, n)), total);
    }
  }
  return run.finish();
}

double theorem4_residual(unsigned n, const Rational& x, unsigned tail_terms) {
  if (tail_terms < n + 40) throw std::invalid_argument("tail_terms must be at least n + 40");
  Rational lhs(0);
  for (unsigned m = 0; m <= n; ++m)
    lhs += bell_polynomial(m).affine_compose(Rational(-1), Rational(1)).eval(x) *
           euler_number(n - m) * Rational(binomial(n, m));

  // Exponential-series terms t_j = (x-1)^j / j! and their tails
  // R_m = sum_{j>m} t_j, cut at J where t_J is far below any tolerance
  // in play.
  const unsigned J = tail_terms + 40;
  std::vector<Rational> term(J + 1);
  term[0] = Rational(1);
  for (unsigned j = 1; j <= J; ++j)
    term[j] = term[j - 1] * (x - Rational(1)) / Rational(Integer(j));
  std::vector<Rational> tail(J + 2, Rational(0));
  for (unsigned j = J; j >= 1; --j) tail[j] = tail[j + 1] + term[j];

  Rational alternating(0);
  for (unsigned m = 0; m <= tail_terms; ++m) {
    Rational t = Rational(int_pow(Integer(m), n)) * tail[m + 1];
    if (m % 2 == 0)
      alternating += t;
    else
      alternating -= t;
  }

  const double e = std::exp(x.to_double() - 1.0);
  const double rhs = 2.0 * e * (e * euler_number(n).to_double() / 2.0 - alternating.to_double());
  return std::abs(lhs.to_double() - rhs);
}

IdentityReport verify_theorem4(unsigned n, const Rational& x, unsigned tail_terms, double tolerance) {
  CheckRun run("theorem-4",
               "sum_m Bel_m(1-x) E_{n-m} C(n,m) = 2 e^{x-1} * Abel-sum_m (-1)^m D_m(x) m^n / m!",
               CheckMode::NumericTolerance);
  run.param("n", std::to_string(n));
  run.param("x", x.to_string());
  run.param("tail_terms", std::to_string(tail_terms));
  run.param("tolerance", format_double(tolerance));
  double residual = theorem4_residual(n, x, tail_terms);
  run.require_residual(point_n(n) + ", x=" + x.to_string(), residual, 0.0, tolerance);
  return run.finish();
}

IdentityReport verify_trig_closed_forms(unsigned n_max) {
  CheckRun run("theorem-6", "complex-pair expansions of D^c_n and D^s_n match the bivariate builds",
               CheckMode::ExactPoly);
  run.param("n_max", std::to_string(n_max));
  for (unsigned n = 0; n <= n_max && !run.failed(); ++n) {
    run.require_bipoly(point_n(n) + " (cos)", cosine_via_complex_pair(n), cosine_derangement(n));
    run.require_bipoly(point_n(n) + " (sin)", sine_via_complex_pair(n), sine_derangement(n));
  }
  return run.finish();
}

IdentityReport verify_cosine_pair_vs_sum(unsigned n_max) {
  return check_bipoly_family(
      "corollary-8", "cosine complex-pair expansion equals the cosine double sum", 0, n_max,
      [](unsigned n) { return cosine_via_complex_pair(n); },
      [](unsigned n) { return cosine_derangement(n); });
}

namespace {

// EGF comparison: e^{-t}/(1-t) e^{x0 t} (cos|sin)(y0 t) against the exact
// bivariate builds evaluated at (x0, y0), coefficient by coefficient.
void egf_trig_points(CheckRun& run, TrigKind kind, unsigned n_max,
                     const std::vector<Rational>& grid) {
  for (const Rational& x0 : grid) {
    for (const Rational& y0 : grid) {
      if (run.failed()) return;
      TruncatedSeries s = TruncatedSeries::exp_ct(Rational(-1), n_max) *
                          TruncatedSeries::geometric(n_max) *
                          TruncatedSeries::exp_ct(x0, n_max);
      s *= (kind == TrigKind::Cosine) ? TruncatedSeries::cos_yt(y0, n_max)
                                      : TruncatedSeries::sin_yt(y0, n_max);
      for (unsigned n = 0; n <= n_max && !run.failed(); ++n) {
        const BiPoly p =
            (kind == TrigKind::Cosine) ? cosine_derangement(n) : sine_derangement(n);
        run.require_rational(
            point_n(n) + ", x=" + x0.to_string() + ", y=" + y0.to_string(),
            s.egf_coeff(n), p.eval(x0, y0));
      }
    }
  }
}

}  // namespace

IdentityReport verify_cosine_egf(unsigned n_max, const std::vector<Rational>& grid) {
  CheckRun run("theorem-8", "EGF of e^{-t}/(1-t) e^{xt} cos(yt) matches D^c_n at sampled (x,y)",
               CheckMode::ExactPoint);
  run.param("n_max", std::to_string(n_max));
  egf_trig_points(run, TrigKind::Cosine, n_max, grid);
  return run.finish();
}

IdentityReport verify_sine_egf(unsigned n_max, const std::vector<Rational>& grid) {
  CheckRun run("theorem-16", "EGF of e^{-t}/(1-t) e^{xt} sin(yt) matches D^s_n at sampled (x,y)",
               CheckMode::ExactPoint);
  run.param("n_max", std::to_string(n_max));
  egf_trig_points(run, TrigKind::Sine, n_max, grid);
  return run.finish();
}

IdentityReport verify_cosine_parity_sum(unsigned n_max) {
  return check_bipoly_family(
      "theorem-9",
      "(1-x)^n + sum_{m=1..n} C(n,m) (1-x)^{n-m} (D^c_m - m D^c_{m-1}) is (-1)^k y^{2k} for n=2k, "
      "else 0",
      1, n_max,
      [](unsigned n) {
        BiPoly acc = BiPoly::from_x_poly(one_minus_x_pow(n));
        for (unsigned m = 1; m <= n; ++m) {
          BiPoly diff = cosine_derangement(m) - Rational(Integer(m)) * cosine_derangement(m - 1);
          acc += BiPoly::from_x_poly(one_minus_x_pow(n - m)) * diff * Rational(binomial(n, m));
        }
        return acc;
      },
      [](unsigned n) {
        if (n % 2 != 0) return BiPoly();
        return BiPoly::monomial(0, n, Rational(parity_sign(n / 2)));
      });
}

IdentityReport verify_cosine_recurrence(unsigned n_max) {
  return check_bipoly_family(
      "theorem-10", "D^c_n - n D^c_{n-1} = sum_m C(n,2m) (-1)^m (x-1)^{n-2m} y^{2m}", 1, n_max,
      [](unsigned n) {
        return cosine_derangement(n) - Rational(Integer(n)) * cosine_derangement(n - 1);
      },
      [](unsigned n) {
        BiPoly acc;
        for (unsigned m = 0; 2 * m <= n; ++m) {
          Rational c(binomial(n, 2 * m) * parity_sign(m));
          acc += BiPoly::from_x_poly(x_minus_one_pow(n - 2 * m)) * BiPoly::monomial(0, 2 * m, c);
        }
        return acc;
      });
}

IdentityReport verify_appell_cosine(unsigned n_max) {
  CheckRun run("theorem-11", "d/dx D^c_n = n D^c_{n-1} with D^c_0 = 1, and d/dx D_n = n D_{n-1}",
               CheckMode::ExactPoly);
  run.param("n_max", std::to_string(n_max));
  run.require_bipoly("n=0 (constant term)", cosine_derangement(0), BiPoly(Rational(1)));
  for (unsigned n = 1; n <= n_max && !run.failed(); ++n) {
    run.require_bipoly(point_n(n), cosine_derangement(n).partial_x(),
                       Rational(Integer(n)) * cosine_derangement(n - 1));
    run.require_poly(point_n(n) + " (univariate)", derangement_poly(n).derivative(),
                     Rational(Integer(n)) * derangement_poly(n - 1));
  }
  return run.finish();
}

IdentityReport verify_appell_fixed_y(unsigned n_max, const std::vector<Rational>& grid) {
  CheckRun run("corollary-12", "for each fixed rational y, x -> D^c_n(x,y) is an Appell sequence",
               CheckMode::ExactPoly);
  run.param("n_max", std::to_string(n_max));
  for (const Rational& y0 : grid) {
    for (unsigned n = 1; n <= n_max && !run.failed(); ++n) {
      Poly lhs = cosine_derangement(n).substitute_y(y0).derivative();
      Poly rhs = Rational(Integer(n)) * cosine_derangement(n - 1).substitute_y(y0);
      run.require_poly(point_n(n) + ", y=" + y0.to_string(), lhs, rhs);
    }
  }
  return run.finish();
}

IdentityReport verify_sine_double_sum(unsigned n_max) {
  return check_bipoly_family(
      "theorem-13", "D^s_n = sum_{j=1..n} sum_m C(j,2m+1) C(n,j) x^{j-2m-1} y^{2m+1} D_{n-j}", 0,
      n_max, [](unsigned n) { return sine_via_double_sum(n); },
      [](unsigned n) { return sine_derangement(n); });
}

IdentityReport verify_sine_pair_vs_sum(unsigned n_max) {
  return check_bipoly_family(
      "corollary-14", "sine complex-pair expansion equals the sine double sum", 0, n_max,
      [](unsigned n) { return sine_via_complex_pair(n); },
      [](unsigned n) { return sine_via_double_sum(n); });
}

IdentityReport verify_sine_parity_sum(unsigned n_max) {
  return check_bipoly_family(
      "theorem-15",
      "sum_{k=1..n} C(n,k) (D^s_k - k D^s_{k-1}) (1-x)^{n-k} is (-1)^{m-1} y^{2m-1} for n=2m-1, "
      "else 0",
      1, n_max,
      [](unsigned n) {
        BiPoly acc;
        for (unsigned k = 1; k <= n; ++k) {
          BiPoly diff = sine_derangement(k) - Rational(Integer(k)) * sine_derangement(k - 1);
          acc += BiPoly::from_x_poly(one_minus_x_pow(n - k)) * diff * Rational(binomial(n, k));
        }
        return acc;
      },
      [](unsigned n) {
        if (n % 2 == 0) return BiPoly();
        unsigned m = (n + 1) / 2;
        return BiPoly::monomial(0, n, Rational(parity_sign(m - 1)));
      });
}

IdentityReport verify_appell_sine(unsigned n_max) {
  return check_bipoly_family(
      "theorem-17", "d/dx D^s_n = n D^s_{n-1}", 1, n_max,
      [](unsigned n) { return sine_derangement(n).partial_x(); },
      [](unsigned n) { return Rational(Integer(n)) * sine_derangement(n - 1); });
}

IdentityReport verify_shift_identity(TrigKind kind, unsigned n_max, unsigned r_max) {
  const bool cosine = (kind == TrigKind::Cosine);
  CheckRun run(cosine ? "shift-cosine" : "shift-sine",
               cosine ? "D^c_n(x+r,y) = sum_l C(n,l) D^c_l(x,y) r^{n-l}"
                      : "D^s_n(x+r,y) = sum_l C(n,l) D^s_l(x,y) r^{n-l}",
               CheckMode::ExactPoly);
  run.param("n_max", std::to_string(n_max));
  run.param("r_max", std::to_string(r_max));
  auto trig = [&](unsigned n) { return cosine ? cosine_derangement(n) : sine_derangement(n); };
  for (unsigned r = 0; r <= r_max && !run.failed(); ++r) {
    for (unsigned n = 0; n <= n_max && !run.failed(); ++n) {
      BiPoly lhs = trig(n).shift_x(Rational(Integer(r)));
      BiPoly rhs;
      for (unsigned l = 0; l <= n; ++l)
        rhs += trig(l) * (Rational(binomial(n, l)) * Rational(Integer(r)).pow(n - l));
      run.require_bipoly(point_n(n) + ", r=" + std::to_string(r), lhs, rhs);
    }
  }
  return run.finish();
}

IdentityReport verify_complex_eval(unsigned n_max, const std::vector<Rational>& grid) {
  CheckRun run("complex-eval",
               "(D_n(x+iy) +/- D_n(x-iy)) recombinations equal D^c_n and D^s_n on a rational grid",
               CheckMode::ExactPoint);
  run.param("n_max", std::to_string(n_max));
  const GaussianRational two(Rational(2));
  const GaussianRational two_i(Rational(0), Rational(2));
  for (const Rational& x0 : grid) {
    for (const Rational& y0 : grid) {
      for (unsigned n = 0; n <= n_max && !run.failed(); ++n) {
        GaussianRational plus = derangement_complex_eval(n, GaussianRational(x0, y0));
        GaussianRational minus = derangement_complex_eval(n, GaussianRational(x0, -y0));
        std::string at = point_n(n) + ", x=" + x0.to_string() + ", y=" + y0.to_string();
        run.require_gaussian(at + " (cos)", (plus + minus) / two,
                             GaussianRational(cosine_derangement(n).eval(x0, y0)));
        run.require_gaussian(at + " (sin)", (plus - minus) / two_i,
                             GaussianRational(sine_derangement(n).eval(x0, y0)));
      }
    }
  }
  return run.finish();
}

namespace {

// The one numeric check. Residuals are absolute and the left side grows
// like the Euler numbers, so the sweep stays on the small-n grid where an
// absolute bound is meaningful; verify_theorem4 covers arbitrary points.
IdentityReport theorem4_sweep(const VerifyConfig& cfg) {
  CheckRun run("theorem-4",
               "sum_m Bel_m(1-x) E_{n-m} C(n,m) = 2 e^{x-1} * Abel-sum_m (-1)^m D_m(x) m^n / m!",
               CheckMode::NumericTolerance);
  unsigned n_hi = std::min(*cfg.n_max, 6u);
  run.param("n_max", std::to_string(n_hi));
  run.param("tail_terms", std::to_string(cfg.tail_terms));
  run.param("tolerance", format_double(cfg.tolerance));
  const std::vector<Rational> xs{Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  for (unsigned n = 0; n <= n_hi && !run.failed(); ++n)
    for (const Rational& x : xs) {
      if (run.failed()) break;
      run.require_residual(point_n(n) + ", x=" + x.to_string(),
                           theorem4_residual(n, x, cfg.tail_terms), 0.0, cfg.tolerance);
    }
  return run.finish();
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = {
      {"lemma-1", "D_n(x) - n D_{n-1}(x) = (x-1)^n", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_lemma1(*c.n_max); }},
      {"theorem-2a", "Bel_n(1-x) as a double sum over D_l(x) and S2", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_theorem2_forward(*c.n_max); }},
      {"theorem-2b", "D_n(x) as a double sum over Bel_m(1-x) and S1", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_theorem2_inverse(*c.n_max); }},
      {"corollary-3", "the x=0 specialization of both transforms", CheckMode::ExactPoint,
       [](const VerifyConfig& c) { return verify_corollary3(*c.n_max); }},
      {"theorem-4", "Euler-number identity under Abel regularization", CheckMode::NumericTolerance,
       theorem4_sweep},
      {"proposition-5", "negative-binomial coefficients from derangement products",
       CheckMode::ExactPoint,
       [](const VerifyConfig& c) { return verify_proposition5(5, std::min(*c.n_max, 10u)); }},
      {"theorem-6", "complex-pair closed forms of D^c_n and D^s_n", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_trig_closed_forms(*c.n_max); }},
      {"corollary-8", "cosine complex pair vs cosine double sum", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_cosine_pair_vs_sum(*c.n_max); }},
      {"theorem-8", "cosine EGF vs the double-sum build", CheckMode::ExactPoint,
       [](const VerifyConfig& c) { return verify_cosine_egf(*c.n_max, c.grid); }},
      {"theorem-9", "cosine parity collapse", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_cosine_parity_sum(*c.n_max); }},
      {"theorem-10", "cosine recurrence", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_cosine_recurrence(*c.n_max); }},
      {"theorem-11", "cosine Appell derivative", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_appell_cosine(*c.n_max); }},
      {"corollary-12", "Appell property at fixed y", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_appell_fixed_y(*c.n_max, c.grid); }},
      {"theorem-13", "sine double sum", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_sine_double_sum(*c.n_max); }},
      {"corollary-14", "sine complex pair vs sine double sum", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_sine_pair_vs_sum(*c.n_max); }},
      {"theorem-15", "sine parity collapse", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_sine_parity_sum(*c.n_max); }},
      {"theorem-16", "sine EGF vs the single-sum build", CheckMode::ExactPoint,
       [](const VerifyConfig& c) { return verify_sine_egf(*c.n_max, c.grid); }},
      {"theorem-17", "sine Appell derivative", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_appell_sine(*c.n_max); }},
      {"shift-cosine", "cosine argument shift", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_shift_identity(TrigKind::Cosine, *c.n_max, 4); }},
      {"shift-sine", "sine argument shift", CheckMode::ExactPoly,
       [](const VerifyConfig& c) { return verify_shift_identity(TrigKind::Sine, *c.n_max, 4); }},
      {"complex-eval", "complex evaluation vs bivariate builds", CheckMode::ExactPoint,
       [](const VerifyConfig& c) { return verify_complex_eval(*c.n_max, c.grid); }},
      {"theorem-18", "E[(X-1+p)^n] = D_n(p) for X ~ Gamma(1,1)", CheckMode::ExactPoint,
       [](const VerifyConfig& c) { return verify_moment_grid(*c.n_max); }},
      {"corollary-19", "D_n(p) = sum_l C(n,l) (p-1)^{n-l} l!", CheckMode::ExactPoint,
       [](const VerifyConfig& c) { return verify_moment_closed_form(*c.n_max); }},
      {"theorem-20", "trigonometric moments of Gamma(1,1) shifts", CheckMode::ExactPoint,
       [](const VerifyConfig& c) { return verify_trig_moment_grid(std::min(*c.n_max, 15u)); }},
  };
  return defs;
}

std::vector<IdentityReport> run_all(const VerifyConfig& config) {
  if (!config.n_max) throw std::invalid_argument("missing n_max");
  const auto& defs = check_registry();
  if (config.only) {
    bool known = false;
    for (const auto& d : defs) known = known || d.id == *config.only;
    if (!known) throw std::invalid_argument("unknown check id: '" + *config.only + "'");
  }
  std::vector<IdentityReport> reports;
  for (const auto& d : defs) {
    if (config.only && d.id != *config.only) continue;
    reports.push_back(d.run(config));
  }
  return reports;
}

}  // namespace derange
