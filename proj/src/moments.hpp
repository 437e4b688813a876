#pragma once

#include <cstdint>

#include "identities.hpp"
#include "rational.hpp"

namespace derange {

struct GammaParams {
  Rational alpha;
  Rational lambda;
};

// E[X^n] for X ~ Gamma(alpha, lambda): the rising factorial
// alpha (alpha+1) ... (alpha+n-1) divided by lambda^n. Exact for rational
// parameters; the double overload covers everything else.
Rational gamma_moment_exact(const GammaParams& params, unsigned n);
double gamma_moment(double alpha, double lambda, unsigned n);

// E[(X-1+p)^n] = D_n(p) for X ~ Gamma(1,1), expanded binomially with
// E[X^l] = l! and compared exactly. For p = 0 the plain derangement number
// is checked as well.
IdentityReport moment_identity_exact(const Rational& p, unsigned n);
// The complex-shift analogue: the real/imaginary halves of
// E[(X-1+p+iq)^n] recombine into D^c_n(p,q) and D^s_n(p,q).
IdentityReport trig_moment_identity_exact(const Rational& p, const Rational& q, unsigned n);

// Grid sweeps used by the verification suite.
IdentityReport verify_moment_grid(unsigned n_max);         // id theorem-18
IdentityReport verify_moment_closed_form(unsigned n_max);  // id corollary-19
IdentityReport verify_trig_moment_grid(unsigned n_max);    // id theorem-20

enum class McKind { Plain, Cosine, Sine };

struct MomentEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Seeded Monte Carlo moment of (X-1+p)^n, or of the real/imaginary part of
// (X-1+p+iq)^n, for X ~ Exp(1) = Gamma(1,1). X is drawn by inverse CDF
// -log(1-u) with u taken from std::mt19937_64 through the top 53 bits, so a
// given (seed, samples) pair reproduces the estimate bit for bit. Requires
// samples >= 10^4.
MomentEstimate mc_moment(double p, double q, unsigned n, McKind kind, std::uint64_t samples,
                         std::uint64_t seed);

// The exact value the estimator targets, as a double.
double mc_exact_value(double p, double q, unsigned n, McKind kind);

}  // namespace derange
