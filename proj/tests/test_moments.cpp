#include <cmath>

#include "derangement.hpp"
#include "doctest.h"
#include "moments.hpp"
#include "sequences.hpp"

using namespace derange;

TEST_CASE("exact gamma moments") {
  const GammaParams unit{Rational(1), Rational(1)};
  for (unsigned n = 0; n <= 10; ++n) CHECK(gamma_moment_exact(unit, n) == Rational(factorial(n)));
  CHECK(gamma_moment_exact(unit, 0) == Rational(1));
  CHECK(gamma_moment_exact({Rational(1, 2), Rational(1)}, 2) == Rational(3, 4));
  CHECK(gamma_moment_exact({Rational(2), Rational(3)}, 2) == Rational(6, 9));
  CHECK_THROWS_AS(gamma_moment_exact({Rational(0), Rational(1)}, 1), std::domain_error);
  CHECK_THROWS_AS(gamma_moment_exact({Rational(1), Rational(-2)}, 1), std::domain_error);

  CHECK(gamma_moment(1.0, 1.0, 4) == doctest::Approx(24.0));
  CHECK(gamma_moment(0.5, 1.0, 2) == doctest::Approx(0.75));
  CHECK_THROWS_AS(gamma_moment(-1.0, 1.0, 1), std::domain_error);
}

TEST_CASE("moment identity, named points") {
  CHECK(moment_identity_exact(Rational(0), 4).pass);
  // p = 0, n = 4: the alternating sum is D_4 = 9
  Rational alt(0);
  for (unsigned l = 0; l <= 4; ++l) {
    Rational t(binomial(4, l) * factorial(l));
    alt += (4 - l) % 2 == 0 ? t : -t;
  }
  CHECK(alt == Rational(9));

  // p = 1: only l = n survives, so the sum is n!
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(moment_identity_exact(Rational(1), n).pass);
    CHECK(derangement_poly(n).eval(Rational(1)) == Rational(factorial(n)));
  }

  // p = 2, n = 4: 1 + 4 + 12 + 24 + 24 = 65
  CHECK(moment_identity_exact(Rational(2), 4).pass);
  CHECK(derangement_poly(4).eval(Rational(2)) == Rational(65));
}

TEST_CASE("moment identity grids") {
  IdentityReport plain = verify_moment_grid(20);
  CHECK(plain.pass);
  IdentityReport closed = verify_moment_closed_form(20);
  CHECK(closed.pass);
  IdentityReport trig = verify_trig_moment_grid(15);
  CHECK(trig.pass);
}

TEST_CASE("trigonometric moment identity, named points") {
  // q = 0 collapses onto the plain identity
  for (unsigned n = 0; n <= 8; ++n) CHECK(trig_moment_identity_exact(Rational(1, 2), Rational(0), n).pass);

  // n = 1: cosine side is p, sine side is q
  CHECK(cosine_derangement(1).eval(Rational(3, 4), Rational(5)) == Rational(3, 4));
  CHECK(sine_derangement(1).eval(Rational(3, 4), Rational(5)) == Rational(5));
  CHECK(trig_moment_identity_exact(Rational(3, 4), Rational(5), 1).pass);

  // n = 2 at (0, 1): both sides vanish
  CHECK(cosine_derangement(2).eval(Rational(0), Rational(1)) == Rational(0));
  CHECK(sine_derangement(2).eval(Rational(0), Rational(1)) == Rational(0));
  CHECK(trig_moment_identity_exact(Rational(0), Rational(1), 2).pass);
}

TEST_CASE("monte carlo estimator") {
  MomentEstimate zeroth = mc_moment(0.5, 0.0, 0, McKind::Plain, 10000, 42);
  CHECK(zeroth.mean == 1.0);
  CHECK(zeroth.std_error == 0.0);

  // identical (seed, samples, params) reproduce the estimate bit for bit
  MomentEstimate a = mc_moment(0.5, 0.5, 3, McKind::Cosine, 50000, 7);
  MomentEstimate b = mc_moment(0.5, 0.5, 3, McKind::Cosine, 50000, 7);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  MomentEstimate c = mc_moment(0.5, 0.5, 3, McKind::Cosine, 50000, 8);
  CHECK(a.mean != c.mean);

  CHECK_THROWS_WITH_AS(mc_moment(0.0, 0.0, 1, McKind::Plain, 9999, 1), "insufficient samples",
                       std::invalid_argument);

  // imaginary part of a real power is identically zero
  MomentEstimate sine_degenerate = mc_moment(0.25, 0.0, 3, McKind::Sine, 10000, 5);
  CHECK(sine_degenerate.mean == 0.0);
  CHECK(sine_degenerate.std_error == 0.0);
}

TEST_CASE("monte carlo estimates land near the exact values") {
  struct Config {
    double p, q;
    unsigned n;
    McKind kind;
  };
  const Config configs[] = {
      {0.0, 0.0, 1, McKind::Plain},
      {0.5, 0.0, 2, McKind::Plain},
      {0.5, 0.5, 3, McKind::Cosine},
      {0.5, 0.5, 2, McKind::Sine},
  };
  for (const Config& c : configs) {
    MomentEstimate est = mc_moment(c.p, c.q, c.n, c.kind, 200000, 20240811);
    double exact = mc_exact_value(c.p, c.q, c.n, c.kind);
    INFO(c.n << " " << exact << " " << est.mean << " " << est.std_error);
    CHECK(std::abs(est.mean - exact) <= 4.0 * est.std_error);
  }
}

TEST_CASE("exact targets match the rational evaluations") {
  CHECK(mc_exact_value(0.5, 0.0, 3, McKind::Plain) ==
        doctest::Approx(derangement_poly(3).eval(Rational(1, 2)).to_double()));
  CHECK(mc_exact_value(0.5, 0.5, 3, McKind::Cosine) ==
        doctest::Approx(cosine_derangement(3).eval(Rational(1, 2), Rational(1, 2)).to_double()));
  CHECK(mc_exact_value(0.5, 0.5, 3, McKind::Sine) ==
        doctest::Approx(sine_derangement(3).eval(Rational(1, 2), Rational(1, 2)).to_double()));
}
