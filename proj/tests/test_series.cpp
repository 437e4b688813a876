#include <random>

#include "derangement.hpp"
#include "doctest.h"
#include "sequences.hpp"
#include "series.hpp"

using namespace derange;

namespace {

constexpr unsigned N = 20;

TruncatedSeries deranged_egf(unsigned order) {
  return TruncatedSeries::exp_ct(Rational(-1), order) / (TruncatedSeries::one(order) - TruncatedSeries::t(order));
}

TruncatedSeries random_nilpotent(std::mt19937& gen, unsigned order) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Rational> cs(order + 1, Rational(0));
  for (unsigned i = 1; i <= order; ++i) cs[i] = Rational(num(gen), den(gen));
  return TruncatedSeries(order, std::move(cs));
}

}  // namespace

TEST_CASE("geometric series inverts 1 - t") {
  TruncatedSeries lhs = (TruncatedSeries::one(N) - TruncatedSeries::t(N)) * TruncatedSeries::geometric(N);
  CHECK(lhs == TruncatedSeries::one(N));
}

TEST_CASE("division") {
  std::mt19937 gen(21);
  TruncatedSeries a = random_nilpotent(gen, N) + TruncatedSeries::one(N);
  CHECK(a / a == TruncatedSeries::one(N));
  TruncatedSeries b = random_nilpotent(gen, N);
  CHECK(a * (b / a) == b);
  CHECK_THROWS_WITH_AS(b / (b - b), "non-unit divisor", std::domain_error);
}

TEST_CASE("the derangement EGF") {
  TruncatedSeries s = deranged_egf(10);
  const long expected[] = {1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496, 1334961};
  for (unsigned n = 0; n <= 10; ++n) CHECK(s.egf_coeff(n) == Rational(expected[n]));
  // same thing built with an explicit product instead of division
  TruncatedSeries t = TruncatedSeries::exp_ct(Rational(-1), 10) * TruncatedSeries::geometric(10);
  CHECK(t == s);
}

TEST_CASE("exp, log, compose") {
  TruncatedSeries t = TruncatedSeries::t(N);
  TruncatedSeries expt = TruncatedSeries::exp_ct(Rational(1), N);
  for (unsigned n = 0; n <= N; ++n) CHECK(expt.coeff(n) == Rational(Integer(1), factorial(n)));
  CHECK(t.exp() == expt);

  TruncatedSeries em1 = expt - TruncatedSeries::one(N);  // e^t - 1
  CHECK(em1.log1p() == t);

  std::mt19937 gen(22);
  for (int i = 0; i < 20; ++i) {
    TruncatedSeries a = random_nilpotent(gen, 12);
    CHECK((a.exp() - TruncatedSeries::one(12)).log1p() == a);  // log(1 + (e^a - 1)) = a
    CHECK(a.log1p().exp() == TruncatedSeries::one(12) + a);    // exp(log(1+a)) = 1+a
  }

  // compose: exp(t) o (e^t - 1) should match exp(e^t - 1)
  CHECK(expt.compose(em1) == em1.exp());

  TruncatedSeries unit = TruncatedSeries::one(N) + t;
  CHECK_THROWS_WITH_AS(unit.exp(), "non-nilpotent argument", std::domain_error);
  CHECK_THROWS_WITH_AS(unit.log1p(), "non-nilpotent argument", std::domain_error);
  CHECK_THROWS_WITH_AS(expt.compose(unit), "non-nilpotent argument", std::domain_error);
}

TEST_CASE("bell numbers from the composed EGF, cross-checked against Stirling sums") {
  TruncatedSeries em1 = TruncatedSeries::exp_ct(Rational(1), N) - TruncatedSeries::one(N);
  TruncatedSeries bell = em1.exp();  // exp(e^t - 1)
  const long first[] = {1, 1, 2, 5, 15, 52};
  for (unsigned n = 0; n < 6; ++n) CHECK(bell.egf_coeff(n) == Rational(first[n]));
  for (unsigned n = 0; n <= N; ++n) {
    Integer row_sum(0);
    for (unsigned k = 0; k <= n; ++k) row_sum += stirling_second(n, k);
    CHECK(bell.egf_coeff(n) == Rational(row_sum));
  }
}

TEST_CASE("trigonometric series") {
  auto [c, s] = trig_series(Rational(1), 4);
  CHECK(c.coeff(0) == Rational(1));
  CHECK(c.coeff(1) == Rational(0));
  CHECK(c.coeff(2) == Rational(-1, 2));
  CHECK(c.coeff(3) == Rational(0));
  CHECK(c.coeff(4) == Rational(1, 24));
  CHECK(s.coeff(1) == Rational(1));
  CHECK(s.coeff(2) == Rational(0));

  TruncatedSeries zero_sin = TruncatedSeries::sin_yt(Rational(0), 6);
  for (unsigned n = 0; n <= 6; ++n) CHECK(zero_sin.coeff(n) == Rational(0));

  CHECK(TruncatedSeries::sin_yt(Rational(2), 5).coeff(3) == Rational(-4, 3));

  for (const Rational& y : {Rational(1), Rational(1, 2), Rational(-2, 3)}) {
    auto [cy, sy] = trig_series(y, N);
    CHECK(cy * cy + sy * sy == TruncatedSeries::one(N));
  }
}

TEST_CASE("EGF coefficient extraction") {
  CHECK(TruncatedSeries::exp_ct(Rational(1), 8).egf_coeff(5) == Rational(1));
  CHECK(deranged_egf(8).egf_coeff(4) == Rational(9));
  TruncatedSeries shifted = deranged_egf(8) * TruncatedSeries::exp_ct(Rational(3, 7), 8);
  CHECK(shifted.egf_coeff(3) == derangement_poly(3).eval(Rational(3, 7)));
  CHECK_THROWS_WITH_AS(deranged_egf(8).egf_coeff(9), "beyond truncation", std::out_of_range);
}

TEST_CASE("order mixing is rejected") {
  TruncatedSeries a(5), b(6);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a.compose(b), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedSeries(3, std::vector<Rational>(6, Rational(1))), std::invalid_argument);
}

TEST_CASE("EGF oracle reproduces the polynomial closed form") {
  for (const Rational& x : {Rational(0), Rational(1), Rational(3, 7), Rational(-2)}) {
    TruncatedSeries s = deranged_egf(N) * TruncatedSeries::exp_ct(x, N);
    for (unsigned n = 0; n <= N; ++n) CHECK(s.egf_coeff(n) == derangement_poly(n).eval(x));
  }
}
