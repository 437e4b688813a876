// Acceptance suite: one pass/fail line per criterion.
// argv[1] must point at the CLI binary.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "derangement.hpp"
#include "identities.hpp"
#include "moments.hpp"
#include "sequences.hpp"
#include "series.hpp"
#include "subprocess.hpp"

using namespace derange;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

bool report(const char* id, bool pass, double seconds, const std::string& what,
            const std::string& detail = "") {
  std::printf("%s %s (%.2f s): %s%s%s\n", pass ? "PASS" : "FAIL", id, seconds, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  return pass;
}

const std::vector<long>& expected_derangements() {
  static const std::vector<long> v{1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496, 1334961};
  return v;
}

// criterion 1: the CLI reproduces the derangement list through n=10 in < 1 s
bool criterion1(const std::string& cli) {
  Timer timer;
  auto res = testutil::run_command("'" + cli + "' seq derangement --n-max 10 --format csv");
  bool ok = res.exit_code == 0;
  std::string detail;
  if (ok) {
    std::istringstream in(res.output);
    std::string line;
    std::getline(in, line);  // header
    ok = line == "n,value";
    for (unsigned n = 0; n <= 10 && ok; ++n) {
      std::getline(in, line);
      ok = line == std::to_string(n) + "," + std::to_string(expected_derangements()[n]);
      if (!ok) detail = "mismatch at n=" + std::to_string(n) + ": '" + line + "'";
    }
  } else {
    detail = "cli exit code " + std::to_string(res.exit_code);
  }
  double s = timer.seconds();
  ok = ok && s < 1.0;
  return report("criterion-1", ok, s, "CLI derangement sequence through n=10", detail);
}

// criterion 2: brute-force oracles agree with the closed forms
bool criterion2() {
  Timer timer;
  bool ok = true;
  std::string detail;
  for (unsigned n = 0; n <= 9 && ok; ++n) {
    ok = brute_force_derangements(n) == derangement_number(n);
    if (!ok) detail = "count mismatch at n=" + std::to_string(n);
  }
  for (unsigned n = 0; n <= 8 && ok; ++n) {
    ok = fixed_point_enumerator(n) == derangement_poly(n);
    if (!ok) detail = "enumerator mismatch at n=" + std::to_string(n);
  }
  double s = timer.seconds();
  ok = ok && s < 10.0;
  return report("criterion-2", ok, s, "permutation oracles match D_n (n<=9) and D_n(x) (n<=8)",
                detail);
}

// criterion 3: every exact identity check passes at n_max=20
bool criterion3() {
  Timer timer;
  VerifyConfig cfg = VerifyConfig::defaults();
  cfg.n_max = 20;
  std::vector<IdentityReport> reports = run_all(cfg);
  const std::vector<std::string> required{
      "lemma-1",    "theorem-2a",   "theorem-2b", "corollary-3", "proposition-5",
      "theorem-6",  "corollary-8",  "theorem-8",  "theorem-9",   "theorem-10",
      "theorem-11", "corollary-12", "theorem-13", "corollary-14", "theorem-15",
      "theorem-16", "theorem-17",   "shift-cosine", "shift-sine", "complex-eval"};
  bool ok = true;
  std::string detail;
  for (const std::string& id : required) {
    bool found = false;
    for (const auto& r : reports)
      if (r.id == id) {
        found = true;
        if (!r.pass) {
          ok = false;
          detail = id + " failed" + (r.witness ? " at " + r.witness->point : "");
        }
      }
    if (!found) {
      ok = false;
      detail = id + " missing from the registry";
    }
  }
  double s = timer.seconds();
  ok = ok && s < 60.0;
  return report("criterion-3", ok, s, "exact identity suite at n_max=20, zero tolerance", detail);
}

// criterion 4: regularized residuals are below 1e-6 and shrink as the tail doubles
bool criterion4() {
  Timer timer;
  bool ok = true;
  std::string detail;
  const std::vector<Rational> xs{Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  for (unsigned n = 0; n <= 6 && ok; ++n)
    for (const Rational& x : xs) {
      double r60 = theorem4_residual(n, x, 60);
      double r120 = theorem4_residual(n, x, 120);
      double r240 = theorem4_residual(n, x, 240);
      ok = r60 < 1e-6 && r120 <= r60 + 1e-12 && r240 <= r120 + 1e-12;
      if (!ok) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "n=%u x=%s residuals %.3e/%.3e/%.3e", n,
                      x.to_string().c_str(), r60, r120, r240);
        detail = buf;
        break;
      }
    }
  return report("criterion-4", ok, timer.seconds(),
                "Abel-regularized residual < 1e-6 with tail 60, monotone under doubling", detail);
}

// criterion 5: exact moment identities on the stated grids
bool criterion5() {
  Timer timer;
  bool ok = verify_moment_grid(20).pass && verify_moment_closed_form(20).pass &&
            verify_trig_moment_grid(15).pass;
  std::string detail;

  // named values: D_4 = 9 from the alternating factorial sum
  Rational alt(0);
  for (unsigned l = 0; l <= 4; ++l) {
    Rational t(binomial(4, l) * factorial(l));
    alt += (4 - l) % 2 == 0 ? t : -t;
  }
  if (alt != Rational(9)) {
    ok = false;
    detail = "alternating sum for D_4 gave " + alt.to_string();
  }
  // D_n(1) = n!
  for (unsigned n = 0; n <= 20 && ok; ++n)
    if (derangement_poly(n).eval(Rational(1)) != Rational(factorial(n))) {
      ok = false;
      detail = "D_n(1) != n! at n=" + std::to_string(n);
    }
  return report("criterion-5", ok, timer.seconds(),
                "exact moment identities (n<=20 plain, n<=15 trigonometric)", detail);
}

// criterion 6: seeded Monte Carlo battery, >= 19/20 seeds within 4 standard errors
bool criterion6() {
  Timer timer;
  struct Config {
    double p, q;
    McKind kind;
    const char* name;
  };
  const std::vector<Config> configs{{0.0, 0.0, McKind::Plain, "p=0"},
                                    {0.5, 0.0, McKind::Plain, "p=1/2"},
                                    {0.5, 0.5, McKind::Cosine, "cos(1/2,1/2)"},
                                    {0.5, 0.5, McKind::Sine, "sin(1/2,1/2)"}};
  bool ok = true;
  std::string detail;
  for (const Config& c : configs) {
    for (unsigned n = 0; n <= 5 && ok; ++n) {
      double exact = mc_exact_value(c.p, c.q, n, c.kind);
      int hits = 0;
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        MomentEstimate est = mc_moment(c.p, c.q, n, c.kind, 1000000, seed);
        if (std::abs(est.mean - exact) <= 4.0 * est.std_error) ++hits;
      }
      if (hits < 19) {
        ok = false;
        detail = std::string(c.name) + " n=" + std::to_string(n) + " hit " +
                 std::to_string(hits) + "/20";
      }
    }
  }
  double s = timer.seconds();
  ok = ok && s < 60.0;
  return report("criterion-6", ok, s,
                "Monte Carlo battery: 10^6 samples, 20 seeds, 4-sigma coverage", detail);
}

// criterion 7: the series engine reproduces every closed form coefficient-wise
bool criterion7() {
  Timer timer;
  const unsigned order = 20;
  bool ok = true;
  std::string detail;
  auto flag = [&](bool cond, const std::string& what) {
    if (ok && !cond) {
      ok = false;
      detail = what;
    }
  };

  TruncatedSeries base =
      TruncatedSeries::exp_ct(Rational(-1), order) * TruncatedSeries::geometric(order);
  for (unsigned n = 0; n <= order; ++n)
    flag(base.egf_coeff(n) == Rational(derangement_number(n)),
         "derangement EGF at n=" + std::to_string(n));

  TruncatedSeries shifted = base * TruncatedSeries::exp_ct(Rational(3, 7), order);
  for (unsigned n = 0; n <= order; ++n)
    flag(shifted.egf_coeff(n) == derangement_poly(n).eval(Rational(3, 7)),
         "derangement polynomial EGF at n=" + std::to_string(n));

  TruncatedSeries bell =
      (TruncatedSeries::exp_ct(Rational(1), order) - TruncatedSeries::one(order)).exp();
  for (unsigned n = 0; n <= order; ++n)
    flag(bell.egf_coeff(n) == Rational(bell_number(n)), "Bell EGF at n=" + std::to_string(n));

  const Rational y(2, 3);
  for (const Rational& x : {Rational(0), Rational(1, 2), Rational(3)}) {
    TruncatedSeries mixed = base * TruncatedSeries::exp_ct(x, order);
    TruncatedSeries cos_side = mixed * TruncatedSeries::cos_yt(y, order);
    TruncatedSeries sin_side = mixed * TruncatedSeries::sin_yt(y, order);
    for (unsigned n = 0; n <= order; ++n) {
      flag(cos_side.egf_coeff(n) == cosine_derangement(n).eval(x, y),
           "cosine EGF at n=" + std::to_string(n) + ", x=" + x.to_string());
      flag(sin_side.egf_coeff(n) == sine_derangement(n).eval(x, y),
           "sine EGF at n=" + std::to_string(n) + ", x=" + x.to_string());
    }
  }
  return report("criterion-7", ok, timer.seconds(),
                "series-engine EGFs match the closed forms through order 20", detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
    return 2;
  }
  bool all = true;
  all &= criterion1(argv[1]);
  all &= criterion2();
  all &= criterion3();
  all &= criterion4();
  all &= criterion5();
  all &= criterion6();
  all &= criterion7();
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES");
  return all ? 0 : 1;
}
