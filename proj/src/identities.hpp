#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "derangement.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace derange {

enum class CheckMode { ExactPoly, ExactPoint, NumericTolerance };
const char* check_mode_name(CheckMode m);

// On failure: the parameter point plus both side values, rendered as text.
struct Witness {
  std::string point;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string id;
  std::string statement;
  CheckMode mode = CheckMode::ExactPoly;
  std::map<std::string, std::string> params;
  bool pass = false;
  std::optional<Witness> witness;
  std::chrono::microseconds elapsed{0};
};

struct VerifyConfig {
  std::optional<unsigned> n_max;  // required; run_all throws without it
  double tolerance = 1e-9;
  unsigned tail_terms = 60;
  std::vector<Rational> grid{Rational(-1), Rational(0), Rational(1, 2), Rational(2, 3), Rational(2)};
  std::optional<std::string> only;

  static VerifyConfig defaults();  // n_max = 20
};

// Generic exact-equality runners over indexed families. Exposed so tests can
// drive them with arbitrary (including deliberately broken) families.
IdentityReport check_poly_family(const std::string& id, const std::string& statement,
                                 unsigned n_lo, unsigned n_hi,
                                 const std::function<Poly(unsigned)>& lhs,
                                 const std::function<Poly(unsigned)>& rhs);
IdentityReport check_bipoly_family(const std::string& id, const std::string& statement,
                                   unsigned n_lo, unsigned n_hi,
                                   const std::function<BiPoly(unsigned)>& lhs,
                                   const std::function<BiPoly(unsigned)>& rhs);

// Individual checks. Each returns a deterministic report; a failed identity
// is a Fail report with a witness, never an exception.
IdentityReport verify_lemma1(unsigned n_max);
IdentityReport verify_theorem2_forward(unsigned n_max);
IdentityReport verify_theorem2_inverse(unsigned n_max);
IdentityReport verify_corollary3(unsigned n_max);
IdentityReport verify_proposition5(unsigned r_max, unsigned n_max);

// The Euler-number identity mixes an exact left side with a divergent right
// side; the right side is given Abel-regularized semantics by splitting
// D_m(x)/m! = e^{x-1} - R_m(x) with R_m the exponential-series tail, so that
// the surviving series converges absolutely. The residual is |LHS - RHS| in
// double precision; everything except e^{x-1} is computed exactly.
double theorem4_residual(unsigned n, const Rational& x, unsigned tail_terms);
IdentityReport verify_theorem4(unsigned n, const Rational& x, unsigned tail_terms, double tolerance);

IdentityReport verify_trig_closed_forms(unsigned n_max);   // theorem-6
IdentityReport verify_cosine_pair_vs_sum(unsigned n_max);  // corollary-8
IdentityReport verify_cosine_egf(unsigned n_max, const std::vector<Rational>& grid);  // theorem-8
IdentityReport verify_cosine_parity_sum(unsigned n_max);   // theorem-9
IdentityReport verify_cosine_recurrence(unsigned n_max);   // theorem-10
IdentityReport verify_appell_cosine(unsigned n_max);       // theorem-11
IdentityReport verify_appell_fixed_y(unsigned n_max, const std::vector<Rational>& grid);  // corollary-12
IdentityReport verify_sine_double_sum(unsigned n_max);     // theorem-13
IdentityReport verify_sine_pair_vs_sum(unsigned n_max);    // corollary-14
IdentityReport verify_sine_parity_sum(unsigned n_max);     // theorem-15
IdentityReport verify_sine_egf(unsigned n_max, const std::vector<Rational>& grid);  // theorem-16
IdentityReport verify_appell_sine(unsigned n_max);         // theorem-17
IdentityReport verify_shift_identity(TrigKind kind, unsigned n_max, unsigned r_max);
IdentityReport verify_complex_eval(unsigned n_max, const std::vector<Rational>& grid);

struct CheckDef {
  std::string id;
  std::string statement;
  CheckMode mode;
  std::function<IdentityReport(const VerifyConfig&)> run;
};

// Every registered check, in execution order.
const std::vector<CheckDef>& check_registry();

// Runs the whole suite (or the single check named by config.only).
// Throws std::invalid_argument on a missing n_max or an unknown check id.
std::vector<IdentityReport> run_all(const VerifyConfig& config);

}  // namespace derange
