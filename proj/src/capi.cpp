#include "derange.h"

#include <cstring>
#include <string>

#include "derangement.hpp"
#include "identities.hpp"
#include "moments.hpp"
#include "render.hpp"
#include "sequences.hpp"

struct drg_poly {
  derange::Poly impl;
};

struct drg_bipoly {
  derange::BiPoly impl;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
drg_status guarded(F&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DRG_EINVAL;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return DRG_EINVAL;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return DRG_EDOMAIN;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return DRG_EINVAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DRG_EINTERNAL;
  }
}

drg_status fail_invalid(const std::string& message) {
  g_last_error = message;
  return DRG_EINVAL;
}

derange::SequenceKind sequence_kind_from(const std::string& kind) {
  if (kind == "derangement") return derange::SequenceKind::Derangement;
  if (kind == "bell") return derange::SequenceKind::Bell;
  if (kind == "euler") return derange::SequenceKind::Euler;
  if (kind == "factorial") return derange::SequenceKind::Factorial;
  throw std::invalid_argument("unknown sequence kind: '" + kind + "'");
}

template <typename Handle>
drg_status render_handle(const Handle* p, const char* format, char** out) {
  if (!out || !p || !format) return fail_invalid("null argument");
  return guarded([&]() -> drg_status {
    std::string fmt(format);
    if (fmt == "text")
      *out = copy_string(derange::to_text(p->impl));
    else if (fmt == "json")
      *out = copy_string(derange::to_json(p->impl).dump());
    else if (fmt == "latex")
      *out = copy_string(derange::to_latex(p->impl));
    else
      throw std::invalid_argument("unknown format: '" + fmt + "'");
    return DRG_OK;
  });
}

}  // namespace

extern "C" {

const char* drg_version(void) { return "1.0.0"; }

const char* drg_last_error(void) { return g_last_error.c_str(); }

void drg_string_free(char* s) { delete[] s; }

drg_status drg_derangement_number(unsigned n, char** out) {
  if (!out) return fail_invalid("null output pointer");
  return guarded([&] {
    *out = copy_string(derange::derangement_number(n).get_str());
    return DRG_OK;
  });
}

drg_status drg_sequence_render(const char* kind, unsigned n_max, const char* format, char** out) {
  if (!out || !kind || !format) return fail_invalid("null argument");
  return guarded([&]() -> drg_status {
    derange::SequenceTable t = derange::sequence_table(sequence_kind_from(kind), n_max);
    std::string fmt(format);
    if (fmt == "csv")
      *out = copy_string(derange::sequence_csv(t));
    else if (fmt == "json")
      *out = copy_string(derange::sequence_json(t).dump(2));
    else if (fmt == "text")
      *out = copy_string(derange::sequence_text(t));
    else
      throw std::invalid_argument("unknown format: '" + fmt + "'");
    return DRG_OK;
  });
}

drg_status drg_stirling_render(int kind, unsigned n_max, const char* format, char** out) {
  if (!out || !format) return fail_invalid("null argument");
  return guarded([&]() -> drg_status {
    if (kind != 1 && kind != 2) throw std::invalid_argument("stirling kind must be 1 or 2");
    derange::StirlingTriangle t = derange::stirling_triangle(
        kind == 1 ? derange::TriangleKind::FirstKindSigned : derange::TriangleKind::SecondKind,
        n_max);
    std::string fmt(format);
    if (fmt == "csv")
      *out = copy_string(derange::triangle_csv(t));
    else if (fmt == "json")
      *out = copy_string(derange::triangle_json(t).dump(2));
    else if (fmt == "text")
      *out = copy_string(derange::triangle_text(t));
    else
      throw std::invalid_argument("unknown format: '" + fmt + "'");
    return DRG_OK;
  });
}

drg_status drg_derangement_poly(unsigned n, drg_poly** out) {
  if (!out) return fail_invalid("null output pointer");
  return guarded([&] {
    *out = new drg_poly{derange::derangement_poly(n)};
    return DRG_OK;
  });
}

drg_status drg_bell_poly(unsigned n, drg_poly** out) {
  if (!out) return fail_invalid("null output pointer");
  return guarded([&] {
    *out = new drg_poly{derange::bell_polynomial(n)};
    return DRG_OK;
  });
}

drg_status drg_cosine_derangement(unsigned n, drg_bipoly** out) {
  if (!out) return fail_invalid("null output pointer");
  return guarded([&] {
    *out = new drg_bipoly{derange::cosine_derangement(n)};
    return DRG_OK;
  });
}

drg_status drg_sine_derangement(unsigned n, drg_bipoly** out) {
  if (!out) return fail_invalid("null output pointer");
  return guarded([&] {
    *out = new drg_bipoly{derange::sine_derangement(n)};
    return DRG_OK;
  });
}

void drg_poly_free(drg_poly* p) { delete p; }

void drg_bipoly_free(drg_bipoly* p) { delete p; }

drg_status drg_poly_render(const drg_poly* p, const char* format, char** out) {
  return render_handle(p, format, out);
}

drg_status drg_bipoly_render(const drg_bipoly* p, const char* format, char** out) {
  return render_handle(p, format, out);
}

drg_status drg_poly_parse_json(const char* json, drg_poly** out) {
  if (!out || !json) return fail_invalid("null argument");
  return guarded([&] {
    nlohmann::json j = nlohmann::json::parse(json, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    *out = new drg_poly{derange::poly_from_json(j)};
    return DRG_OK;
  });
}

drg_status drg_bipoly_parse_json(const char* json, drg_bipoly** out) {
  if (!out || !json) return fail_invalid("null argument");
  return guarded([&] {
    nlohmann::json j = nlohmann::json::parse(json, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    *out = new drg_bipoly{derange::bipoly_from_json(j)};
    return DRG_OK;
  });
}

int drg_poly_equal(const drg_poly* a, const drg_poly* b) {
  return a && b && a->impl == b->impl ? 1 : 0;
}

int drg_bipoly_equal(const drg_bipoly* a, const drg_bipoly* b) {
  return a && b && a->impl == b->impl ? 1 : 0;
}

drg_status drg_poly_eval(const drg_poly* p, const char* x, char** out) {
  if (!out || !p || !x) return fail_invalid("null argument");
  return guarded([&] {
    *out = copy_string(p->impl.eval(derange::Rational::from_string(x)).to_string());
    return DRG_OK;
  });
}

drg_status drg_bipoly_eval(const drg_bipoly* p, const char* x, const char* y, char** out) {
  if (!out || !p || !x || !y) return fail_invalid("null argument");
  return guarded([&] {
    *out = copy_string(p->impl
                           .eval(derange::Rational::from_string(x),
                                 derange::Rational::from_string(y))
                           .to_string());
    return DRG_OK;
  });
}

drg_status drg_check_list(char** out) {
  if (!out) return fail_invalid("null output pointer");
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : derange::check_registry())
      arr.push_back({{"id", d.id},
                     {"statement", d.statement},
                     {"mode", derange::check_mode_name(d.mode)}});
    *out = copy_string(arr.dump(2));
    return DRG_OK;
  });
}

drg_status drg_verify_run(unsigned n_max, double tolerance, unsigned tail_terms, const char* only,
                          char** out_json, int* all_pass) {
  if (!out_json || !all_pass) return fail_invalid("null output pointer");
  return guarded([&] {
    derange::VerifyConfig cfg;
    cfg.n_max = n_max;
    cfg.tolerance = tolerance;
    cfg.tail_terms = tail_terms;
    if (only) cfg.only = std::string(only);
    std::vector<derange::IdentityReport> reports = derange::run_all(cfg);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.pass;
    *all_pass = ok ? 1 : 0;
    *out_json = copy_string(derange::reports_json(reports).dump(2));
    return DRG_OK;
  });
}

drg_status drg_mc_moment(unsigned n, double p, double q, const char* kind, uint64_t samples,
                         uint64_t seed, char** out_json) {
  if (!out_json || !kind) return fail_invalid("null argument");
  return guarded([&]() -> drg_status {
    std::string k(kind);
    derange::McKind mk;
    if (k == "plain")
      mk = derange::McKind::Plain;
    else if (k == "cosine")
      mk = derange::McKind::Cosine;
    else if (k == "sine")
      mk = derange::McKind::Sine;
    else
      throw std::invalid_argument("unknown kind: '" + k + "'");
    derange::MomentEstimate est = derange::mc_moment(p, q, n, mk, samples, seed);
    double exact = derange::mc_exact_value(p, q, n, mk);
    double z = est.std_error > 0.0 ? (est.mean - exact) / est.std_error : 0.0;
    nlohmann::json j{{"kind", k},
                     {"n", n},
                     {"p", p},
                     {"q", q},
                     {"samples", est.samples},
                     {"seed", est.seed},
                     {"mean", est.mean},
                     {"std_error", est.std_error},
                     {"exact_value", exact},
                     {"z_score", z}};
    *out_json = copy_string(j.dump(2));
    return DRG_OK;
  });
}

}  // extern "C"
