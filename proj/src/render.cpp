#include "render.hpp"

#include <algorithm>
#include <sstream>

namespace derange {

namespace {

struct Term {
  Rational coeff;
  unsigned xp = 0;
  unsigned yp = 0;
};

std::string power_text(const std::string& var, unsigned e, bool latex) {
  if (e == 0) return "";
  if (e == 1) return var;
  if (latex) return var + "^{" + std::to_string(e) + "}";
  return var + "^" + std::to_string(e);
}

std::string coeff_text(const Rational& a, bool has_vars, bool latex) {
  // a is positive here; signs are emitted by the caller
  if (!has_vars) {
    if (latex && !a.is_integer())
      return "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
    return a.to_string();
  }
  if (a == Rational(1)) return "";
  if (a.is_integer()) return a.to_string();
  if (latex) return "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
  return "(" + a.to_string() + ")";
}

std::string render_terms(std::vector<Term> terms, const std::string& xvar,
                         const std::string& yvar, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms) {
    Rational a = t.coeff.abs();
    bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars = power_text(xvar, t.xp, latex) + power_text(yvar, t.yp, latex);
    out += coeff_text(a, !vars.empty(), latex) + vars;
  }
  return out;
}

std::vector<Term> poly_terms(const Poly& p) {
  std::vector<Term> ts;
  const auto& cs = p.coeffs();
  for (size_t i = cs.size(); i-- > 0;)
    if (!cs[i].is_zero()) ts.push_back({cs[i], static_cast<unsigned>(i), 0});
  return ts;
}

std::vector<Term> bipoly_terms(const BiPoly& p) {
  std::vector<Term> ts;
  for (const auto& [k, c] : p.terms()) ts.push_back({c, k.first, k.second});
  // descending total degree, then descending x power
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    unsigned ta = a.xp + a.yp, tb = b.xp + b.yp;
    if (ta != tb) return ta > tb;
    return a.xp > b.xp;
  });
  return ts;
}

}  // namespace

std::string to_text(const Poly& p, const std::string& var) {
  return render_terms(poly_terms(p), var, "", false);
}

std::string to_text(const BiPoly& p) { return render_terms(bipoly_terms(p), "x", "y", false); }

std::string to_latex(const Poly& p, const std::string& var) {
  return render_terms(poly_terms(p), var, "", true);
}

std::string to_latex(const BiPoly& p) { return render_terms(bipoly_terms(p), "x", "y", true); }

nlohmann::json to_json(const Poly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(c.to_string());
  return {{"var", "x"}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const BiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : p.terms())
    terms.push_back({{"x", k.first}, {"y", k.second}, {"c", c.to_string()}});
  return {{"terms", terms}};
}

nlohmann::json to_json(const TruncatedSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : s.coeffs()) coeffs.push_back(c.to_string());
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("polynomial JSON must carry a 'coeffs' array");
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(Rational::from_string(c.get<std::string>()));
  return Poly(std::move(coeffs));
}

namespace {

unsigned exponent_from_json(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  long long e = v.get<long long>();
  if (e < 0 || e > 1000000) throw std::invalid_argument(std::string(what) + " out of range");
  return static_cast<unsigned>(e);
}

}  // namespace

BiPoly bipoly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("bivariate polynomial JSON must carry a 'terms' array");
  BiPoly p;
  for (const auto& t : j["terms"]) {
    unsigned xp = exponent_from_json(t.at("x"), "x power");
    unsigned yp = exponent_from_json(t.at("y"), "y power");
    p += BiPoly::monomial(xp, yp, Rational::from_string(t.at("c").get<std::string>()));
  }
  return p;
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw std::invalid_argument("series JSON must carry 'order' and 'coeffs'");
  unsigned order = exponent_from_json(j.at("order"), "order");
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(Rational::from_string(c.get<std::string>()));
  return TruncatedSeries(order, std::move(coeffs));
}

std::string sequence_kind_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Derangement: return "derangement";
    case SequenceKind::Bell: return "bell";
    case SequenceKind::Euler: return "euler";
    case SequenceKind::Factorial: return "factorial";
  }
  return "?";
}

std::string triangle_kind_name(TriangleKind kind) {
  return kind == TriangleKind::FirstKindSigned ? "stirling1" : "stirling2";
}

std::string sequence_csv(const SequenceTable& t) {
  std::ostringstream out;
  out << "n,value\n";
  for (size_t n = 0; n < t.values.size(); ++n) out << n << "," << t.values[n].to_string() << "\n";
  return out.str();
}

std::string sequence_text(const SequenceTable& t) {
  std::ostringstream out;
  for (size_t n = 0; n < t.values.size(); ++n) out << n << "\t" << t.values[n].to_string() << "\n";
  return out.str();
}

nlohmann::json sequence_json(const SequenceTable& t) {
  nlohmann::json values = nlohmann::json::array();
  for (const Rational& v : t.values) values.push_back(v.to_string());
  return {{"kind", sequence_kind_name(t.kind)}, {"values", values}};
}

namespace {

std::string triangle_rows(const StirlingTriangle& t, const char* sep) {
  std::ostringstream out;
  for (const auto& row : t.rows) {
    for (size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out << sep;
      out << row[k].get_str();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string triangle_csv(const StirlingTriangle& t) { return triangle_rows(t, ","); }

std::string triangle_text(const StirlingTriangle& t) { return triangle_rows(t, "\t"); }

nlohmann::json triangle_json(const StirlingTriangle& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(r);
  }
  return {{"kind", triangle_kind_name(t.kind)}, {"rows", rows}};
}

nlohmann::json report_json(const IdentityReport& r) {
  nlohmann::json j{{"id", r.id},
                   {"statement", r.statement},
                   {"mode", check_mode_name(r.mode)},
                   {"status", r.pass ? "pass" : "fail"},
                   {"elapsed_ms", static_cast<double>(r.elapsed.count()) / 1000.0},
                   {"params", nlohmann::json::object()},
                   {"witness", nullptr}};
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  if (r.witness)
    j["witness"] = {{"point", r.witness->point}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
  return j;
}

nlohmann::json reports_json(const std::vector<IdentityReport>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back(report_json(r));
  return arr;
}

std::string reports_text(const std::vector<IdentityReport>& rs) {
  std::ostringstream out;
  size_t passed = 0;
  for (const auto& r : rs) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
    for (size_t i = r.id.size(); i < 16; ++i) out << ' ';
    out << " [" << check_mode_name(r.mode) << "]  "
        << static_cast<double>(r.elapsed.count()) / 1000.0 << " ms\n";
    if (!r.pass && r.witness) {
      out << "      at " << r.witness->point << "\n";
      out << "      lhs = " << r.witness->lhs << "\n";
      out << "      rhs = " << r.witness->rhs << "\n";
    }
    if (r.pass) ++passed;
  }
  out << passed << "/" << rs.size() << " checks passed\n";
  return out.str();
}

}  // namespace derange
