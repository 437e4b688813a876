#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "identities.hpp"
#include "poly.hpp"
#include "sequences.hpp"
#include "series.hpp"

namespace derange {

// Plain-text forms like "x^2 - y^2 + 1"; non-integer coefficients are
// parenthesized, e.g. "(3/2)x".
std::string to_text(const Poly& p, const std::string& var = "x");
std::string to_text(const BiPoly& p);
std::string to_latex(const Poly& p, const std::string& var = "x");
std::string to_latex(const BiPoly& p);

// JSON schemas. Rationals travel as exact decimal-free strings
// ("-3/4", "9"), so round trips are bit-exact.
//   Poly:   {"var":"x","coeffs":["c0","c1",...]}
//   BiPoly: {"terms":[{"x":i,"y":j,"c":"num/den"},...]}
//   Series: {"order":N,"coeffs":["c0",...,"cN"]}
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const BiPoly& p);
nlohmann::json to_json(const TruncatedSeries& s);
Poly poly_from_json(const nlohmann::json& j);
BiPoly bipoly_from_json(const nlohmann::json& j);
TruncatedSeries series_from_json(const nlohmann::json& j);

std::string sequence_kind_name(SequenceKind kind);
std::string triangle_kind_name(TriangleKind kind);
// "n,value" rows, one per index.
std::string sequence_csv(const SequenceTable& t);
std::string sequence_text(const SequenceTable& t);
nlohmann::json sequence_json(const SequenceTable& t);
// Row-major: line n holds S(n,0..n).
std::string triangle_csv(const StirlingTriangle& t);
std::string triangle_text(const StirlingTriangle& t);
nlohmann::json triangle_json(const StirlingTriangle& t);

nlohmann::json report_json(const IdentityReport& r);
nlohmann::json reports_json(const std::vector<IdentityReport>& rs);
std::string reports_text(const std::vector<IdentityReport>& rs);

}  // namespace derange
