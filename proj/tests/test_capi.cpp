// Exercises the shared-library surface only: derange.h, opaque handles,
// error codes, and the JSON that crosses the boundary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "derange.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  drg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error plumbing") {
  CHECK(drg_version() != nullptr);
  CHECK(drg_last_error() != nullptr);
  char* out = nullptr;
  CHECK(drg_sequence_render("nonsense", 5, "csv", &out) == DRG_EINVAL);
  CHECK(std::strlen(drg_last_error()) > 0);
  CHECK(drg_sequence_render(nullptr, 5, "csv", &out) == DRG_EINVAL);
  CHECK(drg_sequence_render("bell", 5, "yaml", &out) == DRG_EINVAL);
}

TEST_CASE("derangement numbers as strings") {
  char* out = nullptr;
  REQUIRE(drg_derangement_number(10, &out) == DRG_OK);
  CHECK(take(out) == "1334961");
  out = nullptr;
  REQUIRE(drg_derangement_number(0, &out) == DRG_OK);
  CHECK(take(out) == "1");
}

TEST_CASE("sequence rendering") {
  char* out = nullptr;
  REQUIRE(drg_sequence_render("derangement", 4, "csv", &out) == DRG_OK);
  CHECK(take(out) == "n,value\n0,1\n1,0\n2,1\n3,2\n4,9\n");

  out = nullptr;
  REQUIRE(drg_sequence_render("euler", 3, "json", &out) == DRG_OK);
  nlohmann::json j = nlohmann::json::parse(take(out));
  CHECK(j["kind"] == "euler");
  CHECK(j["values"][1] == "-1/2");
  CHECK(j["values"][3] == "1/4");

  out = nullptr;
  REQUIRE(drg_stirling_render(2, 3, "csv", &out) == DRG_OK);
  CHECK(take(out) == "1\n0,1\n0,1,1\n0,1,3,1\n");
  CHECK(drg_stirling_render(3, 3, "csv", &out) == DRG_EINVAL);
}

TEST_CASE("polynomial handles, rendering, and evaluation") {
  drg_poly* p = nullptr;
  REQUIRE(drg_derangement_poly(2, &p) == DRG_OK);
  char* out = nullptr;
  REQUIRE(drg_poly_render(p, "text", &out) == DRG_OK);
  CHECK(take(out) == "x^2 + 1");

  out = nullptr;
  REQUIRE(drg_poly_eval(p, "1/2", &out) == DRG_OK);
  CHECK(take(out) == "5/4");
  CHECK(drg_poly_eval(p, "garbage", &out) == DRG_EINVAL);

  out = nullptr;
  REQUIRE(drg_poly_render(p, "json", &out) == DRG_OK);
  std::string json = take(out);
  drg_poly* back = nullptr;
  REQUIRE(drg_poly_parse_json(json.c_str(), &back) == DRG_OK);
  CHECK(drg_poly_equal(p, back) == 1);
  drg_poly_free(back);
  CHECK(drg_poly_parse_json("{broken", &back) == DRG_EINVAL);

  drg_poly* bell = nullptr;
  REQUIRE(drg_bell_poly(2, &bell) == DRG_OK);
  CHECK(drg_poly_equal(p, bell) == 0);
  CHECK(drg_poly_equal(nullptr, bell) == 0);
  drg_poly_free(bell);
  drg_poly_free(p);
  drg_poly_free(nullptr);
}

TEST_CASE("bivariate handles") {
  drg_bipoly* c = nullptr;
  REQUIRE(drg_cosine_derangement(2, &c) == DRG_OK);
  char* out = nullptr;
  REQUIRE(drg_bipoly_render(c, "text", &out) == DRG_OK);
  CHECK(take(out) == "x^2 - y^2 + 1");

  out = nullptr;
  // (1/2)^2 - (2/3)^2 + 1 = 29/36
  REQUIRE(drg_bipoly_eval(c, "1/2", "2/3", &out) == DRG_OK);
  CHECK(take(out) == "29/36");

  out = nullptr;
  REQUIRE(drg_bipoly_render(c, "json", &out) == DRG_OK);
  std::string json = take(out);
  drg_bipoly* back = nullptr;
  REQUIRE(drg_bipoly_parse_json(json.c_str(), &back) == DRG_OK);
  CHECK(drg_bipoly_equal(c, back) == 1);
  drg_bipoly_free(back);

  drg_bipoly* s = nullptr;
  REQUIRE(drg_sine_derangement(2, &s) == DRG_OK);
  out = nullptr;
  REQUIRE(drg_bipoly_render(s, "latex", &out) == DRG_OK);
  CHECK(take(out) == "2xy");
  drg_bipoly_free(s);
  drg_bipoly_free(c);
}

TEST_CASE("verification through the C surface") {
  char* out = nullptr;
  REQUIRE(drg_check_list(&out) == DRG_OK);
  nlohmann::json checks = nlohmann::json::parse(take(out));
  CHECK(checks.size() >= 24);

  out = nullptr;
  int all_pass = 0;
  REQUIRE(drg_verify_run(6, 1e-9, 60, nullptr, &out, &all_pass) == DRG_OK);
  CHECK(all_pass == 1);
  nlohmann::json reports = nlohmann::json::parse(take(out));
  CHECK(reports.size() == checks.size());
  for (const auto& r : reports) CHECK(r["status"] == "pass");

  out = nullptr;
  REQUIRE(drg_verify_run(6, 1e-9, 60, "lemma-1", &out, &all_pass) == DRG_OK);
  reports = nlohmann::json::parse(take(out));
  REQUIRE(reports.size() == 1);
  CHECK(reports[0]["id"] == "lemma-1");

  CHECK(drg_verify_run(6, 1e-9, 60, "no-such-id", &out, &all_pass) == DRG_EINVAL);
}

TEST_CASE("monte carlo through the C surface") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(drg_mc_moment(2, 0.5, 0.0, "plain", 20000, 11, &a) == DRG_OK);
  REQUIRE(drg_mc_moment(2, 0.5, 0.0, "plain", 20000, 11, &b) == DRG_OK);
  std::string ja = take(a), jb = take(b);
  CHECK(ja == jb);  // reproducible
  nlohmann::json j = nlohmann::json::parse(ja);
  CHECK(j["samples"] == 20000);
  CHECK(j["seed"] == 11);
  CHECK(j["exact_value"].get<double>() == doctest::Approx(1.25));
  CHECK(j.contains("mean"));
  CHECK(j.contains("std_error"));
  CHECK(j.contains("z_score"));

  char* out = nullptr;
  CHECK(drg_mc_moment(2, 0.5, 0.0, "plain", 100, 11, &out) == DRG_EINVAL);
  CHECK(drg_mc_moment(2, 0.5, 0.0, "weird", 20000, 11, &out) == DRG_EINVAL);
}
