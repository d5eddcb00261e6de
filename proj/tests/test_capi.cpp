// Exercises the shared library strictly through its C header.
#include "gmotzkin/gmotzkin.h"

#include <doctest.h>

#include <string>
#include <vector>

namespace {

std::string take(gm_text* t)
{
  std::string s = gm_text_str(t);
  gm_text_free(t);
  return s;
}

}

TEST_CASE("text results")
{
  gm_text* t = nullptr;
  REQUIRE(gm_table("D", 3, GM_FORMAT_CSV, &t) == GM_OK);
  CHECK(take(t) == "n,i,value\n0,0,1\n1,0,2\n2,0,6\n2,1,1\n");

  REQUIRE(gm_bijection_apply("chi2", "u.d1", &t) == GM_OK);
  CHECK(take(t) == "h1");

  REQUIRE(gm_series("C", 6, 0, &t) == GM_OK);
  CHECK(take(t) == "{\"name\":\"C\",\"x_order\":6,\"coefficients\":[\"1\",\"1\",\"2\",\"5\",\"14\",\"42\"]}\n");

  REQUIRE(gm_list_names(GM_NAMES_IDENTITY, &t) == GM_OK);
  CHECK(take(t).find("thm_4_7_3\n") != std::string::npos);
}

TEST_CASE("errors carry a status and a message")
{
  gm_text* t = nullptr;
  CHECK(gm_table("nope", 3, GM_FORMAT_CSV, &t) == GM_ERR_UNKNOWN_NAME);
  CHECK(std::string(gm_last_error()).find("valid:") != std::string::npos);
  CHECK(gm_bijection_apply("phi", "h1.h1", &t) == GM_ERR_DOMAIN);
  CHECK(gm_bijection_apply("phi", "u.x", &t) == GM_ERR_INVALID_PATH);
  CHECK(gm_table("D", 3, GM_FORMAT_CSV, nullptr) == GM_ERR_ARGUMENT);
  REQUIRE(gm_table("D", 1, GM_FORMAT_CSV, &t) == GM_OK);
  CHECK(std::string(gm_last_error()).empty());
  gm_text_free(t);
}

TEST_CASE("enumeration")
{
  uint64_t c = 0;
  REQUIRE(gm_count_paths(6, 2, &c) == GM_OK);
  CHECK(c == 3319);

  std::vector<std::string> seen;
  REQUIRE(gm_enumerate(
            2,
            [](const char* p, void* u) {
              static_cast<std::vector<std::string>*>(u)->push_back(p);
              return 0;
            },
            &seen) == GM_OK);
  CHECK(seen.size() == 7);

  int calls = 0;
  REQUIRE(gm_enumerate(
            5, [](const char*, void* u) { return ++*static_cast<int*>(u) == 3 ? 1 : 0; }, &calls) == GM_OK);
  CHECK(calls == 3);
}

TEST_CASE("reports")
{
  gm_verify_options o = gm_verify_defaults();
  o.has_max_n = 1;
  o.max_n = 6;
  gm_report* r = nullptr;
  REQUIRE(gm_verify("thm_2_2_2", &o, &r) == GM_OK);
  CHECK(gm_report_count(r) == 1);
  CHECK(gm_report_passed(r) == 1);
  gm_text* t = nullptr;
  REQUIRE(gm_report_render(r, GM_FORMAT_JSON, 0, &t) == GM_OK);
  const std::string js = take(t);
  CHECK(js.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(js.find("elapsed_ms") == std::string::npos);
  gm_report_free(r);

  REQUIRE(gm_bijection_check("rho", 3, 1, &r) == GM_OK);
  CHECK(gm_report_passed(r) == 1);
  gm_report_free(r);

  REQUIRE(gm_crosscheck("Lvv", 6, nullptr, &r) == GM_OK);
  CHECK(gm_report_passed(r) == 1);
  gm_report_free(r);

  CHECK(gm_verify("nope", &o, &r) == GM_ERR_UNKNOWN_NAME);
}
