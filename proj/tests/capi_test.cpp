#include <doctest.h>

#include <string>

#include <json.hpp>

#include "intersectlab.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  il_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("C API family round trip") {
  il_family* fam = nullptr;
  REQUIRE(il_family_parse("n=5 k=3\n1,2,3\n1,2,4\n1,2,5\n", &fam) == IL_OK);
  CHECK(il_family_size(fam) == 3);
  CHECK(il_family_ground(fam) == 5);
  int flag = 0;
  CHECK(il_family_is_rwise(fam, 3, 2, &flag) == IL_OK);
  CHECK(flag == 1);
  CHECK(il_family_is_t_star(fam, 2, &flag) == IL_OK);
  CHECK(flag == 1);
  char* text = nullptr;
  CHECK(il_family_to_text(fam, &text) == IL_OK);
  CHECK(take(text) == "n=5 k=3\n1,2,3\n1,2,4\n1,2,5\n");
  il_family_free(fam);
}

TEST_CASE("C API reports errors with codes and messages") {
  il_family* fam = nullptr;
  CHECK(il_family_parse("garbage", &fam) == IL_PARSE_ERROR);
  CHECK(fam == nullptr);
  CHECK(std::string(il_last_error()).size() > 0);
  CHECK(il_family_build("nope", 5, 3, 2, 1, 0, &fam) == IL_INVALID_ARGUMENT);
  CHECK(std::string(il_status_name(IL_CAP_EXCEEDED)) == "cap_exceeded");
  char* out = nullptr;
  CHECK(il_walk_alpha_json(2, "1e-12", &out) == IL_INVALID_ARGUMENT);
}

TEST_CASE("C API search") {
  il_search_options options;
  il_search_options_default(&options);
  CHECK(options.cap == 300);
  il_search_report* report = nullptr;
  REQUIRE(il_search_max(7, 3, 3, 2, 0, &options, &report) == IL_OK);
  char* optimum = nullptr;
  CHECK(il_search_report_optimum(report, &optimum) == IL_OK);
  CHECK(take(optimum) == "5");
  CHECK(il_search_report_all_optima_are_t_stars(report) == 1);
  char* json = nullptr;
  CHECK(il_search_report_json(report, 0, &json) == IL_OK);
  auto j = nlohmann::json::parse(take(json));
  CHECK(j["optimum"] == "5");
  CHECK_FALSE(j.contains("wall_time"));
  il_family* witness = nullptr;
  CHECK(il_search_report_witness(report, &witness) == IL_OK);
  CHECK(il_family_size(witness) == 5);
  il_family_free(witness);
  il_search_report_free(report);

  options.cap = 20;
  report = nullptr;
  CHECK(il_search_max(7, 3, 3, 2, 0, &options, &report) == IL_CAP_EXCEEDED);
  CHECK(report == nullptr);
}

TEST_CASE("C API numeric computations") {
  char* out = nullptr;
  REQUIRE(il_walk_alpha_json(3, "1e-12", &out) == IL_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["alpha"]["lo"]["decimal"].get<std::string>().rfind("0.618033988749", 0) == 0);
  REQUIRE(il_paths_count_json(4, 2, 3, 1, &out) == IL_OK);
  CHECK(nlohmann::json::parse(take(out))["count"] == "3");
  REQUIRE(il_walk_f_json(1, 3, 1, "1/2", &out) == IL_OK);
  j = nlohmann::json::parse(take(out));
  CHECK(j["f"]["num"] == "1");
  CHECK(j["f"]["den"] == "2");
}

TEST_CASE("C API suite list") {
  char* names = nullptr;
  REQUIRE(il_verify_suite_names(&names) == IL_OK);
  const std::string list = take(names);
  CHECK(list.find("star-3-2") != std::string::npos);
  CHECK(list.find("deletion-recursion") != std::string::npos);
  int passed = 0;
  char* out = nullptr;
  CHECK(il_verify_run_json("missing-suite", &passed, &out) == IL_INVALID_ARGUMENT);
}
