#include <doctest.h>

#include <string>

#include "grpkit/grpkit.h"

namespace {

std::string take(char* s) {
  std::string out = s;
  grpkit_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("presentation round trip through the C API") {
  grpkit_presentation* p = nullptr;
  REQUIRE(grpkit_presentation_parse("group<a,b | a^3, b^2, (a*b)^3>", &p) == GRPKIT_OK);
  char* text = nullptr;
  REQUIRE(grpkit_presentation_render(p, &text) == GRPKIT_OK);
  grpkit_presentation* q = nullptr;
  REQUIRE(grpkit_presentation_parse(text, &q) == GRPKIT_OK);
  char* s = nullptr;
  REQUIRE(grpkit_abelian_invariants(q, &s) == GRPKIT_OK);
  CHECK(take(s) == "[ 3 ]");
  grpkit_string_free(text);
  grpkit_presentation_free(p);
  grpkit_presentation_free(q);
}

TEST_CASE("errors carry a status and a message") {
  grpkit_presentation* p = nullptr;
  CHECK(grpkit_presentation_parse("group<a | b>", &p) == GRPKIT_PARSE_ERROR);
  CHECK(std::string(grpkit_last_error()).find("unknown symbol") != std::string::npos);
  CHECK(grpkit_presentation_load("NoSuchGroup", &p) == GRPKIT_INVALID_ARGUMENT);
  CHECK(grpkit_presentation_parse(nullptr, &p) == GRPKIT_INVALID_ARGUMENT);
  REQUIRE(grpkit_presentation_load("Gamma", &p) == GRPKIT_OK);
  grpkit_subgroups* s = nullptr;
  CHECK(grpkit_low_index(p, 1, 12, 3, 1, &s) == GRPKIT_RESOURCE_ERROR);
  char* out = nullptr;
  CHECK(grpkit_split_prime("Qomega", 9, &out) == GRPKIT_INVALID_ARGUMENT);
  CHECK(grpkit_mapping_torus_h1("[[1,2]", 1, &out) == GRPKIT_PARSE_ERROR);
  grpkit_presentation_free(p);
}

TEST_CASE("subgroup queries") {
  grpkit_presentation* p = nullptr;
  REQUIRE(grpkit_presentation_load("Gamma", &p) == GRPKIT_OK);
  grpkit_subgroups* s = nullptr;
  REQUIRE(grpkit_low_index(p, 5, 7, 1000000000ull, 2, &s) == GRPKIT_OK);
  REQUIRE(grpkit_subgroups_count(s) == 7);
  CHECK(grpkit_subgroups_index(s, 0) == 5);
  CHECK(grpkit_subgroups_class_size(s, 0) == 5);
  CHECK(grpkit_subgroups_index(s, 99) == 0);
  char* order = nullptr;
  REQUIRE(grpkit_coset_image_order(s, 0, &order) == GRPKIT_OK);
  CHECK(take(order) == "60");
  int simple = 0;
  REQUIRE(grpkit_coset_image_is_simple(s, 0, &simple) == GRPKIT_OK);
  CHECK(simple == 1);
  grpkit_presentation* h = nullptr;
  REQUIRE(grpkit_subgroup_presentation(p, s, 1, 1, &h) == GRPKIT_OK);
  char* inv = nullptr;
  REQUIRE(grpkit_abelian_invariants(h, &inv) == GRPKIT_OK);
  CHECK(take(inv) == "[ 6 ]");
  char* action = nullptr;
  REQUIRE(grpkit_coset_action(s, p, 0, &action) == GRPKIT_OK);
  CHECK(take(action).rfind("x: ", 0) == 0);
  CHECK(grpkit_coset_image_order(s, 7, &order) == GRPKIT_INVALID_ARGUMENT);
  grpkit_presentation_free(h);
  grpkit_subgroups_free(s);
  grpkit_presentation_free(p);
}

TEST_CASE("arithmetic and quotient entry points") {
  CHECK(grpkit_is_prime(23) == 1);
  CHECK(grpkit_is_prime(21) == 0);
  char* out = nullptr;
  REQUIRE(grpkit_split_prime("Kweeks", 5, &out) == GRPKIT_OK);
  CHECK(take(out) == "(1,1) (1,2)");
  REQUIRE(grpkit_mapping_torus_h1("[[-3,1],[-1,0]]", 4, &out) == GRPKIT_OK);
  CHECK(take(out) == "[ 3, 15, 0 ]");
  grpkit_presentation* p = nullptr;
  REQUIRE(grpkit_presentation_load("Gamma", &p) == GRPKIT_OK);
  char *total = nullptr, *aut = nullptr, *classes = nullptr;
  REQUIRE(grpkit_count_epimorphisms(p, "A4", nullptr, &total, &aut, &classes) == GRPKIT_OK);
  CHECK(take(total) == "24");
  CHECK(take(aut) == "24");
  CHECK(take(classes) == "1");
  CHECK(grpkit_count_epimorphisms(p, "A4", "abc", &total, &aut, &classes) == GRPKIT_INVALID_ARGUMENT);
  grpkit_presentation_free(p);
}

TEST_CASE("scenario entry point") {
  char* report = nullptr;
  int passed = 0;
  REQUIRE(grpkit_scenario_run("fibered_covers", 1000000000ull, 1, &report, &passed) == GRPKIT_OK);
  CHECK(passed == 1);
  grpkit_string_free(report);
  CHECK(grpkit_scenario_run("nope", 1, 1, &report, &passed) == GRPKIT_INVALID_ARGUMENT);
}
