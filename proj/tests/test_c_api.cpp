// Exercises the shared library strictly through its C header.
#include "fslr/fslr.h"

#include <doctest.h>

#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

namespace {

struct Context {
  fslr_context* ctx = nullptr;
  Context() { REQUIRE(fslr_context_new(&ctx) == FSLR_OK); }
  ~Context() { fslr_context_free(ctx); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  fslr_string_free(s);
  return out;
}

std::string poly_text(fslr_context* ctx, const fslr_poly* p) {
  char* s = nullptr;
  REQUIRE(fslr_poly_to_string(ctx, p, FSLR_FORMAT_PLAIN, &s) == FSLR_OK);
  return take(s);
}

// Example 3 shape ((2,1),(1,1)).
const int kParts[] = {2, 1, 1, 1};
const size_t kLengths[] = {2, 2};
const int kMu[] = {2, 2};

}  // namespace

TEST_CASE("version and context lifecycle") {
  CHECK(std::string(fslr_version()).size() > 0);
  CHECK(fslr_context_new(nullptr) == FSLR_NULL_ARGUMENT);
  Context c;
  CHECK(std::string(fslr_last_error(c.ctx)).empty());
  fslr_context_free(nullptr);
  fslr_poly_free(nullptr);
  fslr_table_free(nullptr);
  fslr_tableau_list_free(nullptr);
  fslr_specialization_free(nullptr);
  fslr_string_free(nullptr);
}

TEST_CASE("single coefficient through the C API") {
  Context c;
  fslr_poly* p = nullptr;
  REQUIRE(fslr_coefficient(c.ctx, kParts, kLengths, 2, 2, kMu, 2, &p) == FSLR_OK);
  CHECK(poly_text(c.ctx, p) == "y1_1 + y1_2 + y1_3 + y2_1");
  fslr_poly* q = nullptr;
  REQUIRE(fslr_coefficient_oracle(c.ctx, kParts, kLengths, 2, 2, kMu, 2, &q) == FSLR_OK);
  CHECK(fslr_poly_equal(p, q) == 1);
  CHECK(fslr_poly_is_zero(p) == 0);
  char* json = nullptr;
  REQUIRE(fslr_poly_to_string(c.ctx, p, FSLR_FORMAT_JSON, &json) == FSLR_OK);
  fslr_poly* back = nullptr;
  REQUIRE(fslr_poly_from_json(c.ctx, json, &back) == FSLR_OK);
  fslr_string_free(json);
  CHECK(fslr_poly_equal(p, back) == 1);
  char* latex = nullptr;
  REQUIRE(fslr_poly_to_string(c.ctx, p, FSLR_FORMAT_LATEX, &latex) == FSLR_OK);
  CHECK(take(latex) == "y^{(1)}_{1} + y^{(1)}_{2} + y^{(1)}_{3} + y^{(2)}_{1}");

  fslr_specialization* s = nullptr;
  REQUIRE(fslr_specialization_new(c.ctx, &s) == FSLR_OK);
  REQUIRE(fslr_specialization_add(c.ctx, s, "y1=0") == FSLR_OK);
  fslr_poly* sp = nullptr;
  REQUIRE(fslr_specialize_poly(c.ctx, p, s, &sp) == FSLR_OK);
  CHECK(poly_text(c.ctx, sp) == "y2_1");
  fslr_poly_free(sp);
  fslr_specialization_free(s);
  fslr_poly_free(back);
  fslr_poly_free(q);
  fslr_poly_free(p);
}

TEST_CASE("expansion tables through the C API") {
  Context c;
  fslr_table* t = nullptr;
  fslr_table* o = nullptr;
  REQUIRE(fslr_expand(c.ctx, kParts, kLengths, 2, 2, &t) == FSLR_OK);
  REQUIRE(fslr_expand_oracle(c.ctx, kParts, kLengths, 2, 2, &o) == FSLR_OK);
  CHECK(fslr_table_equal(t, o) == 1);
  CHECK(fslr_table_size(t) > 0);
  fslr_poly* p = nullptr;
  REQUIRE(fslr_table_get(c.ctx, t, kMu, 2, &p) == FSLR_OK);
  CHECK(poly_text(c.ctx, p) == "y1_1 + y1_2 + y1_3 + y2_1");
  fslr_poly_free(p);
  const int absent[] = {6};
  REQUIRE(fslr_table_get(c.ctx, t, absent, 1, &p) == FSLR_OK);
  CHECK(fslr_poly_is_zero(p) == 1);
  fslr_poly_free(p);

  char* json = nullptr;
  REQUIRE(fslr_table_to_string(c.ctx, t, FSLR_FORMAT_JSON, &json) == FSLR_OK);
  fslr_table* back = nullptr;
  REQUIRE(fslr_table_from_json(c.ctx, json, &back) == FSLR_OK);
  fslr_string_free(json);
  CHECK(fslr_table_equal(t, back) == 1);

  fslr_specialization* s = nullptr;
  REQUIRE(fslr_specialization_new(c.ctx, &s) == FSLR_OK);
  REQUIRE(fslr_specialization_add(c.ctx, s, "y1=0") == FSLR_OK);
  REQUIRE(fslr_specialization_add(c.ctx, s, "y2=0") == FSLR_OK);
  fslr_table* zero = nullptr;
  REQUIRE(fslr_specialize_table(c.ctx, t, s, &zero) == FSLR_OK);
  // At y = 0 only the classical term s_(2,1) s_(1,1) survives: degree-5 shapes.
  char* plain = nullptr;
  REQUIRE(fslr_table_to_string(c.ctx, zero, FSLR_FORMAT_PLAIN, &plain) == FSLR_OK);
  CHECK(take(plain).find("(3,2): 1") != std::string::npos);

  fslr_poly* e = nullptr;
  REQUIRE(fslr_e_coefficient(c.ctx, kParts, kLengths, 2, 2, kMu, 2, 1, &e) == FSLR_OK);
  fslr_poly_free(e);

  fslr_table_free(zero);
  fslr_specialization_free(s);
  fslr_table_free(back);
  fslr_table_free(o);
  fslr_table_free(t);
}

TEST_CASE("tableau lists") {
  Context c;
  fslr_tableau_list* list = nullptr;
  REQUIRE(fslr_tableaux(c.ctx, kParts, kLengths, 2, 2, FSLR_TABLEAUX_LR, kMu, 2, &list) == FSLR_OK);
  CHECK(fslr_tableau_list_size(list) == 4);
  char* s = nullptr;
  REQUIRE(fslr_tableau_list_get(c.ctx, list, 0, FSLR_FORMAT_JSON, &s) == FSLR_OK);
  CHECK(take(s).find("\"shape\"") != std::string::npos);
  REQUIRE(fslr_tableau_list_get(c.ctx, list, 3, FSLR_FORMAT_PLAIN, &s) == FSLR_OK);
  CHECK(!take(s).empty());
  CHECK(fslr_tableau_list_get(c.ctx, list, 4, FSLR_FORMAT_JSON, &s) == FSLR_OUT_OF_RANGE);
  fslr_tableau_list_free(list);

  const int one[] = {1};
  const size_t one_len[] = {1};
  REQUIRE(fslr_tableaux(c.ctx, one, one_len, 1, 1, FSLR_TABLEAUX_ALL, nullptr, 0, &list) == FSLR_OK);
  CHECK(fslr_tableau_list_size(list) == 2);
  fslr_tableau_list_free(list);
}

TEST_CASE("change of basis") {
  Context c;
  const int lambda[] = {1};
  fslr_table* d = nullptr;
  REQUIRE(fslr_change_basis(c.ctx, lambda, 1, 1, FSLR_SCHUR_TO_FACTORIAL, FSLR_METHOD_DET, 0, 1, &d) == FSLR_OK);
  fslr_poly* p = nullptr;
  REQUIRE(fslr_table_get(c.ctx, d, nullptr, 0, &p) == FSLR_OK);
  CHECK(poly_text(c.ctx, p) == "-y1_1");
  fslr_poly_free(p);
  for (fslr_method m : {FSLR_METHOD_DUAL, FSLR_METHOD_TABLEAU}) {
    fslr_table* other = nullptr;
    REQUIRE(fslr_change_basis(c.ctx, lambda, 1, 1, FSLR_SCHUR_TO_FACTORIAL, m, 0, 1, &other) == FSLR_OK);
    CHECK(fslr_table_equal(d, other) == 1);
    fslr_table_free(other);
  }
  fslr_table_free(d);
  const int wide[] = {3};
  fslr_table* bad = nullptr;
  CHECK(fslr_change_basis(c.ctx, wide, 1, 2, FSLR_SCHUR_TO_FACTORIAL, FSLR_METHOD_DUAL, 2, 1, &bad) ==
        FSLR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(!std::string(fslr_last_error(c.ctx)).empty());
}

TEST_CASE("error codes") {
  Context c;
  fslr_poly* p = nullptr;
  CHECK(fslr_coefficient(nullptr, kParts, kLengths, 2, 2, kMu, 2, &p) == FSLR_NULL_ARGUMENT);
  CHECK(fslr_coefficient(c.ctx, kParts, kLengths, 2, 2, kMu, 2, nullptr) == FSLR_NULL_ARGUMENT);
  CHECK(fslr_coefficient(c.ctx, nullptr, kLengths, 2, 2, kMu, 2, &p) == FSLR_NULL_ARGUMENT);
  const int increasing[] = {1, 2};
  const size_t len2[] = {2};
  CHECK(fslr_coefficient(c.ctx, increasing, len2, 1, 2, kMu, 2, &p) == FSLR_INVALID_ARGUMENT);
  CHECK(std::string(fslr_last_error(c.ctx)).size() > 0);
  CHECK(fslr_coefficient(c.ctx, kParts, kLengths, 2, 0, kMu, 2, &p) == FSLR_INVALID_ARGUMENT);
  CHECK(fslr_poly_from_json(c.ctx, "{not json", &p) == FSLR_PARSE_ERROR);
  fslr_table* t = nullptr;
  CHECK(fslr_table_from_json(c.ctx, "[1,2]", &t) == FSLR_PARSE_ERROR);
  fslr_specialization* s = nullptr;
  REQUIRE(fslr_specialization_new(c.ctx, &s) == FSLR_OK);
  CHECK(fslr_specialization_add(c.ctx, s, "x1=0") == FSLR_PARSE_ERROR);
  fslr_specialization_free(s);
  // A successful call after a failure still leaves valid outputs.
  REQUIRE(fslr_coefficient(c.ctx, kParts, kLengths, 2, 2, kMu, 2, &p) == FSLR_OK);
  fslr_poly_free(p);
}

TEST_CASE("verification entry point") {
  Context c;
  fslr_verify_bounds b = fslr_verify_default_bounds();
  CHECK(b.max_boxes == 6);
  CHECK(b.n == 3);
  b.max_boxes = 2;
  b.max_size = 2;
  b.n = 2;
  b.r = 2;
  char* report = nullptr;
  REQUIRE(fslr_verify(c.ctx, "all", &b, FSLR_FORMAT_JSON, &report) == FSLR_OK);
  const std::string text = take(report);
  CHECK(text.find("\"suite\":\"involutions\"") != std::string::npos);
  CHECK(fslr_verify(c.ctx, "nonsense", &b, FSLR_FORMAT_PLAIN, &report) == FSLR_INVALID_ARGUMENT);
}
