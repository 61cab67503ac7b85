#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "bpskalc.h"
#include "doctest.h"

TEST_CASE("a-element text output is canonical") {
  bpsk_poly* p = nullptr;
  REQUIRE(bpsk_a_element(2, 1, &p) == BPSK_OK);
  char* text = nullptr;
  REQUIRE(bpsk_poly_to_text(p, &text) == BPSK_OK);
  CHECK(std::string(text) ==
        "-q1^-1*q2^-1*z2 + -q1^-1*q2^-1*z1 + z2 + z1");
  bpsk_string_free(text);
  bpsk_poly_free(p);
}

TEST_CASE("json round trip preserves equality") {
  bpsk_poly* p = nullptr;
  REQUIRE(bpsk_e_class(2, 1, &p) == BPSK_OK);
  char* json = nullptr;
  REQUIRE(bpsk_poly_to_json(p, &json) == BPSK_OK);
  bpsk_poly* q = nullptr;
  REQUIRE(bpsk_poly_from_json(json, 1, &q) == BPSK_OK);
  int equal = 0, zvars = 0;
  REQUIRE(bpsk_poly_equal(p, q, &equal) == BPSK_OK);
  CHECK(equal == 1);
  REQUIRE(bpsk_poly_zvars(q, &zvars) == BPSK_OK);
  CHECK(zvars == 2);
  bpsk_string_free(json);
  bpsk_poly_free(p);
  bpsk_poly_free(q);
}

TEST_CASE("expansion routes agree through the interface") {
  bpsk_poly *p = nullptr, *q = nullptr;
  REQUIRE(bpsk_bwb_expand(2, 1, 1, &p) == BPSK_OK);
  REQUIRE(bpsk_a_element(2, 2, &q) == BPSK_OK);
  int equal = 0;
  REQUIRE(bpsk_poly_equal(p, q, &equal) == BPSK_OK);
  CHECK(equal == 1);
  bpsk_poly_free(p);
  bpsk_poly_free(q);
}

TEST_CASE("shuffle product of units") {
  bpsk_poly *f = nullptr, *g = nullptr, *h = nullptr;
  REQUIRE(bpsk_a_element(1, 0, &f) == BPSK_OK);
  REQUIRE(bpsk_a_element(1, 0, &g) == BPSK_OK);
  REQUIRE(bpsk_shuffle_mul(f, g, "xi", &h) == BPSK_OK);
  int zvars = 0;
  REQUIRE(bpsk_poly_zvars(h, &zvars) == BPSK_OK);
  CHECK(zvars == 2);
  bpsk_poly_free(f);
  bpsk_poly_free(g);
  bpsk_poly_free(h);
}

TEST_CASE("bad kernel name reports an invalid argument") {
  bpsk_poly *f = nullptr, *h = nullptr;
  REQUIRE(bpsk_a_element(1, 0, &f) == BPSK_OK);
  CHECK(bpsk_shuffle_mul(f, f, "zeta", &h) == BPSK_ERR_INVALID_ARGUMENT);
  CHECK(std::string(bpsk_last_error()).find("zeta") != std::string::npos);
  bpsk_poly_free(f);
}

TEST_CASE("malformed json reports a parse error") {
  bpsk_poly* p = nullptr;
  CHECK(bpsk_poly_from_json("{not json", 0, &p) == BPSK_ERR_PARSE);
}

TEST_CASE("divcheck verdicts") {
  int divisible = 0;
  char* report = nullptr;
  REQUIRE(bpsk_divcheck(2, 1, &divisible, &report) == BPSK_OK);
  CHECK(divisible == 1);
  bpsk_string_free(report);
  REQUIRE(bpsk_divcheck(2, 0, &divisible, &report) == BPSK_OK);
  CHECK(divisible == 0);
  CHECK(std::string(report).rfind("NotDivisible", 0) == 0);
  bpsk_string_free(report);
}

TEST_CASE("wheel substitution vanishes on a divisible class") {
  int vanished = 0;
  char* residual = nullptr;
  REQUIRE(bpsk_wheel(3, 1, 0, 1, 2, "q1", &vanished, &residual) == BPSK_OK);
  CHECK(vanished == 1);
  bpsk_string_free(residual);
  CHECK(bpsk_wheel(3, 1, 0, 0, 0, "q1", &vanished, &residual) ==
        BPSK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("coproduct checks through the interface") {
  int pass = 0;
  REQUIRE(bpsk_coproduct_check("1236bis", 2, 1, 0, 1, 1, 0, 0, &pass) ==
          BPSK_OK);
  CHECK(pass == 1);
  REQUIRE(bpsk_coproduct_check("cor44", 0, 1, 1, 1, 1, 1, 1, &pass) ==
          BPSK_OK);
  CHECK(pass == 1);
  CHECK(bpsk_coproduct_check("bogus", 1, 1, 0, 1, 1, 1, 1, &pass) ==
        BPSK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("primitives and rank certificate") {
  int dim = 0;
  char* basis = nullptr;
  REQUIRE(bpsk_primitives(3, &dim, &basis) == BPSK_OK);
  CHECK(dim == 1);
  CHECK(std::string(basis) == "1*e[1,1,1] - 3*e[2,1] + 3*e[3]");
  bpsk_string_free(basis);
  int pass = 0;
  REQUIRE(bpsk_phi_consistency(2, 1, 0, 1, &pass) == BPSK_OK);
  CHECK(pass == 1);
}

TEST_CASE("magic weight enumeration as json") {
  char* json = nullptr;
  REQUIRE(bpsk_magic_weights(2, 0, &json) == BPSK_OK);
  CHECK(std::string(json) == "[[-1,1],[0,0]]");
  bpsk_string_free(json);
}

TEST_CASE("series sides agree") {
  char* json = nullptr;
  int identical = 0;
  REQUIRE(bpsk_dtseries(8, &json, &identical) == BPSK_OK);
  CHECK(identical == 1);
  CHECK(std::string(json).find("\"enumerated\"") != std::string::npos);
  bpsk_string_free(json);
}

TEST_CASE("variable bound accessors") {
  int before = bpsk_get_max_vars();
  REQUIRE(bpsk_set_max_vars(7) == BPSK_OK);
  CHECK(bpsk_get_max_vars() == 7);
  CHECK(bpsk_set_max_vars(0) == BPSK_ERR_INVALID_ARGUMENT);
  REQUIRE(bpsk_set_max_vars(before) == BPSK_OK);
}
