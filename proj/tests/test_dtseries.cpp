#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "bpskalc/dtseries.hpp"
#include "doctest.h"

using namespace bpsk::dt;

TEST_CASE("product_formula basics") {
  std::map<int, int> empty;
  auto one = product_formula(empty, 1, 6);
  CHECK(one.coeffs == std::vector<mpz_class>{1, 0, 0, 0, 0, 0, 0});

  std::map<int, int> geo = {{1, -1}};
  auto ones = product_formula(geo, 1, 5);
  CHECK(ones.coeffs == std::vector<mpz_class>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("MacMahon count with alternating sign") {
  // prod 1/(1-(-q)^d)^d: absolute values are the plane partition numbers.
  std::map<int, int> exps;
  for (int d = 1; d <= 6; ++d) exps[d] = -d;
  auto s = product_formula(exps, -1, 6);
  std::vector<mpz_class> expect = {1, -1, 3, -6, 13, -24, 48};
  CHECK(s.coeffs == expect);
}

TEST_CASE("wall crossing identity to order 12") {
  // prod (1-(-q)^d)^{-d} computed once directly and once with the left side
  // exponents d * Omega_d, Omega_d = -1.
  std::map<int, int> lhs, rhs;
  for (int d = 1; d <= 12; ++d) {
    lhs[d] = -d;
    rhs[d] = -d;
  }
  CHECK(product_formula(lhs, -1, 12).coeffs ==
        product_formula(rhs, -1, 12).coeffs);
}

TEST_CASE("dimension series matches the product formula") {
  auto a = a_d_enumerate(12);
  std::map<int, int> exps;
  for (int d = 1; d <= 12; ++d) exps[d] = -d;
  auto s = product_formula(exps, 1, 12);
  CHECK(a == s.coeffs);
  CHECK(a[1] == 1);
  CHECK(a[2] == 3);
}

TEST_CASE("slope bijection") {
  CHECK(slope_bijection_check(1));
  CHECK(slope_bijection_check(6));
  CHECK(slope_bijection_check(12));
  for (int d = 1; d <= 200; ++d) CHECK(slope_bijection_check(d));
}

TEST_CASE("integrality guard") {
  // A fractional truncation would throw; the implemented identities never do.
  std::map<int, int> exps = {{2, -3}, {3, 5}};
  CHECK_NOTHROW(product_formula(exps, -1, 20));
}
