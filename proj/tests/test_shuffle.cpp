#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "bpskalc/shuffle.hpp"
#include "doctest.h"

using namespace bpsk::shuffle;
using bpsk::poly::BinFraction;
using bpsk::poly::LaurentPoly;

namespace {

LaurentPoly mono(int d, const std::vector<int>& z, int a = 0, int b = 0,
                 int c = 1) {
  return LaurentPoly::monomial(d, c, a, b, z);
}

LaurentPoly sl2() {
  return LaurentPoly::constant(2, 1) + mono(2, {-1, 1}) + mono(2, {1, -1});
}

LaurentPoly m1() {
  return LaurentPoly::monomial(2, 1, 1, 1) + LaurentPoly::monomial(2, 1, -1, 0) +
         LaurentPoly::monomial(2, 1, 0, -1) - sl2();
}

LaurentPoly m2() {
  return LaurentPoly::monomial(2, 1, -1, -1) + LaurentPoly::monomial(2, 1, 1, 0) +
         LaurentPoly::monomial(2, 1, 0, 1) - sl2();
}

}  // namespace

TEST_CASE("m_exponents") {
  CHECK(m_exponents(2, 1) == std::vector<int>{0, 1});
  CHECK(m_exponents(1, -3) == std::vector<int>{-3});
  CHECK(m_exponents(2, 0) == std::vector<int>{-1, 1});
}

TEST_CASE("a_element closed forms") {
  CHECK(a_element(1, 4).value == mono(1, {4}));
  LaurentPoly a21 = (LaurentPoly::constant(2, 1) -
                     LaurentPoly::monomial(2, 1, -1, -1)) *
                    (mono(2, {1, 0}) + mono(2, {0, 1}));
  CHECK(a_element(2, 1).value == a21);
  LaurentPoly a20 = LaurentPoly::constant(2, 1) -
                    LaurentPoly::monomial(2, 1, -1, 0) -
                    LaurentPoly::monomial(2, 1, 0, -1) -
                    LaurentPoly::monomial(2, 1, -1, -1) + mono(2, {-1, 1}) +
                    mono(2, {1, -1});
  CHECK(a_element(2, 0).value == a20);
}

TEST_CASE("the two assembly routes agree") {
  for (int d = 1; d <= 3; ++d)
    for (int v = -2; v <= 2; ++v)
      CHECK(a_element(d, v).value == a_element_direct(d, v));
}

TEST_CASE("a_prime relates to a_element under F") {
  for (int d = 2; d <= 3; ++d)
    for (int v : {0, 1}) {
      BinFraction lhs = apply_F(a_element(d, v).value);
      BinFraction rhs = a_prime_element(m_exponents(d, v));
      CHECK(lhs.equal(rhs));
    }
  // d=1: A'_{(v)} = z^v.
  auto f = a_prime_element({5});
  CHECK(f.denom().empty());
  CHECK(f.numerator() == mono(1, {5}));
}

TEST_CASE("e_class closed forms") {
  LaurentPoly pref = (LaurentPoly::constant(2, 1) -
                      LaurentPoly::monomial(2, 1, -1, 0)) *
                     (LaurentPoly::constant(2, 1) -
                      LaurentPoly::monomial(2, 1, 0, -1));
  CHECK(e_class(2, 0).value == pref * a_element(2, 0).value);
  CHECK(e_class(2, 1).value == pref * a_element(2, 1).value);
  CHECK(e_class(1, 3).value == mono(1, {3}));
}

TEST_CASE("dcompute relation suite") {
  ShuffleElement unit{1, 0, LaurentPoly::constant(1, 1)};
  LaurentPoly prod = shuffle_mul(unit, unit).value;
  LaurentPoly expected =
      LaurentPoly::constant(2, 1) + LaurentPoly::monomial(2, 1, -1, 0) +
      LaurentPoly::monomial(2, 1, 0, -1) + LaurentPoly::monomial(2, 1, -1, -2) +
      LaurentPoly::monomial(2, 1, -2, -1) + LaurentPoly::monomial(2, 1, -2, -2) -
      sl2().mul_monomial(2, -1, -1);
  CHECK(prod == expected);
  CHECK(prod == (m1() + m2()).mul_monomial(1, -1, -1));
  LaurentPoly lhs = e_class(2, 0).value;
  LaurentPoly rhs =
      m1() * (LaurentPoly::monomial(2, 1, -1, 0) + LaurentPoly::monomial(2, 1, 0, -1)) -
      m2() * (LaurentPoly::monomial(2, 1, -1, -1) + LaurentPoly::constant(2, 1));
  CHECK(lhs == rhs);
}

TEST_CASE("a_hat scaling") {
  CHECK(a_hat(2, 1, 1).value == a_element(2, 1).value);
  CHECK(a_hat(1, 0, 2).value == a_element(2, 0).value.mul_monomial(-1, -1, -1));
}

TEST_CASE("p_element") {
  CHECK(p_element(1, 3, 1).value == mono(1, {3}));
  // P_{2,0} = q1^{-2} q2^{-2} (q1-1)(q2-1)(q1 q2-1), a z-free class.
  LaurentPoly q1 = LaurentPoly::monomial(2, 1, 1, 0);
  LaurentPoly q2 = LaurentPoly::monomial(2, 1, 0, 1);
  LaurentPoly one = LaurentPoly::constant(2, 1);
  LaurentPoly expect =
      ((q1 - one) * (q2 - one) * (q1 * q2 - one)).mul_monomial(1, -2, -2);
  CHECK(p_element(1, 0, 2).value == expect);
  CHECK(p_element(1, 0, 2).value == (m1() - m2()).mul_monomial(1, -1, -1));
}

TEST_CASE("gd symmetrization") {
  // d=2, v=1: (1 - q2)(z1 + z2).
  LaurentPoly expect = (LaurentPoly::constant(2, 1) -
                        LaurentPoly::monomial(2, 1, 0, 1)) *
                       (mono(2, {1, 0}) + mono(2, {0, 1}));
  CHECK(gd_symmetrization(2, 1) == expect);
  CHECK(gd_symmetrization(1, 4) == mono(1, {4}));
}

TEST_CASE("shuffle product unit and associativity") {
  ShuffleElement e{0, 0, LaurentPoly::constant(0, 1)};
  ShuffleElement x{1, 2, mono(1, {2})};
  CHECK(shuffle_mul(x, e).value == x.value);
  CHECK(shuffle_mul(e, x).value == x.value);

  ShuffleElement y{1, 0, LaurentPoly::constant(1, 1)};
  ShuffleElement w{1, -1, mono(1, {-1})};
  auto left = shuffle_mul(shuffle_mul(x, y), w);
  auto right = shuffle_mul(x, shuffle_mul(y, w));
  CHECK(left.value == right.value);
}

TEST_CASE("equal slope commutativity") {
  ShuffleElement a10{1, 0, LaurentPoly::constant(1, 1)};
  auto a20 = a_element(2, 0);
  CHECK(shuffle_mul(a10, a20).value == shuffle_mul(a20, a10).value);
  ShuffleElement a11{1, 1, mono(1, {1})};
  auto a22 = a_element(2, 2);
  CHECK(shuffle_mul(a11, a22).value == shuffle_mul(a22, a11).value);
}

TEST_CASE("variable bound") {
  set_max_vars(2);
  CHECK_THROWS_AS(a_element(3, 1), std::length_error);
  set_max_vars(5);
  CHECK_NOTHROW(a_element(3, 1));
}
