#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "bpskalc/coproduct.hpp"
#include "bpskalc/shuffle.hpp"
#include "doctest.h"

using namespace bpsk;
using bpsk::poly::LaurentPoly;

TEST_CASE("delta_tilde on the d=2 generators") {
  auto t = coproduct::delta_tilde(shuffle::a_element(2, 0).value, 1, 1);
  REQUIRE(t.terms.size() == 1);
  auto it = t.terms.begin();
  CHECK(it->first.first == std::vector<int>{-1});
  CHECK(it->first.second == std::vector<int>{1});
  CHECK(it->second == LaurentPoly::constant(0, 1));

  auto z = coproduct::delta_tilde(schur::weyl_character({0, 0}), 1, 1);
  CHECK(z.terms.empty());

  auto n = coproduct::delta_tilde(LaurentPoly(2), 1, 1);
  CHECK(n.terms.empty());
}

TEST_CASE("twist data") {
  auto t11 = coproduct::twist(1, 1, 1);
  CHECK(t11.nu == LaurentPoly::monomial(2, 1, -1, -1, {-1, 1}));
  CHECK(t11.omega_sign == -1);
  auto t112 = coproduct::twist(1, 1, 2);
  CHECK(t112.nu == LaurentPoly::monomial(4, 1, -4, -4, {-2, -2, 2, 2}));
  CHECK(t112.omega_sign == 1);
  auto deg = coproduct::twist(1, 1, 0);
  CHECK(deg.nu == LaurentPoly::constant(0, 1));
  CHECK(deg.omega_sign == 1);
}

TEST_CASE("check_1236bis") {
  CHECK(coproduct::check_1236bis(2, 1, 0, 1, 1).pass);
  CHECK(coproduct::check_1236bis(2, 1, 1, 1, 1).pass);
  CHECK(coproduct::check_1236bis(3, 1, 0, 1, 2).pass);
  CHECK(coproduct::check_1236bis(3, 1, 1, 2, 1).pass);
  // Opposite face convention must fail.
  CHECK(!coproduct::check_1236bis(2, 1, 0, 1, 1,
                                  coproduct::Face::upper_first)
             .pass);
}

TEST_CASE("check_cor44") {
  CHECK(coproduct::check_cor44(1, 1, 1, 1, 1, 0).pass);
  CHECK(coproduct::check_cor44(1, 1, 1, 1, 1, 1).pass);
  // Inserting the swap twist breaks the square.
  CHECK(!coproduct::check_cor44(1, 1, 1, 1, 1, 0, true).pass);
}

TEST_CASE("check_primitive_shuffle") {
  CHECK(coproduct::check_primitive_shuffle(2, 1, 0).pass);
  CHECK(coproduct::check_primitive_shuffle(2, 1, 1).pass);
  CHECK(coproduct::check_primitive_shuffle(3, 1, 0).pass);
  CHECK(coproduct::check_primitive_shuffle(1, 2, 1).pass);
  // Wrong Newton coefficient: the image no longer vanishes.
  CHECK(!coproduct::check_primitive_shuffle(2, 1, 0, 5).pass);
}

TEST_CASE("coassociativity on A generators") {
  for (int v : {0, 1}) {
    LaurentPoly a3 = shuffle::a_element(3, v).value;
    // (delta (x) id) after delta_{2,1} versus (id (x) delta) after
    // delta_{1,2}, flattened into three blocks.
    auto d21 = coproduct::delta_tilde(a3, 2, 1);
    LaurentPoly left(3);
    for (const auto& [k, c] : d21.terms) {
      auto inner = coproduct::delta_tilde(schur::weyl_character(k.first), 1, 1);
      for (const auto& [kk, cc] : inner.terms) {
        LaurentPoly w1 = schur::weyl_character(kk.first).embed(3);
        LaurentPoly w2 = schur::weyl_character(kk.second).embed(3, 1);
        LaurentPoly w3 = schur::weyl_character(k.second).embed(3, 2);
        left += c.embed(3) * cc.embed(3) * w1 * w2 * w3;
      }
    }
    auto d12 = coproduct::delta_tilde(a3, 1, 2);
    LaurentPoly right(3);
    for (const auto& [k, c] : d12.terms) {
      auto inner =
          coproduct::delta_tilde(schur::weyl_character(k.second), 1, 1);
      for (const auto& [kk, cc] : inner.terms) {
        LaurentPoly w1 = schur::weyl_character(k.first).embed(3);
        LaurentPoly w2 = schur::weyl_character(kk.first).embed(3, 1);
        LaurentPoly w3 = schur::weyl_character(kk.second).embed(3, 2);
        right += c.embed(3) * cc.embed(3) * w1 * w2 * w3;
      }
    }
    CHECK(left == right);
  }
}
