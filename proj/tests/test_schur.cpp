#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "bpskalc/schur.hpp"
#include "doctest.h"

using namespace bpsk::schur;
using bpsk::poly::LaurentPoly;

namespace {

LaurentPoly z(int d, int i, int e = 1) {
  std::vector<int> v(d, 0);
  v[i] = e;
  return LaurentPoly::monomial(d, 1, 0, 0, v);
}

}  // namespace

TEST_CASE("weyl_character basics") {
  CHECK(weyl_character({0, 1}) == z(2, 0) + z(2, 1));
  // sl class: s_{(-1,1)} = z1^{-1} z2 + 1 + z1 z2^{-1}.
  LaurentPoly sl = LaurentPoly::constant(2, 1) +
                   LaurentPoly::monomial(2, 1, 0, 0, {-1, 1}) +
                   LaurentPoly::monomial(2, 1, 0, 0, {1, -1});
  CHECK(weyl_character({-1, 1}) == sl);
  CHECK(weyl_character({3}) == z(1, 0, 3));
}

TEST_CASE("determinant shift identity") {
  for (int k : {1, 2}) {
    auto lhs = weyl_character({0 + k, 2 + k, 3 + k});
    auto rhs = weyl_character({0, 2, 3}).mul_monomial(1, 0, 0, {k, k, k});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pieri for d=2") {
  auto s01 = weyl_character({0, 1});
  CHECK(s01 * s01 == weyl_character({0, 2}) + weyl_character({1, 1}));
}

TEST_CASE("expand_in_schur basics") {
  auto e = expand_in_schur(z(2, 0) + z(2, 1));
  REQUIRE(e.size() == 1);
  CHECK(e.begin()->first == DominantWeight{0, 1});
  CHECK(e.begin()->second == LaurentPoly::constant(0, 1));

  CHECK(expand_in_schur(LaurentPoly(2)).empty());
  CHECK_THROWS_AS(expand_in_schur(z(2, 0)), std::domain_error);
}

TEST_CASE("round trip on random symmetric polynomials") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(-2, 2), c(-4, 4);
  for (int d = 2; d <= 4; ++d) {
    for (int t = 0; t < 8; ++t) {
      // Symmetrize a random polynomial.
      LaurentPoly p(d);
      for (int s = 0; s < 3; ++s) {
        bpsk::poly::TermKey k;
        k.q1 = e(rng);
        k.q2 = e(rng);
        k.z.resize(d);
        for (int i = 0; i < d; ++i) k.z[i] = e(rng);
        p.add_term(k, c(rng));
      }
      LaurentPoly sym(d);
      for (const auto& sigma : bpsk::poly::all_permutations(d))
        sym += p.permute_z(sigma);
      auto exp = expand_in_schur(sym);
      CHECK(from_schur(exp, d) == sym);
    }
  }
}
