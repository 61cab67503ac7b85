#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "bpskalc/bwb.hpp"
#include "bpskalc/schur.hpp"
#include "bpskalc/shuffle.hpp"
#include "doctest.h"

using namespace bpsk;
using bpsk::poly::LaurentPoly;

TEST_CASE("chi_n values") {
  CHECK(bwb::chi_n(1, 2, 1) ==
        weights::Weight{mpq_class(0), mpq_class(1)});
  CHECK(bwb::chi_n(2, 1, 0) ==
        weights::Weight{mpq_class(-1), mpq_class(1)});
  CHECK(bwb::chi_n(1, 1, 5) == weights::Weight{mpq_class(5)});
  CHECK(bwb::chi_n(2, 2, 1) == weights::make_weight({0, 0, 1, 1}));
  CHECK(weights::coord_sum(bwb::chi_n(2, 2, 1)) == 2);
}

TEST_CASE("a_via_bwb small closed forms") {
  // d=1: the L set is empty.
  CHECK(bwb::a_via_bwb(1, 1, 3) == LaurentPoly::monomial(1, 1, 0, 0, {3}));
  CHECK(bwb::a_via_bwb(1, 2, 1) == shuffle::a_element(2, 1).value);
  CHECK(bwb::a_via_bwb(2, 1, 0) == shuffle::a_element(2, 0).value);
}

TEST_CASE("a_via_bwb agrees with the shuffle route") {
  for (int nd = 1; nd <= 4; ++nd)
    for (int n = 1; n <= nd; ++n) {
      if (nd % n != 0) continue;
      int d = nd / n;
      for (int v = -3; v <= 3; ++v) {
        if (std::gcd(d, v) != 1) continue;
        CHECK(bwb::a_via_bwb(n, d, v) ==
              shuffle::a_element(nd, n * v).value);
      }
    }
}

TEST_CASE("induction_class matches the kernel product at d=2") {
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y) {
      shuffle::ShuffleElement f{1, x, LaurentPoly::monomial(1, 1, 0, 0, {x})};
      shuffle::ShuffleElement g{1, y, LaurentPoly::monomial(1, 1, 0, 0, {y})};
      LaurentPoly prod = shuffle::shuffle_mul(f, g).value;
      CHECK(bwb::induction_class(1, 1, weights::make_weight({x, y})) == prod);
    }
}

TEST_CASE("trivial induction") {
  // One block: no cross pairs, the class is the plain Weyl character.
  CHECK(bwb::induction_class(2, 0, weights::make_weight({0, 1})) ==
        schur::weyl_character({0, 1}));
}
