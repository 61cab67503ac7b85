#ifndef BPSKALC_COPRODUCT_HPP
#define BPSKALC_COPRODUCT_HPP

// K-theoretic coproduct via Schur-face restriction, the block twists, and the
// product/coproduct compatibility checkers.

#include <map>
#include <utility>
#include <vector>

#include "bpskalc/laurent.hpp"
#include "bpskalc/schur.hpp"

namespace bpsk::coproduct {

// Finite map (dominant weight of the first block, dominant weight of the
// second block) -> K-coefficient.
struct TensorElement {
  int first_vars = 0;
  int second_vars = 0;
  std::map<std::pair<std::vector<int>, std::vector<int>>, poly::LaurentPoly>
      terms;
};

struct Twist {
  poly::LaurentPoly nu;  // the monomial q^{nu_{a,b}} in a*d + b*d variables
  int omega_sign = 1;
};

enum class Face { lower_first, upper_first };

// Restriction of a symmetric Laurent polynomial in m1+m2 variables to the
// two-block face: Schur terms whose rho-shifted weight lies on the face
// survive and split into (first m1, last m2) coordinates. Face::lower_first
// is the convention where the first block carries the smaller cocharacter
// values; Face::upper_first is the opposite-face negative control.
TensorElement delta_tilde(const poly::LaurentPoly& f, int m1, int m2,
                          Face face = Face::lower_first);

// The twist monomial q^{nu_{a,b}} and sign omega = (-1)^{(ad)(bd)} q^{nu}.
Twist twist(int a, int b, int d);

// Multiply a tensor element by the inverse twist omega^{-1}; monomial factors
// act on each block as uniform weight shifts.
TensorElement apply_omega_inverse(const TensorElement& t, int a, int b, int d);

// Flatten into a Laurent polynomial over disjoint variable blocks.
poly::LaurentPoly flatten(const TensorElement& t);

struct CheckResult {
  bool pass = false;
  poly::LaurentPoly diff;
};

// Coproduct of the A-generator against the closed product form.
CheckResult check_1236bis(int n, int d, int v, int a, int b,
                          Face face = Face::lower_first);

// Compatibility square between the kernel product and the block coproduct on
// A-generator inputs. insert_twist enables the negative-control monomial on
// the swapped middle factors.
CheckResult check_cor44(int a, int b, int c, int e, int d, int v,
                        bool insert_twist = false);

// The Newton-polynomial candidate in the A-hat generators is killed by every
// proper block coproduct. coefficient_scale multiplies the leading Newton
// coefficient and serves as a negative control when != 1.
CheckResult check_primitive_shuffle(int n, int d, int v,
                                    int coefficient_scale = 1);

// The degree-n monomial basis element for a partition: the kernel product of
// the A-hat generators along the parts.
poly::LaurentPoly ahat_monomial(const std::vector<int>& parts, int d, int v);

}  // namespace bpsk::coproduct

#endif
