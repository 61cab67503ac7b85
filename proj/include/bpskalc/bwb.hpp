#ifndef BPSKALC_BWB_HPP
#define BPSKALC_BWB_HPP

// Alternating-sum expansion of the A-generators over Weyl-shifted Schur
// characters, and the two-block induction class. Serves as an independent
// oracle for the shuffle module.

#include "bpskalc/laurent.hpp"
#include "bpskalc/weights.hpp"

namespace bpsk::bwb {

// chi_n = sum_{i=1}^{nd-1} (vi/d + 1 - ceil(vi/d)) (beta_{i+1}-beta_i)
//         + (v/d) sum_i beta_i. Requires gcd(d,v) = 1.
weights::Weight chi_n(int n, int d, int v);

// A_{nd,nv} as the signed sum over subsets of the L-set, each contributing
// (-1)^{|I|-l(I)} q_I^{-1} times the Weyl character of (chi_n - sigma_I)+.
// Requires gcd(d,v) = 1 and nd within the variable bound.
poly::LaurentPoly a_via_bwb(int n, int d, int v);

// K-theory class of induction along the two-block parabolic with block sizes
// (a, b) applied to the exterior product of Schur characters with combined
// highest weight chi (length a+b, dominant on each block).
poly::LaurentPoly induction_class(int a, int b, const weights::Weight& chi);

}  // namespace bpsk::bwb

#endif
