#ifndef BPSKALC_SHUFFLE_HPP
#define BPSKALC_SHUFFLE_HPP

// Shuffle-algebra generators and products: the A/A'/E/P elements and the
// symmetrized kernel products they live in.

#include <vector>

#include "bpskalc/laurent.hpp"

namespace bpsk::shuffle {

// Variable-count guard for the symmetrization loops. Initialized from the
// BPSKALC_MAX_VARS environment variable when set, else 5.
int max_vars();
void set_max_vars(int n);

enum class Kernel { xi, xip, w };

struct ShuffleElement {
  int d = 0;
  int v = 0;
  poly::LaurentPoly value;
};

// Exponents of the A_{d,v} symmetrand: ceil(vi/d) - ceil(v(i-1)/d) + delta.
std::vector<int> m_exponents(int d, int v);

// Multiply F by kernel(z_i/z_j) for arbitrary i != j (0-based indices).
void mul_kernel(poly::BinFraction& F, Kernel k, int i, int j);

// A_{d,v} via the Vandermonde form (the f_d rewriting); the default route.
ShuffleElement a_element(int d, int v);
// A_{d,v} assembled term by term from its definition; oracle for the above.
poly::LaurentPoly a_element_direct(int d, int v);

// A'_{k_1..k_d} over the w kernel; genuinely a rational function.
poly::BinFraction a_prime_element(const std::vector<int>& k);

// Multiplication by prod_{i != j} (1 - q^{-1} z_i z_j^{-1})^{-1}.
poly::BinFraction apply_F(const poly::LaurentPoly& f);

// i_*[E_{d,v}] = (1-q1^{-1})^{d-1} (1-q2^{-1})^{d-1} A_{d,v}.
ShuffleElement e_class(int d, int v);

// (-q^{-1})^{n-1} A_{nd,nv}.
ShuffleElement a_hat(int d, int v, int n);

// P_{nd,nv}, gcd(d,v) = 1.
ShuffleElement p_element(int d, int v, int n);

// The y-form symmetrization with numerator g_d; used by the q1 - q2 probe.
poly::LaurentPoly gd_symmetrization(int d, int v);

// Kernel product over shuffle coset representatives. The polynomial version
// throws std::domain_error("NotPolynomial") when the result is fractional
// (possible only for the w kernel).
poly::BinFraction shuffle_mul_fraction(const poly::LaurentPoly& f,
                                       const poly::LaurentPoly& g,
                                       Kernel kernel);
ShuffleElement shuffle_mul(const ShuffleElement& f, const ShuffleElement& g,
                           Kernel kernel = Kernel::xi);

}  // namespace bpsk::shuffle

#endif
