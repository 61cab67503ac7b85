#ifndef BPSKALC_DTSERIES_HPP
#define BPSKALC_DTSERIES_HPP

// Truncated integer power series for the wall-crossing product identities and
// the dimension generating function.

#include <gmpxx.h>

#include <map>
#include <vector>

namespace bpsk::dt {

struct PowerSeries {
  std::vector<mpz_class> coeffs;  // c_0 .. c_N
  int order() const { return (int)coeffs.size() - 1; }
};

// Expand prod_{d >= 1} (1 - (sign*q)^d)^{e_d} to order N; sign is +1 for q
// and -1 for -q. Exact log-exp over Q with integrality asserted.
PowerSeries product_formula(const std::map<int, int>& exponents, int sign,
                            int N);

// a_d = sum over sets of distinct coprime slopes a_i/b_i in [0,1) with
// multiplicities n_i >= 1 and sum n_i b_i = d of prod p(n_i).
std::vector<mpz_class> a_d_enumerate(int d_max);

// Number of triples (n, a, b) with d = b*n, gcd(a,b) = 1, 0 <= a < b equals
// d.
bool slope_bijection_check(int d);

}  // namespace bpsk::dt

#endif
