#ifndef BPSKALC_SYMFUNC_HPP
#define BPSKALC_SYMFUNC_HPP

// Symmetric functions over Q in the elementary basis: product, coproduct,
// Newton power sums, and primitive-space computations, plus the consistency
// check against the shuffle model.

#include <gmpxx.h>

#include <map>
#include <vector>

namespace bpsk::symfunc {

// Partition = weakly decreasing positive parts; the empty partition is the
// unit e-monomial.
using Partition = std::vector<int>;

// Finite Q-linear combination of e-monomials e_{p1} e_{p2} ...
using SymFunc = std::map<Partition, mpq_class>;

// Tensor square, keyed by pairs of e-monomials.
using SymFunc2 = std::map<std::pair<Partition, Partition>, mpq_class>;

SymFunc sf_unit();
SymFunc sf_e(int n);  // single generator e_n

SymFunc sf_add(const SymFunc& f, const SymFunc& g);
SymFunc sf_scale(const SymFunc& f, const mpq_class& c);
SymFunc sf_mul(const SymFunc& f, const SymFunc& g);
SymFunc2 sf_coproduct(const SymFunc& f);
SymFunc2 sf2_mul(const SymFunc2& f, const SymFunc2& g);

// p_n in the e-basis via the Newton recursion.
SymFunc newton_p(int n);

struct PrimitivesResult {
  int dimension = 0;
  SymFunc basis;  // a kernel basis vector when dimension >= 1
};

// Exact kernel of the reduced coproduct on the degree-n e-monomial basis.
PrimitivesResult primitives_dim(int n);

// Specialized-rank certificate that the shuffle-model primitive space at
// (n, d, v) has dimension exactly one. Uses seeded rational (q1, q2)
// specializations; resamples on rank drop.
bool phi_consistency(int n, int d, int v, unsigned seed = 1);

// All partitions of n, lexicographically decreasing parts.
std::vector<Partition> partitions_of(int n);

}  // namespace bpsk::symfunc

#endif
