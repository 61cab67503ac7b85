#ifndef BPSKALC_WEIGHTS_HPP
#define BPSKALC_WEIGHTS_HPP

// Weight-lattice combinatorics for T(d) inside GL(d): the dotted Weyl action,
// the magic polytope membership test, faces, and the boundary-restriction
// brute-force checker.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace bpsk::weights {

// Exact rational coordinate vector in the basis beta_1..beta_d.
using Weight = std::vector<mpq_class>;
// Integer pairings <lambda, beta_i>.
using Cocharacter = std::vector<int>;

Weight rho(int d);
Weight tau(int d);  // sigma_d / d: all coordinates 1/d
Weight make_weight(const std::vector<int>& coords);

bool is_integral(const Weight& chi);
bool is_dominant(const Weight& chi);  // weakly increasing coordinates
mpq_class coord_sum(const Weight& chi);

struct DominantShift {
  int length = 0;  // inversion count of the sorting permutation
  Weight shifted;  // w*(chi) = w(chi+rho)-rho, dominant
};

// Dotted Weyl action: sorts chi+rho strictly increasing. Returns nullopt when
// chi+rho has a repeated coordinate (the rho-singular case).
std::optional<DominantShift> dominant_shift(const Weight& chi);

// Membership of chi in the polytope 3r * sum of [0, beta_i - beta_j] + w*tau_d,
// decided by the cut criterion for circulations on the complete digraph.
bool in_polytope(const Weight& chi, const mpq_class& w, const mpq_class& r);

// Smallest r with chi inside the polytope translated by <1,chi>*tau_d.
mpq_class r_invariant(const Weight& chi);

// n_lambda = 2 * sum of positive pairings <lambda, beta_i - beta_j>.
long n_lambda(const Cocharacter& lambda);

// chi lies on the face of the scale-r polytope where <lambda,.> is maximal.
bool on_face(const Weight& chi, const Cocharacter& lambda, const mpq_class& r);

// All integral dominant chi with coordinate sum w and chi+rho in the magic
// polytope at r = 1/2.
std::vector<std::vector<int>> enumerate_magic_weights(int d, int w,
                                                      int d_bound = 6);

// Brute-force check of the boundary-restriction rule: for every w in S_d and
// every multisubset I of the lambda-positive weights of g^{+3} (multiplicity
// up to 3 per root), w(chi - sigma_I + rho) lies on F(mu) exactly when I
// contains every phi-negative root with full multiplicity and otherwise only
// phi-zero roots, where phi = w^{-1} mu.
bool propboundary_check(const Cocharacter& lambda, const Cocharacter& mu,
                        const Weight& chi, int d_bound = 3);

std::string weight_to_json(const Weight& w);

}  // namespace bpsk::weights

#endif
