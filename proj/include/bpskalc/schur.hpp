#ifndef BPSKALC_SCHUR_HPP
#define BPSKALC_SCHUR_HPP

// Laurent Schur polynomials (Weyl characters of GL(d)) and expansion of
// symmetric Laurent polynomials in the Schur basis.

#include <map>
#include <string>
#include <vector>

#include "bpskalc/laurent.hpp"

namespace bpsk::schur {

// Weakly increasing integer coordinates.
using DominantWeight = std::vector<int>;

// Finite map dominant weight -> K-coefficient (Laurent polynomial with zero
// z-variables).
using SchurExpansion = std::map<DominantWeight, poly::LaurentPoly>;

// Weyl character of highest weight chi, as a symmetric Laurent polynomial in
// num_z_vars == chi.size() variables, via the ratio of alternants.
poly::LaurentPoly weyl_character(const DominantWeight& chi);

// Greedy leading-monomial expansion; throws NotSymmetric (std::domain_error)
// when f is not S_d-invariant.
SchurExpansion expand_in_schur(const poly::LaurentPoly& f);

poly::LaurentPoly from_schur(const SchurExpansion& e, int d);

std::string schur_to_json(const SchurExpansion& e);

}  // namespace bpsk::schur

#endif
