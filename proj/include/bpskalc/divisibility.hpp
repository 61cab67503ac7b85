#ifndef BPSKALC_DIVISIBILITY_HPP
#define BPSKALC_DIVISIBILITY_HPP

// Divisibility by the wheel factor, wheel-condition substitutions, and
// specialization probes on K-classes.

#include <optional>
#include <string>

#include "bpskalc/laurent.hpp"

namespace bpsk::divis {

// (q1-1)^{d-1} (q2-1)^{d-1} (q1 q2-1)^{d-1}, in num_z_vars variables.
poly::LaurentPoly wheel_factor(int d, int num_z_vars = 0);

struct DivisionResult {
  std::optional<poly::LaurentPoly> quotient;
  std::string failing_factor;  // set when quotient is empty
};

// Sequential exact division by the three wheel factors, each d-1 times.
DivisionResult check_divisible(const poly::LaurentPoly& f, int d);

enum class WheelVariant { q1, q2 };

// The chained substitution z_i = c1*z_j = c1*c2*z_k with (c1,c2) =
// (q1^{-1}, q2^{-1}) for variant q1 and (q2^{-1}, q1^{-1}) for variant q2.
// Coincident index pairs induce a relation in K (q1=1, q2=1, or q1*q2=1)
// applied as an exact remainder. Throws std::invalid_argument("AllEqual")
// when i == j == k. Indices are 0-based.
poly::LaurentPoly wheel_substitute(const poly::LaurentPoly& f, int i, int j,
                                   int k, WheelVariant variant);

enum class ProbeKind { q1pow, q2pow, qinvpow };

// Substitute z_i = q1^i, q2^i, or (q1 q2)^{-i} (1-based i); the result is
// z-free.
poly::LaurentPoly specialization_probe(const poly::LaurentPoly& f,
                                       ProbeKind kind);

struct PrimitivityResult {
  bool pass = false;
  std::string factor;  // offending factor or "content" when pass is false
};

// Integer content 1 and no exact division by q1-1, q2-1, q1*q2-1, or q1-q2.
PrimitivityResult primitivity_check(const poly::LaurentPoly& e);

}  // namespace bpsk::divis

#endif
