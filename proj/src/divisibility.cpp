#include "bpskalc/divisibility.hpp"

#include <stdexcept>

namespace bpsk::divis {

using poly::LaurentPoly;

namespace {

LaurentPoly q1_minus_1(int nz) {
  return LaurentPoly::monomial(nz, 1, 1, 0) - LaurentPoly::constant(nz, 1);
}

LaurentPoly q2_minus_1(int nz) {
  return LaurentPoly::monomial(nz, 1, 0, 1) - LaurentPoly::constant(nz, 1);
}

LaurentPoly qq_minus_1(int nz) {
  return LaurentPoly::monomial(nz, 1, 1, 1) - LaurentPoly::constant(nz, 1);
}

LaurentPoly q1_minus_q2(int nz) {
  return LaurentPoly::monomial(nz, 1, 1, 0) - LaurentPoly::monomial(nz, 1, 0, 1);
}

// Apply the K-relation induced by a coincident index pair: evaluate at
// q1 = 1, q2 = 1, or q2 = q1^{-1} (a representative of reduction modulo
// q1*q2 - 1).
enum class Relation { none, q1_is_1, q2_is_1, qq_is_1 };

LaurentPoly apply_relation(const LaurentPoly& f, Relation rel) {
  if (rel == Relation::none) return f;
  LaurentPoly out(f.num_z_vars());
  for (const auto& [k, c] : f.terms()) {
    poly::TermKey nk = k;
    switch (rel) {
      case Relation::q1_is_1:
        nk.q1 = 0;
        break;
      case Relation::q2_is_1:
        nk.q2 = 0;
        break;
      case Relation::qq_is_1:
        nk.q1 = k.q1 - k.q2;
        nk.q2 = 0;
        break;
      case Relation::none:
        break;
    }
    out.add_term(nk, c);
  }
  return out;
}

}  // namespace

LaurentPoly wheel_factor(int d, int num_z_vars) {
  LaurentPoly r = LaurentPoly::constant(num_z_vars, 1);
  for (int t = 0; t + 1 < d; ++t)
    r = r * q1_minus_1(num_z_vars) * q2_minus_1(num_z_vars) *
        qq_minus_1(num_z_vars);
  return r;
}

DivisionResult check_divisible(const poly::LaurentPoly& f, int d) {
  const int nz = f.num_z_vars();
  struct Named {
    LaurentPoly p;
    const char* name;
  };
  const Named factors[] = {{q1_minus_1(nz), "q1-1"},
                           {q2_minus_1(nz), "q2-1"},
                           {qq_minus_1(nz), "q1*q2-1"}};
  LaurentPoly cur = f;
  for (const auto& fac : factors)
    for (int t = 0; t + 1 < d; ++t) {
      auto q = poly::exact_divide(cur, fac.p);
      if (!q) return {std::nullopt, fac.name};
      cur = *q;
    }
  return {cur, ""};
}

LaurentPoly wheel_substitute(const poly::LaurentPoly& f, int i, int j, int k,
                             WheelVariant variant) {
  if (i == j && j == k) throw std::invalid_argument("AllEqual");
  const int nz = f.num_z_vars();
  // Chain z_i = c1 z_j, z_j = c2 z_k; exponents of q1/q2 in c1 and c2.
  int c1q1 = variant == WheelVariant::q1 ? -1 : 0;
  int c1q2 = variant == WheelVariant::q1 ? 0 : -1;
  int c2q1 = variant == WheelVariant::q1 ? 0 : -1;
  int c2q2 = variant == WheelVariant::q1 ? -1 : 0;

  Relation rel = Relation::none;
  std::map<int, LaurentPoly::MonomialImage> images;
  std::vector<int> ek(nz, 0);
  ek[k] = 1;
  if (i == j) {
    // c1 = 1 in K; substitute the merged variable into z_k.
    rel = variant == WheelVariant::q1 ? Relation::q1_is_1 : Relation::q2_is_1;
    if (j != k) images[j] = {1, c2q1, c2q2, ek};
  } else if (j == k) {
    // c2 = 1 in K; substitute z_i into z_k.
    rel = variant == WheelVariant::q1 ? Relation::q2_is_1 : Relation::q1_is_1;
    images[i] = {1, c1q1, c1q2, ek};
  } else if (i == k) {
    // z_i = c1 c2 z_i forces q1*q2 = 1; still eliminate z_j.
    rel = Relation::qq_is_1;
    images[j] = {1, c2q1, c2q2, ek};
  } else {
    images[i] = {1, c1q1 + c2q1, c1q2 + c2q2, ek};
    images[j] = {1, c2q1, c2q2, ek};
  }
  return apply_relation(f.substitute_z(images), rel);
}

LaurentPoly specialization_probe(const poly::LaurentPoly& f, ProbeKind kind) {
  const int nz = f.num_z_vars();
  std::map<int, LaurentPoly::MonomialImage> images;
  std::vector<int> zero(nz, 0);
  for (int i = 0; i < nz; ++i) {
    int e = i + 1;
    switch (kind) {
      case ProbeKind::q1pow:
        images[i] = {1, e, 0, zero};
        break;
      case ProbeKind::q2pow:
        images[i] = {1, 0, e, zero};
        break;
      case ProbeKind::qinvpow:
        images[i] = {1, -e, -e, zero};
        break;
    }
  }
  return f.substitute_z(images);
}

PrimitivityResult primitivity_check(const poly::LaurentPoly& e) {
  if (e.is_zero()) return {false, "zero"};
  if (e.content() != 1) return {false, "content"};
  const int nz = e.num_z_vars();
  struct Named {
    LaurentPoly p;
    const char* name;
  };
  const Named factors[] = {{q1_minus_1(nz), "q1-1"},
                           {q2_minus_1(nz), "q2-1"},
                           {qq_minus_1(nz), "q1*q2-1"},
                           {q1_minus_q2(nz), "q1-q2"}};
  for (const auto& fac : factors)
    if (poly::exact_divide(e, fac.p)) return {false, fac.name};
  return {true, ""};
}

}  // namespace bpsk::divis
