#include "bpskalc/schur.hpp"

#include <stdexcept>

#include "json.hpp"

namespace bpsk::schur {

using poly::LaurentPoly;
using poly::TermKey;

poly::LaurentPoly weyl_character(const DominantWeight& chi) {
  const int d = (int)chi.size();
  if (d == 0) return LaurentPoly::constant(0, 1);
  for (int i = 0; i + 1 < d; ++i)
    if (chi[i] > chi[i + 1])
      throw std::invalid_argument("weyl_character needs a dominant weight");
  // Shift by a power of det to clear negative entries, divide back at the end.
  int k = chi[0] < 0 ? -chi[0] : 0;
  std::vector<int> e(d);
  for (int i = 0; i < d; ++i) e[i] = chi[i] + k + i;

  LaurentPoly alternant(d);
  for (const auto& sigma : poly::all_permutations(d)) {
    int inv = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (sigma[i] > sigma[j]) ++inv;
    TermKey key;
    key.z.resize(d);
    for (int i = 0; i < d; ++i) key.z[i] = e[sigma[i]];
    alternant.add_term(key, (inv % 2 == 0) ? 1 : -1);
  }
  LaurentPoly vandermonde = LaurentPoly::constant(d, 1);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      vandermonde = vandermonde * poly::factor_poly(d, poly::BinFactor{i, j, 0, 0});
  auto quotient = poly::exact_divide(alternant, vandermonde);
  if (!quotient) throw std::logic_error("alternant not divisible by Vandermonde");
  if (k == 0) return *quotient;
  std::vector<int> det(d, -k);
  return quotient->mul_monomial(1, 0, 0, det);
}

SchurExpansion expand_in_schur(const poly::LaurentPoly& f) {
  if (!f.is_symmetric()) throw std::domain_error("NotSymmetric");
  const int d = f.num_z_vars();
  SchurExpansion out;
  LaurentPoly rem = f;
  int guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 200000) throw std::logic_error("schur expansion did not terminate");
    // Dominance-maximal monomial: among weakly increasing exponent vectors,
    // the largest when compared from z_d downwards.
    const std::vector<int>* best = nullptr;
    for (const auto& [k, c] : rem.terms()) {
      bool incr = true;
      for (int i = 0; i + 1 < d; ++i)
        if (k.z[i] > k.z[i + 1]) {
          incr = false;
          break;
        }
      if (!incr) continue;
      if (!best) {
        best = &k.z;
        continue;
      }
      for (int i = d - 1; i >= 0; --i) {
        if (k.z[i] != (*best)[i]) {
          if (k.z[i] > (*best)[i]) best = &k.z;
          break;
        }
      }
    }
    if (!best) throw std::logic_error("no dominant monomial in symmetric remainder");
    DominantWeight chi = *best;
    LaurentPoly coeff(0);
    for (const auto& [k, c] : rem.terms()) {
      if (k.z == chi) {
        TermKey qk;
        qk.q1 = k.q1;
        qk.q2 = k.q2;
        coeff.add_term(qk, c);
      }
    }
    rem -= weyl_character(chi) * coeff.embed(d);
    auto it = out.find(chi);
    if (it == out.end())
      out.emplace(std::move(chi), std::move(coeff));
    else {
      it->second += coeff;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

poly::LaurentPoly from_schur(const SchurExpansion& e, int d) {
  LaurentPoly r(d);
  for (const auto& [chi, c] : e) r += weyl_character(chi) * c.embed(d);
  return r;
}

std::string schur_to_json(const SchurExpansion& e) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [chi, c] : e) {
    nlohmann::json t;
    t["weight"] = chi;
    t["coeff"] = nlohmann::json::parse(c.to_json());
    j.push_back(t);
  }
  return j.dump();
}

}  // namespace bpsk::schur
