#include "bpskalc/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "bpskalc/laurent.hpp"
#include "json.hpp"

namespace bpsk::weights {

Weight rho(int d) {
  Weight r(d);
  for (int i = 1; i <= d; ++i) {
    r[i - 1] = mpq_class(2 * i - d - 1, 2);
    r[i - 1].canonicalize();
  }
  return r;
}

Weight tau(int d) {
  Weight r(d, mpq_class(1, d));
  return r;
}

Weight make_weight(const std::vector<int>& coords) {
  Weight r(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) r[i] = coords[i];
  return r;
}

bool is_integral(const Weight& chi) {
  for (const auto& c : chi)
    if (c.get_den() != 1) return false;
  return true;
}

bool is_dominant(const Weight& chi) {
  for (std::size_t i = 0; i + 1 < chi.size(); ++i)
    if (chi[i] > chi[i + 1]) return false;
  return true;
}

mpq_class coord_sum(const Weight& chi) {
  mpq_class s = 0;
  for (const auto& c : chi) s += c;
  return s;
}

std::optional<DominantShift> dominant_shift(const Weight& chi) {
  const int d = (int)chi.size();
  Weight shifted = chi;
  Weight r = rho(d);
  for (int i = 0; i < d; ++i) shifted[i] += r[i];
  int inversions = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      if (shifted[i] == shifted[j]) return std::nullopt;
      if (shifted[i] > shifted[j]) ++inversions;
    }
  std::sort(shifted.begin(), shifted.end());
  for (int i = 0; i < d; ++i) shifted[i] -= r[i];
  return DominantShift{inversions, std::move(shifted)};
}

bool in_polytope(const Weight& chi, const mpq_class& w, const mpq_class& r) {
  const int d = (int)chi.size();
  if (coord_sum(chi) != w) return false;
  std::vector<mpq_class> delta(d);
  for (int i = 0; i < d; ++i) delta[i] = chi[i] - w / d;
  std::sort(delta.begin(), delta.end(), std::greater<mpq_class>());
  mpq_class prefix = 0;
  for (int k = 1; k <= d; ++k) {
    prefix += delta[k - 1];
    if (prefix > 3 * r * k * (d - k)) return false;
  }
  return true;
}

mpq_class r_invariant(const Weight& chi) {
  const int d = (int)chi.size();
  mpq_class w = coord_sum(chi);
  std::vector<mpq_class> delta(d);
  for (int i = 0; i < d; ++i) delta[i] = chi[i] - w / d;
  std::sort(delta.begin(), delta.end(), std::greater<mpq_class>());
  mpq_class best = 0;
  mpq_class prefix = 0;
  for (int k = 1; k < d; ++k) {
    prefix += delta[k - 1];
    mpq_class cand = prefix / (3 * k * (d - k));
    if (cand > best) best = cand;
  }
  return best;
}

long n_lambda(const Cocharacter& lambda) {
  const int d = (int)lambda.size();
  long s = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (lambda[i] > lambda[j]) s += lambda[i] - lambda[j];
  return 2 * s;
}

bool on_face(const Weight& chi, const Cocharacter& lambda, const mpq_class& r) {
  const int d = (int)chi.size();
  if ((int)lambda.size() != d) throw std::invalid_argument("length mismatch");
  mpq_class w = coord_sum(chi);
  if (!in_polytope(chi, w, r)) return false;
  mpq_class lhs = 0;
  for (int i = 0; i < d; ++i) lhs += lambda[i] * (chi[i] - w / d);
  long pos = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (lambda[i] > lambda[j]) pos += lambda[i] - lambda[j];
  return lhs == 3 * r * pos;
}

std::vector<std::vector<int>> enumerate_magic_weights(int d, int w,
                                                      int d_bound) {
  if (d > d_bound) throw std::invalid_argument("enumeration bound exceeded");
  // chi+rho - w*tau has coordinates bounded by 3(d-1)/2 and |rho_i| <= (d-1)/2,
  // so integer coordinates of chi live in a small box around w/d.
  double center = (double)w / d;
  int lo = (int)std::floor(center - 2.0 * (d - 1)) - 1;
  int hi = (int)std::ceil(center + 2.0 * (d - 1)) + 1;
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d);
  Weight r = rho(d);
  std::function<void(int, int, int)> rec = [&](int idx, int minval, int rem) {
    if (idx == d) {
      if (rem != 0) return;
      Weight chi_rho(d);
      for (int i = 0; i < d; ++i) chi_rho[i] = cur[i] + r[i];
      if (in_polytope(chi_rho, w, mpq_class(1, 2))) out.push_back(cur);
      return;
    }
    for (int v = minval; v <= hi; ++v) {
      // Remaining coordinates are weakly increasing, so prune by achievable
      // sum range.
      int left = d - idx - 1;
      if (rem - v < (long)left * v) break;
      if (rem - v > (long)left * hi) continue;
      cur[idx] = v;
      rec(idx + 1, v, rem - v);
    }
  };
  rec(0, lo, w);
  return out;
}

bool propboundary_check(const Cocharacter& lambda, const Cocharacter& mu,
                        const Weight& chi, int d_bound) {
  const int d = (int)lambda.size();
  if (d > d_bound) throw std::invalid_argument("enumeration bound exceeded");
  // Positive roots of lambda, each carried with multiplicity three (one copy
  // per summand of g^{+3}).
  std::vector<std::pair<int, int>> roots;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (lambda[i] > lambda[j]) roots.emplace_back(i, j);
  const int nr = (int)roots.size();
  Weight r = rho(d);

  for (const auto& wperm : poly::all_permutations(d)) {
    // The combinatorial description of the admissible subsets only has to
    // match when at least one subset lands on the face at all; otherwise the
    // permutation is vacuous. Track both directions separately.
    bool any_on_face = false;
    bool missed_predicted = false;
    std::vector<int> mult(nr, 0);
    bool done = false;
    while (!done) {
      Weight v(d);
      for (int i = 0; i < d; ++i) {
        mpq_class c = chi[i] + r[i];
        for (int t = 0; t < nr; ++t) {
          if (roots[t].first == i) c -= mult[t];
          if (roots[t].second == i) c += mult[t];
        }
        v[wperm[i]] = c;
      }
      bool lhs = on_face(v, mu, mpq_class(1, 2));
      bool rhs = true;
      for (int t = 0; t < nr; ++t) {
        int pairing = mu[wperm[roots[t].first]] - mu[wperm[roots[t].second]];
        if (pairing < 0 && mult[t] != 3) rhs = false;
        if (pairing > 0 && mult[t] != 0) rhs = false;
      }
      if (lhs && !rhs) return false;
      if (lhs) any_on_face = true;
      if (rhs && !lhs) missed_predicted = true;
      // Advance the multiplicity vector (base-4 counter).
      int p = 0;
      while (p < nr && mult[p] == 3) mult[p++] = 0;
      if (p == nr)
        done = true;
      else
        ++mult[p];
    }
    if (any_on_face && missed_predicted) return false;
  }
  return true;
}

std::string weight_to_json(const Weight& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : w) j.push_back(c.get_str());
  return j.dump();
}

}  // namespace bpsk::weights
