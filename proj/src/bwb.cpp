#include "bpskalc/bwb.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "bpskalc/schur.hpp"
#include "bpskalc/shuffle.hpp"

namespace bpsk::bwb {

using poly::LaurentPoly;
using weights::Weight;

namespace {

// One entry of the expansion set: adds +1/-1 to the sigma shift and a
// q-monomial to the collected twist.
struct Entry {
  int plus = 0;
  int minus = 0;
  int q1 = 0;
  int q2 = 0;
};

std::vector<int> to_int_weight(const Weight& w) {
  std::vector<int> r(w.size());
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t].get_den() != 1) throw std::logic_error("non-integral weight");
    r[t] = (int)w[t].get_num().get_si();
  }
  return r;
}

// Signed sum over all subsets of the entry list applied to the base weight.
LaurentPoly expand_subsets(const std::vector<Entry>& entries,
                           const Weight& base, int nvars) {
  const int m = (int)entries.size();
  if (m >= 24) throw std::length_error("subset enumeration bound exceeded");
  // Accumulate monomial coefficients per dominant weight, then expand each
  // Weyl character once.
  std::map<std::vector<int>, LaurentPoly> coeffs;
  for (long mask = 0; mask < (1L << m); ++mask) {
    Weight chi = base;
    int q1e = 0, q2e = 0, size = 0;
    for (int t = 0; t < m; ++t)
      if (mask & (1L << t)) {
        ++size;
        chi[entries[t].plus] -= 1;
        chi[entries[t].minus] += 1;
        q1e += entries[t].q1;
        q2e += entries[t].q2;
      }
    auto shift = weights::dominant_shift(chi);
    if (!shift) continue;
    mpz_class sign = ((size - shift->length) % 2 == 0) ? 1 : -1;
    auto key = to_int_weight(shift->shifted);
    auto it = coeffs.find(key);
    LaurentPoly mono = LaurentPoly::monomial(nvars, sign, -q1e, -q2e);
    if (it == coeffs.end())
      coeffs.emplace(key, mono);
    else
      it->second += mono;
  }
  LaurentPoly total(nvars);
  for (const auto& [chi, c] : coeffs) {
    if (c.is_zero()) continue;
    total += c * schur::weyl_character(chi);
  }
  return total;
}

}  // namespace

Weight chi_n(int n, int d, int v) {
  if (std::gcd(d, v) != 1) throw std::invalid_argument("chi_n needs gcd(d,v)=1");
  const int N = n * d;
  Weight chi(N, mpq_class(v, d));
  for (auto& c : chi) c.canonicalize();
  for (int i = 1; i <= N - 1; ++i) {
    // vi/d + 1 - ceil(vi/d)
    long num = (long)v * i;
    long ceilq = num / d + ((num % d != 0 && num > 0) ? 1 : 0);
    mpq_class a = mpq_class(num, d) + 1 - ceilq;
    a.canonicalize();
    chi[i] += a;
    chi[i - 1] -= a;
  }
  return chi;
}

LaurentPoly a_via_bwb(int n, int d, int v) {
  const int N = n * d;
  if (N > shuffle::max_vars())
    throw std::length_error("variable bound exceeded");
  Weight base = chi_n(n, d, v);
  if (!weights::is_integral(base))
    throw std::logic_error("chi_n not integral");
  std::vector<Entry> entries;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < i; ++j) {
      entries.push_back({i, j, 1, 0});
      entries.push_back({i, j, 0, 1});
      if (i > j + 1) entries.push_back({j, i, 1, 1});
    }
  return expand_subsets(entries, base, N);
}

LaurentPoly induction_class(int a, int b, const weights::Weight& chi) {
  const int N = a + b;
  if ((int)chi.size() != N) throw std::invalid_argument("length mismatch");
  if (N > shuffle::max_vars())
    throw std::length_error("variable bound exceeded");
  std::vector<Entry> entries;
  for (int j = 0; j < a; ++j)
    for (int i = a; i < N; ++i) {
      entries.push_back({i, j, 1, 0});
      entries.push_back({i, j, 0, 1});
      entries.push_back({j, i, 1, 1});
    }
  return expand_subsets(entries, chi, N);
}

}  // namespace bpsk::bwb
