#include "bpskalc/dtseries.hpp"

#include <numeric>
#include <stdexcept>

namespace bpsk::dt {

PowerSeries product_formula(const std::map<int, int>& exponents, int sign,
                            int N) {
  if (N > 64) throw std::invalid_argument("order bound exceeded");
  // L = sum_d e_d log(1 - (s q)^d) = -sum_d e_d sum_k s^{dk} q^{dk} / k.
  std::vector<mpq_class> L(N + 1, 0);
  for (const auto& [d, e] : exponents) {
    if (d < 1) throw std::invalid_argument("factor degree must be positive");
    if (e == 0) continue;
    for (int k = 1; d * k <= N; ++k) {
      int s = (sign < 0 && (d * k) % 2 == 1) ? -1 : 1;
      L[d * k] -= mpq_class(e * s, k);
    }
  }
  // E = exp(L) via n E_n = sum_{k=1}^{n} k L_k E_{n-k}.
  std::vector<mpq_class> E(N + 1, 0);
  E[0] = 1;
  for (int n = 1; n <= N; ++n) {
    mpq_class s = 0;
    for (int k = 1; k <= n; ++k) s += k * L[k] * E[n - k];
    E[n] = s / n;
  }
  PowerSeries out;
  out.coeffs.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    mpq_class c = E[n];
    c.canonicalize();
    if (c.get_den() != 1)
      throw std::logic_error("NonIntegralCoefficient");
    out.coeffs[n] = c.get_num();
  }
  return out;
}

namespace {

// Partition numbers p(0..n) by the standard recurrence-free dp.
std::vector<mpz_class> partition_numbers(int n) {
  std::vector<mpz_class> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  return p;
}

}  // namespace

std::vector<mpz_class> a_d_enumerate(int d_max) {
  if (d_max > 20) throw std::invalid_argument("enumeration bound exceeded");
  // Distinct coprime slopes a/b in [0,1) with b <= d_max.
  std::vector<std::pair<int, int>> slopes;
  for (int b = 1; b <= d_max; ++b)
    for (int a = 0; a < b; ++a)
      if (std::gcd(a, b) == 1) slopes.emplace_back(a, b);
  auto p = partition_numbers(d_max);
  std::vector<mpz_class> acc(d_max + 1, 0);
  // Walk the slope list; at each slope choose a multiplicity n >= 0.
  auto rec = [&](auto&& self, std::size_t idx, int used,
                 const mpz_class& weight) -> void {
    if (idx == slopes.size()) {
      acc[used] += weight;
      return;
    }
    int b = slopes[idx].second;
    self(self, idx + 1, used, weight);
    for (int n = 1; used + n * b <= d_max; ++n)
      self(self, idx + 1, used + n * b, weight * p[n]);
  };
  rec(rec, 0, 0, 1);
  return acc;
}

bool slope_bijection_check(int d) {
  if (d > 10000) throw std::invalid_argument("bound exceeded");
  long count = 0;
  for (int b = 1; b <= d; ++b) {
    if (d % b != 0) continue;
    for (int a = 0; a < b; ++a)
      if (std::gcd(a, b) == 1) ++count;
  }
  return count == d;
}

}  // namespace bpsk::dt
