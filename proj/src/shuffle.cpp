#include "bpskalc/shuffle.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace bpsk::shuffle {

using poly::BinFactor;
using poly::BinFraction;
using poly::LaurentPoly;

namespace {

int g_max_vars = 0;

int floordiv(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceildiv(int a, int b) { return -floordiv(-a, b); }

void check_vars(int d) {
  if (d > max_vars()) throw std::length_error("variable bound exceeded");
}

// z_b - q1^e1 q2^e2 z_a as a polynomial, either variable order.
LaurentPoly binom(int nz, int a, int b, int e1, int e2) {
  std::vector<int> eb(nz, 0);
  eb[b] = 1;
  LaurentPoly p = LaurentPoly::monomial(nz, 1, 0, 0, eb);
  std::vector<int> ea(nz, 0);
  ea[a] = 1;
  p += LaurentPoly::monomial(nz, -1, e1, e2, ea);
  return p;
}

// Multiply F by 1/(1 - q^{-1} z_i^{-1} z_{i+1}), the chain factor.
void mul_chain_inverse(BinFraction& F, int i) {
  // 1/(1 - q^{-1} z_i^{-1} z_{i+1}) = -q z_i / (z_{i+1} - q z_i).
  std::vector<int> ei(F.num_z_vars(), 0);
  ei[i] = 1;
  F.mul_monomial(-1, 1, 1, ei);
  F.divide_by_factor(i, i + 1, 1, 1);
}

LaurentPoly vandermonde(int d) {
  LaurentPoly v = LaurentPoly::constant(d, 1);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) v = v * binom(d, i, j, 0, 0);
  return v;
}

// Sum of sgn(sigma) * sigma(h) over the symmetric group.
LaurentPoly antisymmetrize(const LaurentPoly& h) {
  const int d = h.num_z_vars();
  LaurentPoly total(d);
  for (const auto& sigma : poly::all_permutations(d)) {
    int inv = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (sigma[i] > sigma[j]) ++inv;
    LaurentPoly img = h.permute_z(sigma);
    total += (inv % 2 == 0) ? img : -img;
  }
  return total;
}

// Shared Vandermonde-form assembly of sym:m2 / sym:mm2 type expressions:
// prefactor * (z_1...z_d)^{2-d} * antisym(z^exps * numer) / Vandermonde.
LaurentPoly vandermonde_form(int d, const std::vector<int>& exps,
                             const LaurentPoly& numer, const mpz_class& sign,
                             int prefq1, int prefq2) {
  LaurentPoly h = numer.mul_monomial(1, 0, 0, exps);
  auto quotient = poly::exact_divide(antisymmetrize(h), vandermonde(d));
  if (!quotient)
    throw std::domain_error("NotPolynomial: antisymmetrization not divisible");
  std::vector<int> shift(d, 2 - d);
  return quotient->mul_monomial(sign, prefq1, prefq2, shift);
}

}  // namespace

int max_vars() {
  if (g_max_vars == 0) {
    const char* env = std::getenv("BPSKALC_MAX_VARS");
    g_max_vars = env ? std::atoi(env) : 5;
    if (g_max_vars <= 0) g_max_vars = 5;
  }
  return g_max_vars;
}

void set_max_vars(int n) { g_max_vars = n > 0 ? n : 5; }

std::vector<int> m_exponents(int d, int v) {
  std::vector<int> m(d);
  for (int i = 1; i <= d; ++i) {
    m[i - 1] = ceildiv(v * i, d) - ceildiv(v * (i - 1), d);
    if (i == d) m[i - 1] += 1;
    if (i == 1) m[i - 1] -= 1;
  }
  return m;
}

void mul_kernel(BinFraction& F, Kernel k, int i, int j) {
  const int nz = F.num_z_vars();
  switch (k) {
    case Kernel::xi: {
      std::vector<int> e(nz, 0);
      e[i] -= 1;
      e[j] -= 1;
      F.mul_monomial(1, 0, 0, e);
      F.mul_poly(binom(nz, i, j, -1, 0));
      F.mul_poly(binom(nz, i, j, 0, -1));
      F.mul_poly(binom(nz, j, i, -1, -1));
      F.divide_by_factor(i, j, 0, 0);
      break;
    }
    case Kernel::xip: {
      std::vector<int> e(nz, 0);
      e[j] -= 2;
      F.mul_monomial(1, 0, 0, e);
      F.mul_poly(binom(nz, i, j, -1, 0));
      F.mul_poly(binom(nz, i, j, 0, -1));
      F.mul_poly(binom(nz, i, j, 1, 1));
      F.divide_by_factor(i, j, 0, 0);
      break;
    }
    case Kernel::w: {
      F.mul_poly(binom(nz, i, j, -1, 0));
      F.mul_poly(binom(nz, i, j, 0, -1));
      F.divide_by_factor(i, j, 0, 0);
      F.divide_by_factor(i, j, -1, -1);
      break;
    }
  }
}

poly::LaurentPoly a_element_direct(int d, int v) {
  check_vars(d);
  std::vector<int> m = m_exponents(d, v);
  BinFraction base(LaurentPoly::monomial(d, 1, 0, 0, m));
  for (int i = 0; i + 1 < d; ++i) mul_chain_inverse(base, i);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) mul_kernel(base, Kernel::xi, i, j);
  BinFraction total{LaurentPoly(d)};
  for (const auto& sigma : poly::all_permutations(d))
    total += base.permute_z(sigma);
  auto r = total.to_laurent();
  if (!r) throw std::domain_error("NotPolynomial");
  return *r;
}

ShuffleElement a_element(int d, int v) {
  check_vars(d);
  std::vector<int> m = m_exponents(d, v);
  if (d == 1) return {1, v, LaurentPoly::monomial(1, 1, 0, 0, {v})};
  std::vector<int> exps = m;
  exps[d - 1] -= 1;
  // f_d: nearest-neighbor pairs carry two factors, distant pairs three.
  LaurentPoly fd = LaurentPoly::constant(d, 1);
  for (int i = 0; i + 1 < d; ++i) {
    fd = fd * binom(d, i, i + 1, -1, 0);
    fd = fd * binom(d, i, i + 1, 0, -1);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 2; j < d; ++j) {
      fd = fd * binom(d, i, j, -1, 0);
      fd = fd * binom(d, i, j, 0, -1);
      fd = fd * binom(d, i, j, 1, 1);
    }
  int half = (d - 1) * (d - 2) / 2;
  mpz_class sign = (half % 2 == 0) ? 1 : -1;
  return {d, v, vandermonde_form(d, exps, fd, sign, -half, -half)};
}

poly::LaurentPoly gd_symmetrization(int d, int v) {
  check_vars(d);
  std::vector<int> exps = m_exponents(d, v);
  if (d == 1) return LaurentPoly::monomial(1, 1, 0, 0, {v});
  exps[d - 1] -= 1;
  LaurentPoly gd = LaurentPoly::constant(d, 1);
  for (int i = 0; i + 1 < d; ++i) {
    gd = gd * binom(d, i, i + 1, -1, 0);
    gd = gd * binom(d, i, i + 1, 1, 1);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 2; j < d; ++j) {
      gd = gd * binom(d, i, j, -1, 0);
      gd = gd * binom(d, i, j, 0, -1);
      gd = gd * binom(d, i, j, 1, 1);
    }
  int half = (d - 1) * (d - 2) / 2;
  mpz_class sign = (half % 2 == 0) ? 1 : -1;
  return vandermonde_form(d, exps, gd, sign, 0, -half);
}

poly::BinFraction a_prime_element(const std::vector<int>& k) {
  const int d = (int)k.size();
  check_vars(d);
  BinFraction base(LaurentPoly::monomial(d, 1, 0, 0, k));
  for (int i = 0; i + 1 < d; ++i) mul_chain_inverse(base, i);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) mul_kernel(base, Kernel::w, i, j);
  BinFraction total{LaurentPoly(d)};
  for (const auto& sigma : poly::all_permutations(d))
    total += base.permute_z(sigma);
  return total;
}

poly::BinFraction apply_F(const poly::LaurentPoly& f) {
  const int d = f.num_z_vars();
  BinFraction r(f);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      // 1/(1 - q^{-1} z_i z_j^{-1}) = z_j / (z_j - q^{-1} z_i).
      std::vector<int> e(d, 0);
      e[j] = 1;
      r.mul_monomial(1, 0, 0, e);
      r.divide_by_factor(i, j, -1, -1);
    }
  return r;
}

ShuffleElement e_class(int d, int v) {
  ShuffleElement a = a_element(d, v);
  LaurentPoly pref = LaurentPoly::constant(d, 1);
  LaurentPoly f1 = LaurentPoly::constant(d, 1) - LaurentPoly::monomial(d, 1, -1, 0);
  LaurentPoly f2 = LaurentPoly::constant(d, 1) - LaurentPoly::monomial(d, 1, 0, -1);
  for (int t = 0; t + 1 < d; ++t) pref = pref * f1 * f2;
  return {d, v, a.value * pref};
}

ShuffleElement a_hat(int d, int v, int n) {
  ShuffleElement a = a_element(n * d, n * v);
  mpz_class sign = ((n - 1) % 2 == 0) ? 1 : -1;
  return {n * d, n * v, a.value.mul_monomial(sign, -(n - 1), -(n - 1))};
}

ShuffleElement p_element(int d, int v, int n) {
  if (std::gcd(d, v) != 1) throw std::invalid_argument("p_element needs gcd(d,v)=1");
  const int N = n * d;
  check_vars(N);
  std::vector<int> exps(N);
  for (int i = 1; i <= N; ++i)
    exps[i - 1] = floordiv(i * v, d) - floordiv((i - 1) * v, d);
  // The telescoping inner sum over s, all monomials.
  LaurentPoly inner(N);
  for (int s = 0; s < n; ++s) {
    std::vector<int> e(N, 0);
    for (int u = 1; u <= s; ++u) {
      e[d * (n - u) + 1 - 1] += 1;
      e[d * (n - u) - 1] -= 1;
    }
    inner += LaurentPoly::monomial(N, 1, -s, -s, e);
  }
  BinFraction base(LaurentPoly::monomial(N, 1, 0, 0, exps) * inner);
  for (int i = 0; i + 1 < N; ++i) mul_chain_inverse(base, i);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) mul_kernel(base, Kernel::xi, i, j);
  BinFraction total{LaurentPoly(N)};
  for (const auto& sigma : poly::all_permutations(N))
    total += base.permute_z(sigma);
  auto sym = total.to_laurent();
  if (!sym) throw std::domain_error("NotPolynomial");
  // Prefactor (q1^{-1}-1)^N (q2^{-1}-1)^N / ((q1^{-n}-1)(q2^{-n}-1)).
  LaurentPoly cur = *sym;
  LaurentPoly p1 = LaurentPoly::monomial(N, 1, -1, 0) - LaurentPoly::constant(N, 1);
  LaurentPoly p2 = LaurentPoly::monomial(N, 1, 0, -1) - LaurentPoly::constant(N, 1);
  for (int t = 0; t < N; ++t) cur = cur * p1 * p2;
  LaurentPoly d1 = LaurentPoly::monomial(N, 1, -n, 0) - LaurentPoly::constant(N, 1);
  LaurentPoly d2 = LaurentPoly::monomial(N, 1, 0, -n) - LaurentPoly::constant(N, 1);
  auto q1div = poly::exact_divide(cur, d1);
  if (!q1div) throw std::domain_error("NotPolynomial");
  auto q2div = poly::exact_divide(*q1div, d2);
  if (!q2div) throw std::domain_error("NotPolynomial");
  return {N, n * v, *q2div};
}

poly::BinFraction shuffle_mul_fraction(const poly::LaurentPoly& f,
                                       const poly::LaurentPoly& g,
                                       Kernel kernel) {
  const int a = f.num_z_vars();
  const int b = g.num_z_vars();
  const int N = a + b;
  check_vars(N);
  if (a == 0) return BinFraction(g * f.embed(b));
  if (b == 0) return BinFraction(f * g.embed(a));
  BinFraction base(f.embed(N) * g.embed(N, a));
  for (int i = 0; i < a; ++i)
    for (int j = a; j < N; ++j) mul_kernel(base, kernel, i, j);
  // Sum over shuffle coset representatives: both inputs are symmetric, so
  // the factorial normalization is absorbed.
  BinFraction total{LaurentPoly(N)};
  std::vector<int> pick(N, 0);
  std::fill(pick.begin(), pick.begin() + a, 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> sigma(N);
    int fi = 0, gi = 0;
    std::vector<int> first, second;
    for (int t = 0; t < N; ++t)
      (pick[t] ? first : second).push_back(t);
    for (int t = 0; t < a; ++t) sigma[t] = first[fi++];
    for (int t = a; t < N; ++t) sigma[t] = second[gi++];
    total += base.permute_z(sigma);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return total;
}

ShuffleElement shuffle_mul(const ShuffleElement& f, const ShuffleElement& g,
                           Kernel kernel) {
  BinFraction fr = shuffle_mul_fraction(f.value, g.value, kernel);
  auto r = fr.to_laurent();
  if (!r) throw std::domain_error("NotPolynomial");
  return {f.d + g.d, f.v + g.v, *r};
}

}  // namespace bpsk::shuffle
