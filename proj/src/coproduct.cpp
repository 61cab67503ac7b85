#include "bpskalc/coproduct.hpp"

#include <stdexcept>

#include "bpskalc/shuffle.hpp"
#include "bpskalc/symfunc.hpp"
#include "bpskalc/weights.hpp"

namespace bpsk::coproduct {

using poly::LaurentPoly;
using schur::DominantWeight;

namespace {

LaurentPoly kcoeff_monomial(int sign, int q1, int q2) {
  return LaurentPoly::monomial(0, sign, q1, q2);
}

void add_term(TensorElement& t, const DominantWeight& w1,
              const DominantWeight& w2, const LaurentPoly& c) {
  auto key = std::make_pair(w1, w2);
  auto it = t.terms.find(key);
  if (it == t.terms.end())
    t.terms.emplace(key, c);
  else {
    it->second += c;
    if (it->second.is_zero()) t.terms.erase(it);
  }
}

// Shift every coordinate of a block weight; Schur characters absorb uniform
// determinant twists this way.
DominantWeight shifted(const DominantWeight& w, int s) {
  DominantWeight r = w;
  for (auto& c : r) c += s;
  return r;
}

}  // namespace

TensorElement delta_tilde(const poly::LaurentPoly& f, int m1, int m2,
                          Face face) {
  if (f.num_z_vars() != m1 + m2)
    throw std::invalid_argument("variable count mismatch");
  TensorElement out;
  out.first_vars = m1;
  out.second_vars = m2;
  const int d = m1 + m2;
  weights::Cocharacter mu(d, 0);
  for (int i = 0; i < d; ++i) {
    bool second = i >= m1;
    mu[i] = (face == Face::lower_first) == second ? 1 : 0;
  }
  weights::Weight r = weights::rho(d);
  for (const auto& [chi, c] : schur::expand_in_schur(f)) {
    weights::Weight chirho(d);
    for (int i = 0; i < d; ++i) chirho[i] = chi[i] + r[i];
    if (!weights::on_face(chirho, mu, mpq_class(1, 2))) continue;
    DominantWeight w1(chi.begin(), chi.begin() + m1);
    DominantWeight w2(chi.begin() + m1, chi.end());
    add_term(out, w1, w2, c);
  }
  return out;
}

Twist twist(int a, int b, int d) {
  const int m1 = a * d, m2 = b * d;
  std::vector<int> ze(m1 + m2, 0);
  for (int i = 0; i < m1; ++i) ze[i] = -m2;
  for (int i = m1; i < m1 + m2; ++i) ze[i] = m1;
  int qexp = -a * b * d * d;
  Twist t;
  t.nu = LaurentPoly::monomial(m1 + m2, 1, qexp, qexp, ze);
  t.omega_sign = (m1 * m2) % 2 == 0 ? 1 : -1;
  return t;
}

TensorElement apply_omega_inverse(const TensorElement& t, int a, int b,
                                  int d) {
  const int m1 = a * d, m2 = b * d;
  const int qexp = a * b * d * d;
  int sign = (m1 * m2) % 2 == 0 ? 1 : -1;
  LaurentPoly unit = kcoeff_monomial(sign, qexp, qexp);
  TensorElement out;
  out.first_vars = t.first_vars;
  out.second_vars = t.second_vars;
  for (const auto& [key, c] : t.terms)
    add_term(out, shifted(key.first, m2), shifted(key.second, -m1), c * unit);
  return out;
}

poly::LaurentPoly flatten(const TensorElement& t) {
  const int n = t.first_vars + t.second_vars;
  LaurentPoly total(n);
  for (const auto& [key, c] : t.terms) {
    LaurentPoly left = key.first.empty()
                           ? LaurentPoly::constant(0, 1)
                           : schur::weyl_character(key.first);
    LaurentPoly right = key.second.empty()
                            ? LaurentPoly::constant(0, 1)
                            : schur::weyl_character(key.second);
    total += c.embed(n) * left.embed(n) * right.embed(n, t.first_vars);
  }
  return total;
}

CheckResult check_1236bis(int n, int d, int v, int a, int b, Face face) {
  if (a + b != n) throw std::invalid_argument("a+b must equal n");
  const int N = n * d;
  LaurentPoly lhs =
      flatten(delta_tilde(shuffle::a_element(N, n * v).value, a * d, b * d,
                          face));
  LaurentPoly right = shuffle::a_element(a * d, a * v).value.embed(N) *
                      shuffle::a_element(b * d, b * v).value.embed(N, a * d);
  Twist tw = twist(a, b, d);
  int par = (a * b * d * d) % 2 == 0 ? 1 : -1;
  // (-q) * (-1)^{abd^2} * q^{nu}
  LaurentPoly rhs = right * tw.nu.mul_monomial(-par, 1, 1);
  CheckResult res;
  res.diff = lhs - rhs;
  res.pass = res.diff.is_zero();
  return res;
}

namespace {

// D_{a,b} = omega^{-1} delta_tilde, with the degenerate one-sided cases
// acting as the identity into x (x) 1 or 1 (x) x.
TensorElement block_coproduct(const LaurentPoly& x, int a, int b, int d) {
  TensorElement out;
  out.first_vars = a * d;
  out.second_vars = b * d;
  if (a == 0 || b == 0) {
    for (const auto& [chi, c] : schur::expand_in_schur(x)) {
      DominantWeight empty;
      if (a == 0)
        add_term(out, empty, chi, c);
      else
        add_term(out, chi, empty, c);
    }
    return out;
  }
  return apply_omega_inverse(delta_tilde(x, a * d, b * d), a, b, d);
}

LaurentPoly schur_poly(const DominantWeight& w, int nvars_if_empty) {
  if (w.empty()) return LaurentPoly::constant(nvars_if_empty, 1);
  return schur::weyl_character(w);
}

}  // namespace

CheckResult check_cor44(int a, int b, int c, int e, int d, int v,
                        bool insert_twist) {
  if (a + b != c + e) throw std::invalid_argument("a+b must equal c+e");
  const int n = a + b;
  const int N = n * d;
  LaurentPoly x = shuffle::a_element(a * d, a * v).value;
  LaurentPoly y = shuffle::a_element(b * d, b * v).value;

  // Top-right composite: coproduct of the product.
  shuffle::ShuffleElement xe{a * d, a * v, x};
  shuffle::ShuffleElement ye{b * d, b * v, y};
  LaurentPoly prod = shuffle::shuffle_mul(xe, ye).value;
  LaurentPoly top = flatten(block_coproduct(prod, c, e, d));

  // Bottom-left composite: sum over compatible block splittings.
  LaurentPoly bottom(N);
  for (int f1 = std::max(0, a - e); f1 <= std::min(a, c); ++f1) {
    int f2 = a - f1, f3 = c - f1, f4 = e - f2;
    TensorElement dx = block_coproduct(x, f1, f2, d);
    TensorElement dy = block_coproduct(y, f3, f4, d);
    for (const auto& [kx, cx] : dx.terms)
      for (const auto& [ky, cy] : dy.terms) {
        DominantWeight u2 = kx.second, u3 = ky.first;
        LaurentPoly coeff = cx * cy;
        if (insert_twist) {
          u2 = shifted(u2, 2 * f3 * d);
          u3 = shifted(u3, -2 * f2 * d);
        }
        // First output block: m(u1, u3); second: m(u2, u4).
        shuffle::ShuffleElement s1{f1 * d, 0, schur_poly(kx.first, f1 * d)};
        shuffle::ShuffleElement s3{f3 * d, 0, schur_poly(u3, f3 * d)};
        shuffle::ShuffleElement s2{f2 * d, 0, schur_poly(u2, f2 * d)};
        shuffle::ShuffleElement s4{f4 * d, 0, schur_poly(ky.second, f4 * d)};
        LaurentPoly left = shuffle::shuffle_mul(s1, s3).value;
        LaurentPoly right = shuffle::shuffle_mul(s2, s4).value;
        bottom += coeff.embed(N) * left.embed(N) * right.embed(N, c * d);
      }
  }
  CheckResult res;
  res.diff = top - bottom;
  res.pass = res.diff.is_zero();
  return res;
}

poly::LaurentPoly ahat_monomial(const std::vector<int>& parts, int d, int v) {
  shuffle::ShuffleElement acc{0, 0, LaurentPoly::constant(0, 1)};
  for (int p : parts) {
    shuffle::ShuffleElement factor = shuffle::a_hat(d, v, p);
    acc = shuffle::shuffle_mul(acc, factor);
  }
  return acc.value;
}

CheckResult check_primitive_shuffle(int n, int d, int v,
                                    int coefficient_scale) {
  const int N = n * d;
  symfunc::SymFunc p = symfunc::newton_p(n);
  LaurentPoly candidate(N);
  bool first = true;
  for (const auto& [parts, coeff] : p) {
    if (coeff == 0) continue;
    mpq_class c = coeff;
    if (first) {
      c *= coefficient_scale;
      first = false;
    }
    if (c.get_den() != 1)
      throw std::logic_error("non-integral Newton coefficient");
    candidate += ahat_monomial(parts, d, v).scaled(c.get_num());
  }
  CheckResult res;
  res.pass = true;
  res.diff = LaurentPoly(N);
  for (int a = 1; a < n; ++a) {
    int b = n - a;
    LaurentPoly img = flatten(delta_tilde(candidate, a * d, b * d));
    if (!img.is_zero()) {
      res.pass = false;
      res.diff = img;
      return res;
    }
  }
  return res;
}

}  // namespace bpsk::coproduct
