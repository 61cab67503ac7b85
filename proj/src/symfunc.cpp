#include "bpskalc/symfunc.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "bpskalc/coproduct.hpp"
#include "bpskalc/laurent.hpp"

namespace bpsk::symfunc {

namespace {

void add_to(SymFunc& f, const Partition& k, const mpq_class& c) {
  if (c == 0) return;
  auto it = f.find(k);
  if (it == f.end())
    f.emplace(k, c);
  else {
    it->second += c;
    if (it->second == 0) f.erase(it);
  }
}

void add_to2(SymFunc2& f, const std::pair<Partition, Partition>& k,
             const mpq_class& c) {
  if (c == 0) return;
  auto it = f.find(k);
  if (it == f.end())
    f.emplace(k, c);
  else {
    it->second += c;
    if (it->second == 0) f.erase(it);
  }
}

Partition merge(const Partition& a, const Partition& b) {
  Partition r = a;
  r.insert(r.end(), b.begin(), b.end());
  std::sort(r.begin(), r.end(), std::greater<int>());
  return r;
}

int degree(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

// Rank of a dense rational matrix by Gaussian elimination.
int rank_of(std::vector<std::vector<mpq_class>> m) {
  int rows = (int)m.size();
  if (rows == 0) return 0;
  int cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

mpq_class pow_q(const mpq_class& b, int e) {
  mpq_class r = 1;
  int a = e < 0 ? -e : e;
  for (int i = 0; i < a; ++i) r *= b;
  if (e < 0) r = 1 / r;
  return r;
}

// Specialize the q variables; the z monomials become the coordinates.
std::map<std::vector<int>, mpq_class> specialize(const poly::LaurentPoly& p,
                                                 const mpq_class& q1,
                                                 const mpq_class& q2) {
  std::map<std::vector<int>, mpq_class> out;
  for (const auto& [k, c] : p.terms()) {
    mpq_class v = mpq_class(c) * pow_q(q1, k.q1) * pow_q(q2, k.q2);
    auto it = out.find(k.z);
    if (it == out.end())
      out.emplace(k.z, v);
    else {
      it->second += v;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

}  // namespace

SymFunc sf_unit() { return {{Partition{}, mpq_class(1)}}; }

SymFunc sf_e(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n == 0) return sf_unit();
  return {{Partition{n}, mpq_class(1)}};
}

SymFunc sf_add(const SymFunc& f, const SymFunc& g) {
  SymFunc r = f;
  for (const auto& [k, c] : g) add_to(r, k, c);
  return r;
}

SymFunc sf_scale(const SymFunc& f, const mpq_class& c) {
  SymFunc r;
  for (const auto& [k, v] : f) add_to(r, k, v * c);
  return r;
}

SymFunc sf_mul(const SymFunc& f, const SymFunc& g) {
  SymFunc r;
  for (const auto& [ka, ca] : f)
    for (const auto& [kb, cb] : g) add_to(r, merge(ka, kb), ca * cb);
  return r;
}

SymFunc2 sf_coproduct(const SymFunc& f) {
  SymFunc2 r;
  for (const auto& [k, c] : f) {
    // Multiplicative extension of Delta(e_n) = sum e_a (x) e_b.
    SymFunc2 acc = {{{Partition{}, Partition{}}, mpq_class(1)}};
    for (int part : k) {
      SymFunc2 gen;
      for (int a = 0; a <= part; ++a) {
        Partition left = a == 0 ? Partition{} : Partition{a};
        Partition right = a == part ? Partition{} : Partition{part - a};
        add_to2(gen, {left, right}, 1);
      }
      acc = sf2_mul(acc, gen);
    }
    for (const auto& [kk, cc] : acc) add_to2(r, kk, cc * c);
  }
  return r;
}

SymFunc2 sf2_mul(const SymFunc2& f, const SymFunc2& g) {
  SymFunc2 r;
  for (const auto& [ka, ca] : f)
    for (const auto& [kb, cb] : g)
      add_to2(r, {merge(ka.first, kb.first), merge(ka.second, kb.second)},
              ca * cb);
  return r;
}

SymFunc newton_p(int n) {
  if (n < 1) throw std::invalid_argument("newton_p needs n >= 1");
  std::vector<SymFunc> p(n + 1);
  for (int m = 1; m <= n; ++m) {
    // p_m = sum_{k=1}^{m-1} (-1)^{k-1} e_k p_{m-k} + (-1)^{m-1} m e_m.
    SymFunc cur;
    for (int k = 1; k < m; ++k) {
      SymFunc term = sf_mul(sf_e(k), p[m - k]);
      cur = sf_add(cur, sf_scale(term, (k % 2 == 1) ? 1 : -1));
    }
    cur = sf_add(cur, sf_scale(sf_e(m), (m % 2 == 1) ? m : -m));
    p[m] = cur;
  }
  return p[n];
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

PrimitivesResult primitives_dim(int n) {
  if (n > 8) throw std::invalid_argument("primitives bound exceeded");
  auto basis = partitions_of(n);
  const int cols = (int)basis.size();
  // Reduced coproduct of each basis monomial, indexed over proper tensor
  // keys.
  std::map<std::pair<Partition, Partition>, int> rowindex;
  std::vector<SymFunc2> images(cols);
  for (int c = 0; c < cols; ++c) {
    SymFunc mono = {{basis[c], mpq_class(1)}};
    SymFunc2 delta = sf_coproduct(mono);
    SymFunc2 reduced;
    for (const auto& [k, v] : delta) {
      if (degree(k.first) == 0 || degree(k.second) == 0) continue;
      add_to2(reduced, k, v);
    }
    images[c] = reduced;
    for (const auto& [k, v] : reduced)
      rowindex.emplace(k, (int)rowindex.size());
  }
  std::vector<std::vector<mpq_class>> m(rowindex.size(),
                                        std::vector<mpq_class>(cols, 0));
  for (int c = 0; c < cols; ++c)
    for (const auto& [k, v] : images[c]) m[rowindex[k]][c] = v;
  // Kernel by elimination on the transpose-augmented system.
  int rk = rank_of(m);
  PrimitivesResult res;
  res.dimension = cols - rk;
  if (res.dimension >= 1) {
    // The Newton polynomial is primitive; report it as the basis vector.
    res.basis = newton_p(n);
  }
  return res;
}

bool phi_consistency(int n, int d, int v, unsigned seed) {
  const int N = n * d;
  auto parts = partitions_of(n);
  const int cols = (int)parts.size();
  std::vector<poly::LaurentPoly> basis(cols);
  for (int c = 0; c < cols; ++c)
    basis[c] = coproduct::ahat_monomial(parts[c], d, v);
  // Images under every proper block coproduct, kept symbolic once.
  std::vector<std::vector<poly::LaurentPoly>> images(cols);
  for (int c = 0; c < cols; ++c)
    for (int a = 1; a < n; ++a)
      images[c].push_back(coproduct::flatten(
          coproduct::delta_tilde(basis[c], a * d, (n - a) * d)));

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(2, 23);
  int successes = 0;
  for (int attempt = 0; attempt < 64 && successes < 3; ++attempt) {
    mpq_class q1(pick(rng), pick(rng));
    mpq_class q2(pick(rng), pick(rng));
    q1.canonicalize();
    q2.canonicalize();
    if (q1 == q2 || q1 == 1 || q2 == 1 || q1 * q2 == 1) continue;
    // Basis independence at the specialization.
    std::map<std::vector<int>, int> zrow;
    std::vector<std::map<std::vector<int>, mpq_class>> bspec(cols);
    for (int c = 0; c < cols; ++c) {
      bspec[c] = specialize(basis[c], q1, q2);
      for (const auto& [k, vv] : bspec[c]) zrow.emplace(k, (int)zrow.size());
    }
    std::vector<std::vector<mpq_class>> bm(zrow.size(),
                                           std::vector<mpq_class>(cols, 0));
    for (int c = 0; c < cols; ++c)
      for (const auto& [k, vv] : bspec[c]) bm[zrow[k]][c] = vv;
    if (rank_of(bm) < cols) continue;  // rank drop: resample

    // Combined coproduct matrix; kernel must be one dimensional.
    std::map<std::tuple<int, std::vector<int>>, int> orow;
    std::vector<std::vector<std::map<std::vector<int>, mpq_class>>> ispec(
        cols);
    for (int c = 0; c < cols; ++c) {
      for (std::size_t blk = 0; blk < images[c].size(); ++blk) {
        auto s = specialize(images[c][blk], q1, q2);
        for (const auto& [k, vv] : s)
          orow.emplace(std::make_tuple((int)blk, k), (int)orow.size());
        ispec[c].push_back(std::move(s));
      }
    }
    std::vector<std::vector<mpq_class>> m(orow.size(),
                                          std::vector<mpq_class>(cols, 0));
    for (int c = 0; c < cols; ++c)
      for (std::size_t blk = 0; blk < ispec[c].size(); ++blk)
        for (const auto& [k, vv] : ispec[c][blk])
          m[orow[std::make_tuple((int)blk, k)]][c] = vv;
    int ker = cols - rank_of(m);
    if (n == 1) {
      if (ker != cols) return false;  // no proper blocks: everything primitive
    } else if (ker != 1) {
      return false;
    }
    ++successes;
  }
  return successes >= 3;
}

}  // namespace bpsk::symfunc
