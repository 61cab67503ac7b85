#include "bpskalc/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bpsk::poly {

namespace {

void check_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_z_vars() != b.num_z_vars())
    throw std::invalid_argument("variable-count mismatch");
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int num_z_vars, const mpz_class& c, int a,
                                  int b, const std::vector<int>& zexp) {
  LaurentPoly p(num_z_vars);
  TermKey k;
  k.q1 = a;
  k.q2 = b;
  k.z = zexp;
  k.z.resize(num_z_vars, 0);
  p.add_term(k, c);
  return p;
}

LaurentPoly LaurentPoly::constant(int num_z_vars, const mpz_class& c) {
  return monomial(num_z_vars, c, 0, 0);
}

void LaurentPoly::add_term(const TermKey& k, const mpz_class& c) {
  if (c == 0) return;
  if ((int)k.z.size() != nz_)
    throw std::invalid_argument("term key length mismatch");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_vars(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_vars(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nz_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same_vars(*this, o);
  LaurentPoly r(nz_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      TermKey k;
      k.q1 = ka.q1 + kb.q1;
      k.q2 = ka.q2 + kb.q2;
      k.z.resize(nz_);
      for (int i = 0; i < nz_; ++i) k.z[i] = ka.z[i] + kb.z[i];
      r.add_term(k, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
  LaurentPoly r(nz_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

LaurentPoly LaurentPoly::mul_monomial(const mpz_class& c, int a, int b,
                                      const std::vector<int>& zexp) const {
  return (*this) * monomial(nz_, c, a, b, zexp);
}

LaurentPoly LaurentPoly::substitute_z(
    const std::map<int, MonomialImage>& images) const {
  LaurentPoly r(nz_);
  for (const auto& [k, c] : terms_) {
    TermKey nk;
    nk.q1 = k.q1;
    nk.q2 = k.q2;
    nk.z.assign(nz_, 0);
    int sign = 1;
    for (int i = 0; i < nz_; ++i) {
      int e = k.z[i];
      if (e == 0) continue;
      auto it = images.find(i);
      if (it == images.end()) {
        nk.z[i] += e;
        continue;
      }
      const MonomialImage& im = it->second;
      if (im.sign == -1 && (e % 2 != 0)) sign = -sign;
      nk.q1 += e * im.q1;
      nk.q2 += e * im.q2;
      if ((int)im.z.size() != nz_)
        throw std::invalid_argument("substitution image length mismatch");
      for (int t = 0; t < nz_; ++t) nk.z[t] += e * im.z[t];
    }
    r.add_term(nk, sign == 1 ? c : mpz_class(-c));
  }
  return r;
}

LaurentPoly LaurentPoly::permute_z(const std::vector<int>& sigma) const {
  if ((int)sigma.size() != nz_)
    throw std::invalid_argument("permutation length mismatch");
  LaurentPoly r(nz_);
  for (const auto& [k, c] : terms_) {
    TermKey nk;
    nk.q1 = k.q1;
    nk.q2 = k.q2;
    nk.z.assign(nz_, 0);
    for (int i = 0; i < nz_; ++i) nk.z[sigma[i]] = k.z[i];
    r.add_term(nk, c);
  }
  return r;
}

bool LaurentPoly::is_symmetric() const {
  for (int i = 0; i + 1 < nz_; ++i) {
    std::vector<int> sigma(nz_);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[i], sigma[i + 1]);
    if (!(permute_z(sigma) == *this)) return false;
  }
  return true;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& [k, c] : terms_) {
    mpz_class a = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::embed(int new_num_z_vars, int offset) const {
  LaurentPoly r(new_num_z_vars);
  for (const auto& [k, c] : terms_) {
    TermKey nk;
    nk.q1 = k.q1;
    nk.q2 = k.q2;
    nk.z.assign(new_num_z_vars, 0);
    for (int i = 0; i < nz_; ++i) {
      if (k.z[i] == 0) continue;
      int idx = offset + i;
      if (idx < 0 || idx >= new_num_z_vars)
        throw std::invalid_argument("embed: nonzero exponent out of range");
      nk.z[idx] = k.z[i];
    }
    r.add_term(nk, c);
  }
  return r;
}

std::string LaurentPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> parts;
    auto push_var = [&parts](const std::string& name, int e) {
      if (e == 0) return;
      if (e == 1)
        parts.push_back(name);
      else
        parts.push_back(name + "^" + std::to_string(e));
    };
    push_var("q1", k.q1);
    push_var("q2", k.q2);
    for (int i = 0; i < nz_; ++i) push_var("z" + std::to_string(i + 1), k.z[i]);
    if (parts.empty()) {
      os << c.get_str();
      continue;
    }
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << c.get_str() << "*";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) os << "*";
      os << parts[i];
    }
  }
  return os.str();
}

std::string LaurentPoly::to_json() const {
  nlohmann::json j;
  j["zvars"] = nz_;
  j["terms"] = nlohmann::json::array();
  for (const auto& [k, c] : terms_) {
    nlohmann::json t;
    t["c"] = c.get_str();
    t["q1"] = k.q1;
    t["q2"] = k.q2;
    t["z"] = k.z;
    j["terms"].push_back(t);
  }
  return j.dump();
}

LaurentPoly LaurentPoly::from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  LaurentPoly p(j.at("zvars").get<int>());
  for (const auto& t : j.at("terms")) {
    TermKey k;
    k.q1 = t.at("q1").get<int>();
    k.q2 = t.at("q2").get<int>();
    k.z = t.at("z").get<std::vector<int>>();
    p.add_term(k, mpz_class(t.at("c").get<std::string>()));
  }
  return p;
}

namespace {

// Componentwise minimum exponent vector over the support of f.
TermKey min_exponents(const LaurentPoly& f) {
  TermKey m;
  m.z.assign(f.num_z_vars(), 0);
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    if (first) {
      m = k;
      first = false;
      continue;
    }
    m.q1 = std::min(m.q1, k.q1);
    m.q2 = std::min(m.q2, k.q2);
    for (int i = 0; i < f.num_z_vars(); ++i) m.z[i] = std::min(m.z[i], k.z[i]);
  }
  return m;
}

LaurentPoly shift_by(const LaurentPoly& f, const TermKey& s, int dir) {
  std::vector<int> zexp(s.z.size());
  for (std::size_t i = 0; i < s.z.size(); ++i) zexp[i] = dir * s.z[i];
  return f.mul_monomial(1, dir * s.q1, dir * s.q2, zexp);
}

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& f,
                                        const LaurentPoly& g) {
  check_same_vars(f, g);
  if (g.is_zero()) throw std::invalid_argument("division by zero");
  const int nz = f.num_z_vars();
  if (f.is_zero()) return LaurentPoly(nz);

  // Normalize both to honest polynomials with componentwise minimum exponent
  // zero. Lowest-degree parts multiply, so Laurent divisibility matches
  // polynomial divisibility of the normalized pair.
  TermKey mf = min_exponents(f);
  TermKey mg = min_exponents(g);
  LaurentPoly rem = shift_by(f, mf, -1);
  LaurentPoly gg = shift_by(g, mg, -1);

  const auto& glt = *gg.terms().rbegin();
  if (glt.second != 1 && glt.second != -1)
    throw std::invalid_argument("divisor leading coefficient is not a unit");

  LaurentPoly h(nz);
  while (!rem.is_zero()) {
    const auto& flt = *rem.terms().rbegin();
    TermKey qk;
    qk.q1 = flt.first.q1 - glt.first.q1;
    qk.q2 = flt.first.q2 - glt.first.q2;
    if (qk.q1 < 0 || qk.q2 < 0) return std::nullopt;
    qk.z.resize(nz);
    for (int i = 0; i < nz; ++i) {
      qk.z[i] = flt.first.z[i] - glt.first.z[i];
      if (qk.z[i] < 0) return std::nullopt;
    }
    mpz_class qc = flt.second * glt.second;  // divide by +-1
    h.add_term(qk, qc);
    LaurentPoly sub = gg.mul_monomial(qc, qk.q1, qk.q2, qk.z);
    rem -= sub;
  }
  // Undo the normalization shifts on the quotient.
  TermKey net;
  net.q1 = mf.q1 - mg.q1;
  net.q2 = mf.q2 - mg.q2;
  net.z.resize(nz);
  for (int i = 0; i < nz; ++i) net.z[i] = mf.z[i] - mg.z[i];
  return shift_by(h, net, +1);
}

LaurentPoly factor_poly(int num_z_vars, const BinFactor& f) {
  LaurentPoly p(num_z_vars);
  std::vector<int> ej(num_z_vars, 0);
  ej[f.j] = 1;
  p += LaurentPoly::monomial(num_z_vars, 1, 0, 0, ej);
  std::vector<int> ei(num_z_vars, 0);
  ei[f.i] = 1;
  p += LaurentPoly::monomial(num_z_vars, -1, f.cq1, f.cq2, ei);
  return p;
}

void BinFraction::divide_by_factor(int a, int b, int cq1, int cq2) {
  if (a == b) throw std::invalid_argument("binomial factor needs i != j");
  if (a < b) {
    denom_[BinFactor{a, b, cq1, cq2}]++;
    return;
  }
  // (z_b - c*z_a) with b < a equals -c*(z_a - c^{-1} z_b); absorb the unit
  // 1/(-c) into the numerator.
  denom_[BinFactor{b, a, -cq1, -cq2}]++;
  num_ = num_.mul_monomial(-1, -cq1, -cq2);
}

void BinFraction::mul_monomial(const mpz_class& c, int a, int b,
                               const std::vector<int>& zexp) {
  num_ = num_.mul_monomial(c, a, b, zexp);
}

BinFraction BinFraction::operator+(const BinFraction& o) const {
  BinFraction r = *this;
  r += o;
  return r;
}

BinFraction& BinFraction::operator+=(const BinFraction& o) {
  if (num_.is_zero() && denom_.empty()) {
    *this = o;
    return *this;
  }
  if (o.num_.is_zero() && o.denom_.empty()) return *this;
  std::map<BinFactor, int> common = denom_;
  for (const auto& [f, m] : o.denom_) {
    auto it = common.find(f);
    if (it == common.end())
      common[f] = m;
    else
      it->second = std::max(it->second, m);
  }
  const int nz = num_.num_z_vars();
  LaurentPoly lhs = num_;
  LaurentPoly rhs = o.num_;
  for (const auto& [f, m] : common) {
    auto ita = denom_.find(f);
    int ma = (ita == denom_.end()) ? 0 : ita->second;
    auto itb = o.denom_.find(f);
    int mb = (itb == o.denom_.end()) ? 0 : itb->second;
    LaurentPoly fp = factor_poly(nz, f);
    for (int t = 0; t < m - ma; ++t) lhs = lhs * fp;
    for (int t = 0; t < m - mb; ++t) rhs = rhs * fp;
  }
  num_ = lhs + rhs;
  denom_ = std::move(common);
  return *this;
}

BinFraction BinFraction::permute_z(const std::vector<int>& sigma) const {
  BinFraction r(num_.permute_z(sigma));
  for (const auto& [f, m] : denom_) {
    int a = sigma[f.i];
    int b = sigma[f.j];
    if (a < b) {
      r.denom_[BinFactor{a, b, f.cq1, f.cq2}] += m;
    } else {
      r.denom_[BinFactor{b, a, -f.cq1, -f.cq2}] += m;
      // Each flipped copy contributes the unit 1/(-c) to the numerator.
      for (int t = 0; t < m; ++t)
        r.num_ = r.num_.mul_monomial(-1, -f.cq1, -f.cq2);
    }
  }
  return r;
}

LaurentPoly BinFraction::denominator_poly() const {
  LaurentPoly d = LaurentPoly::constant(num_.num_z_vars(), 1);
  for (const auto& [f, m] : denom_) {
    LaurentPoly fp = factor_poly(num_.num_z_vars(), f);
    for (int t = 0; t < m; ++t) d = d * fp;
  }
  return d;
}

std::optional<LaurentPoly> BinFraction::to_laurent() const {
  LaurentPoly cur = num_;
  for (const auto& [f, m] : denom_) {
    LaurentPoly fp = factor_poly(num_.num_z_vars(), f);
    for (int t = 0; t < m; ++t) {
      auto q = exact_divide(cur, fp);
      if (!q) return std::nullopt;
      cur = std::move(*q);
    }
  }
  return cur;
}

bool BinFraction::equal(const BinFraction& o) const {
  return num_ * o.denominator_poly() == o.num_ * denominator_poly();
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace bpsk::poly
