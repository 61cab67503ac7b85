#ifndef BPSKALC_LAURENT_HPP
#define BPSKALC_LAURENT_HPP

// Exact multivariate Laurent polynomials in q1, q2, z1..zn over
// arbitrary-precision integers, plus fractions with binomial denominators
// (z_j - c*z_i). This is the carrier type for every K-theory class in the
// library.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bpsk::poly {

// Monomial exponents. Total order is lexicographic on (q1, q2, z), which is
// also the canonical serialization order.
struct TermKey {
  int q1 = 0;
  int q2 = 0;
  std::vector<int> z;

  auto operator<=>(const TermKey&) const = default;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int num_z_vars) : nz_(num_z_vars) {}

  // Monomial constructor: c * q1^a * q2^b * z^zexp.
  static LaurentPoly monomial(int num_z_vars, const mpz_class& c, int a, int b,
                              const std::vector<int>& zexp = {});
  static LaurentPoly constant(int num_z_vars, const mpz_class& c);

  int num_z_vars() const { return nz_; }
  const std::map<TermKey, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const TermKey& k, const mpz_class& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly scaled(const mpz_class& c) const;
  // Multiply by the monomial c * q1^a * q2^b * z^zexp.
  LaurentPoly mul_monomial(const mpz_class& c, int a, int b,
                           const std::vector<int>& zexp = {}) const;

  // Simultaneous substitution z_i -> coeff_sign * q1^a * q2^b * z^zexp for the
  // listed variables (0-based index); unlisted variables are unchanged.
  struct MonomialImage {
    int sign = 1;  // +1 or -1
    int q1 = 0;
    int q2 = 0;
    std::vector<int> z;  // exponent vector of length num_z_vars
  };
  LaurentPoly substitute_z(const std::map<int, MonomialImage>& images) const;

  // sigma is 0-based: variable i is sent to variable sigma[i]; i.e. the term
  // exponent of z_i moves to slot sigma[i]. This realizes
  // f(z_{sigma^{-1}(1)}, ...) so that permute(permute(f, s), t) =
  // permute(f, t o s).
  LaurentPoly permute_z(const std::vector<int>& sigma) const;

  bool is_symmetric() const;

  mpz_class content() const;

  // Extend/restrict the number of z variables. Growing appends zero exponents;
  // shrinking requires the dropped variables to be absent. `offset` shifts the
  // existing variables to start at the given slot.
  LaurentPoly embed(int new_num_z_vars, int offset = 0) const;

  std::string to_text() const;
  std::string to_json() const;
  static LaurentPoly from_json(const std::string& json_text);

 private:
  int nz_ = 0;
  std::map<TermKey, mpz_class> terms_;
};

// Exact division: returns h with g*h == f, or nullopt when the remainder is
// nonzero. Requires the lex-leading coefficient of g to be +-1; throws
// std::invalid_argument otherwise (all divisors used in this artifact
// qualify).
std::optional<LaurentPoly> exact_divide(const LaurentPoly& f,
                                        const LaurentPoly& g);

// A Laurent polynomial numerator over a multiset of factors (z_j - c*z_i)
// with i < j and c = q1^cq1 * q2^cq2. Units from canonicalizing flipped
// factors are folded into the numerator.
struct BinFactor {
  int i = 0;
  int j = 0;
  int cq1 = 0;
  int cq2 = 0;
  auto operator<=>(const BinFactor&) const = default;
};

class BinFraction {
 public:
  BinFraction() = default;
  explicit BinFraction(LaurentPoly num) : num_(std::move(num)) {}

  const LaurentPoly& numerator() const { return num_; }
  const std::map<BinFactor, int>& denom() const { return denom_; }
  int num_z_vars() const { return num_.num_z_vars(); }
  bool is_zero() const { return num_.is_zero(); }

  // Multiply the fraction by 1/(z_b - c*z_a); a != b, either order. Non
  // canonical orientation moves the unit into the numerator.
  void divide_by_factor(int a, int b, int cq1, int cq2);
  // Multiply numerator by an arbitrary polynomial or monomial.
  void mul_poly(const LaurentPoly& p) { num_ = num_ * p; }
  void mul_monomial(const mpz_class& c, int a, int b,
                    const std::vector<int>& zexp = {});

  BinFraction operator+(const BinFraction& o) const;
  BinFraction& operator+=(const BinFraction& o);

  BinFraction permute_z(const std::vector<int>& sigma) const;

  LaurentPoly denominator_poly() const;
  // Divide the numerator by every denominator factor; nullopt = not a
  // polynomial.
  std::optional<LaurentPoly> to_laurent() const;

  // Equality as rational functions, via cross multiplication.
  bool equal(const BinFraction& o) const;

 private:
  LaurentPoly num_;
  std::map<BinFactor, int> denom_;
};

// (z_j - c*z_i) as a polynomial, for a canonical factor.
LaurentPoly factor_poly(int num_z_vars, const BinFactor& f);

// All permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

}  // namespace bpsk::poly

#endif
