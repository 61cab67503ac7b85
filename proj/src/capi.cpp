#include "bpskalc.h"

#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bpskalc/acceptance.hpp"
#include "bpskalc/bwb.hpp"
#include "bpskalc/coproduct.hpp"
#include "bpskalc/divisibility.hpp"
#include "bpskalc/dtseries.hpp"
#include "bpskalc/shuffle.hpp"
#include "bpskalc/symfunc.hpp"
#include "bpskalc/weights.hpp"
#include "json.hpp"

struct bpsk_poly {
  bpsk::shuffle::ShuffleElement elem;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return BPSK_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return BPSK_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BPSK_ERR_INTERNAL;
  }
}

int fail_invalid(const std::string& msg) {
  g_last_error = msg;
  return BPSK_ERR_INVALID_ARGUMENT;
}

std::string symfunc_text(const bpsk::symfunc::SymFunc& f) {
  if (f.empty()) return "0";
  std::string out;
  for (const auto& [part, coef] : f) {
    if (!out.empty()) out += coef >= 0 ? " + " : " - ";
    else if (coef < 0) out += "-";
    mpq_class a = abs(coef);
    out += a.get_str();
    out += "*e[";
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(part[i]);
    }
    out += "]";
  }
  return out;
}

}  // namespace

extern "C" {

const char* bpsk_last_error(void) { return g_last_error.c_str(); }

void bpsk_poly_free(bpsk_poly* p) { delete p; }

void bpsk_string_free(char* s) { delete[] s; }

int bpsk_set_max_vars(int n) {
  return guarded([&] {
    if (n < 1) return fail_invalid("max vars must be positive");
    bpsk::shuffle::set_max_vars(n);
    return BPSK_OK;
  });
}

int bpsk_get_max_vars(void) { return bpsk::shuffle::max_vars(); }

int bpsk_a_element(int d, int v, bpsk_poly** out) {
  return guarded([&] {
    if (!out) return fail_invalid("null out pointer");
    *out = new bpsk_poly{bpsk::shuffle::a_element(d, v)};
    return BPSK_OK;
  });
}

int bpsk_e_class(int d, int v, bpsk_poly** out) {
  return guarded([&] {
    if (!out) return fail_invalid("null out pointer");
    *out = new bpsk_poly{bpsk::shuffle::e_class(d, v)};
    return BPSK_OK;
  });
}

int bpsk_p_element(int d, int v, int n, bpsk_poly** out) {
  return guarded([&] {
    if (!out) return fail_invalid("null out pointer");
    *out = new bpsk_poly{bpsk::shuffle::p_element(d, v, n)};
    return BPSK_OK;
  });
}

int bpsk_bwb_expand(int n, int d, int v, bpsk_poly** out) {
  return guarded([&] {
    if (!out) return fail_invalid("null out pointer");
    *out = new bpsk_poly{
        {n * d, n * v, bpsk::bwb::a_via_bwb(n, d, v)}};
    return BPSK_OK;
  });
}

int bpsk_shuffle_mul(const bpsk_poly* f, const bpsk_poly* g,
                     const char* kernel, bpsk_poly** out) {
  return guarded([&] {
    if (!f || !g || !out) return fail_invalid("null argument");
    bpsk::shuffle::Kernel k;
    std::string name = kernel ? kernel : "xi";
    if (name == "xi")
      k = bpsk::shuffle::Kernel::xi;
    else if (name == "xip")
      k = bpsk::shuffle::Kernel::xip;
    else if (name == "w")
      k = bpsk::shuffle::Kernel::w;
    else
      return fail_invalid("unknown kernel: " + name);
    *out = new bpsk_poly{bpsk::shuffle::shuffle_mul(f->elem, g->elem, k)};
    return BPSK_OK;
  });
}

int bpsk_poly_equal(const bpsk_poly* f, const bpsk_poly* g, int* equal) {
  return guarded([&] {
    if (!f || !g || !equal) return fail_invalid("null argument");
    *equal = f->elem.value == g->elem.value ? 1 : 0;
    return BPSK_OK;
  });
}

int bpsk_poly_zvars(const bpsk_poly* p, int* zvars) {
  return guarded([&] {
    if (!p || !zvars) return fail_invalid("null argument");
    *zvars = p->elem.value.num_z_vars();
    return BPSK_OK;
  });
}

int bpsk_poly_to_text(const bpsk_poly* p, char** out) {
  return guarded([&] {
    if (!p || !out) return fail_invalid("null argument");
    *out = dup_string(p->elem.value.to_text());
    return BPSK_OK;
  });
}

int bpsk_poly_to_json(const bpsk_poly* p, char** out) {
  return guarded([&] {
    if (!p || !out) return fail_invalid("null argument");
    *out = dup_string(p->elem.value.to_json());
    return BPSK_OK;
  });
}

int bpsk_poly_from_json(const char* json_text, int v, bpsk_poly** out) {
  return guarded([&] {
    if (!json_text || !out) return fail_invalid("null argument");
    bpsk::poly::LaurentPoly p;
    try {
      p = bpsk::poly::LaurentPoly::from_json(json_text);
    } catch (const std::exception& e) {
      g_last_error = e.what();
      return BPSK_ERR_PARSE;
    }
    *out = new bpsk_poly{{p.num_z_vars(), v, p}};
    return BPSK_OK;
  });
}

int bpsk_divcheck(int d, int v, int* divisible, char** report) {
  return guarded([&] {
    if (!divisible) return fail_invalid("null argument");
    auto r = bpsk::divis::check_divisible(bpsk::shuffle::e_class(d, v).value,
                                          d);
    *divisible = r.quotient ? 1 : 0;
    if (report)
      *report = dup_string(r.quotient ? r.quotient->to_text()
                                      : "NotDivisible: " + r.failing_factor);
    return BPSK_OK;
  });
}

int bpsk_wheel(int d, int v, int i, int j, int k, const char* variant,
               int* vanished, char** residual) {
  return guarded([&] {
    if (!vanished) return fail_invalid("null argument");
    std::string name = variant ? variant : "q1";
    bpsk::divis::WheelVariant var;
    if (name == "q1")
      var = bpsk::divis::WheelVariant::q1;
    else if (name == "q2")
      var = bpsk::divis::WheelVariant::q2;
    else
      return fail_invalid("unknown wheel variant: " + name);
    auto r = bpsk::divis::wheel_substitute(bpsk::shuffle::e_class(d, v).value,
                                           i, j, k, var);
    *vanished = r.is_zero() ? 1 : 0;
    if (residual) *residual = dup_string(r.to_text());
    return BPSK_OK;
  });
}

int bpsk_coproduct_check(const char* mode, int n, int d, int v, int a, int b,
                         int c, int e, int* pass) {
  return guarded([&] {
    if (!mode || !pass) return fail_invalid("null argument");
    std::string name = mode;
    bpsk::coproduct::CheckResult r;
    if (name == "1236bis")
      r = bpsk::coproduct::check_1236bis(n, d, v, a, b);
    else if (name == "cor44")
      r = bpsk::coproduct::check_cor44(a, b, c, e, d, v);
    else if (name == "primitive")
      r = bpsk::coproduct::check_primitive_shuffle(n, d, v);
    else
      return fail_invalid("unknown coproduct mode: " + name);
    *pass = r.pass ? 1 : 0;
    return BPSK_OK;
  });
}

int bpsk_primitives(int n, int* dimension, char** basis) {
  return guarded([&] {
    if (!dimension) return fail_invalid("null argument");
    auto r = bpsk::symfunc::primitives_dim(n);
    *dimension = r.dimension;
    if (basis)
      *basis = dup_string(r.dimension > 0 ? symfunc_text(r.basis) : "");
    return BPSK_OK;
  });
}

int bpsk_phi_consistency(int n, int d, int v, unsigned seed, int* pass) {
  return guarded([&] {
    if (!pass) return fail_invalid("null argument");
    *pass = bpsk::symfunc::phi_consistency(n, d, v, seed) ? 1 : 0;
    return BPSK_OK;
  });
}

int bpsk_magic_weights(int d, int w, char** json) {
  return guarded([&] {
    if (!json) return fail_invalid("null argument");
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& chi : bpsk::weights::enumerate_magic_weights(d, w))
      arr.push_back(chi);
    *json = dup_string(arr.dump());
    return BPSK_OK;
  });
}

int bpsk_dtseries(int order, char** json, int* identical) {
  return guarded([&] {
    if (order < 0) return fail_invalid("order must be nonnegative");
    auto enumerated = bpsk::dt::a_d_enumerate(order);
    std::map<int, int> exps;
    for (int d = 1; d <= order; ++d) exps[d] = -d;
    auto product = bpsk::dt::product_formula(exps, 1, order);
    if (identical) *identical = enumerated == product.coeffs ? 1 : 0;
    if (json) {
      nlohmann::json j;
      j["enumerated"] = nlohmann::json::array();
      j["product"] = nlohmann::json::array();
      for (const auto& c : enumerated) j["enumerated"].push_back(c.get_str());
      for (const auto& c : product.coeffs) j["product"].push_back(c.get_str());
      *json = dup_string(j.dump());
    }
    return BPSK_OK;
  });
}

int bpsk_selftest(char** report, int* failed) {
  return guarded([&] {
    if (!failed) return fail_invalid("null argument");
    std::ostringstream os;
    *failed = bpsk::acceptance::run_acceptance(os);
    if (report) *report = dup_string(os.str());
    return BPSK_OK;
  });
}

}  // extern "C"
