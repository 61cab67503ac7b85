// Command-line frontend. Links only against the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bpskalc.h"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int report_error(int status) {
  std::cerr << "error: " << bpsk_last_error() << "\n";
  return status == BPSK_ERR_INVALID_ARGUMENT ? kExitUsage : kExitCheckFailed;
}

int print_poly(bpsk_poly* p, const std::string& format) {
  char* text = nullptr;
  int status = format == "json" ? bpsk_poly_to_json(p, &text)
                                : bpsk_poly_to_text(p, &text);
  bpsk_poly_free(p);
  if (status != BPSK_OK) return report_error(status);
  std::cout << text << "\n";
  bpsk_string_free(text);
  return 0;
}

int load_poly(const std::string& path, int v, bpsk_poly** out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitUsage;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  int status = bpsk_poly_from_json(buf.str().c_str(), v, out);
  if (status != BPSK_OK) return report_error(status);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact shuffle-algebra and wall-crossing calculator"};
  app.require_subcommand(1);

  int d = 1, v = 0, n = 1, w = 0, N = 6, a = 1, b = 1, c = 1, e = 1;
  int jobs = 1;
  unsigned seed = 1;
  std::string format = "text", kernel = "xi", mode = "1236bis";
  std::string variant = "q1", indices = "0,1,2", lhs_path, rhs_path;
  int lhs_v = 0, rhs_v = 0;
  bool compare_shuffle = false, with_shuffle = false, check = false;

  app.add_option("--jobs", jobs, "Worker count (output is independent of it)")
      ->check(CLI::PositiveNumber);

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* cmd_a = app.add_subcommand("a-element", "Symmetrized generator");
  cmd_a->add_option("-d", d)->required();
  cmd_a->add_option("-v", v)->required();
  add_format(cmd_a);

  auto* cmd_e = app.add_subcommand("e-class", "Pushforward class");
  cmd_e->add_option("-d", d)->required();
  cmd_e->add_option("-v", v)->required();
  add_format(cmd_e);

  auto* cmd_p = app.add_subcommand("p-element", "Power-sum type element");
  cmd_p->add_option("-d", d)->required();
  cmd_p->add_option("-v", v)->required();
  cmd_p->add_option("-n", n)->required();
  add_format(cmd_p);

  auto* cmd_mul = app.add_subcommand("shuffle-mul", "Kernel product");
  cmd_mul->add_option("--kernel", kernel)
      ->check(CLI::IsMember({"xi", "xip", "w"}));
  cmd_mul->add_option("--lhs", lhs_path, "Left factor (JSON file)")
      ->required();
  cmd_mul->add_option("--rhs", rhs_path, "Right factor (JSON file)")
      ->required();
  cmd_mul->add_option("--lhs-v", lhs_v, "Weight annotation of the left factor");
  cmd_mul->add_option("--rhs-v", rhs_v,
                      "Weight annotation of the right factor");
  add_format(cmd_mul);

  auto* cmd_bwb =
      app.add_subcommand("bwb-expand", "Character-sum expansion");
  cmd_bwb->add_option("-n", n)->required();
  cmd_bwb->add_option("-d", d)->required();
  cmd_bwb->add_option("-v", v)->required();
  cmd_bwb->add_flag("--compare-shuffle", compare_shuffle,
                    "Compare with the symmetrization route");
  add_format(cmd_bwb);

  auto* cmd_div = app.add_subcommand("divcheck", "Boundary-factor division");
  cmd_div->add_option("-d", d)->required();
  cmd_div->add_option("-v", v)->required();

  auto* cmd_wheel = app.add_subcommand("wheel", "Wheel substitution");
  cmd_wheel->add_option("-d", d)->required();
  cmd_wheel->add_option("-v", v)->required();
  cmd_wheel->add_option("--indices", indices, "Comma separated i,j,k (0-based)");
  cmd_wheel->add_option("--variant", variant)
      ->check(CLI::IsMember({"q1", "q2"}));

  auto* cmd_cop = app.add_subcommand("coproduct-check", "Compatibility check");
  cmd_cop->add_option("--mode", mode)
      ->check(CLI::IsMember({"1236bis", "cor44", "primitive"}));
  cmd_cop->add_option("-n", n);
  cmd_cop->add_option("-d", d);
  cmd_cop->add_option("-v", v);
  cmd_cop->add_option("-a", a);
  cmd_cop->add_option("-b", b);
  cmd_cop->add_option("-c", c);
  cmd_cop->add_option("-e", e);

  auto* cmd_prim = app.add_subcommand("primitives", "Primitive space");
  cmd_prim->add_option("-n", n)->required();
  cmd_prim->add_flag("--shuffle", with_shuffle,
                     "Also certify the shuffle model at (n, d, v)");
  cmd_prim->add_option("-d", d);
  cmd_prim->add_option("-v", v);
  cmd_prim->add_option("--seed", seed);

  auto* cmd_magic = app.add_subcommand("magic-weights", "Lattice enumeration");
  cmd_magic->add_option("-d", d)->required();
  cmd_magic->add_option("-w", w)->required();

  auto* cmd_dt = app.add_subcommand("dtseries", "Generating series");
  cmd_dt->add_option("-N", N, "Truncation order")->required();
  cmd_dt->add_flag("--check", check, "Fail unless both sides agree");

  auto* cmd_self = app.add_subcommand("selftest", "Full verification suite");
  (void)cmd_self;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  int status = BPSK_OK;

  if (cmd_a->parsed()) {
    bpsk_poly* p = nullptr;
    if ((status = bpsk_a_element(d, v, &p)) != BPSK_OK)
      return report_error(status);
    return print_poly(p, format);
  }

  if (cmd_e->parsed()) {
    bpsk_poly* p = nullptr;
    if ((status = bpsk_e_class(d, v, &p)) != BPSK_OK)
      return report_error(status);
    return print_poly(p, format);
  }

  if (cmd_p->parsed()) {
    bpsk_poly* p = nullptr;
    if ((status = bpsk_p_element(d, v, n, &p)) != BPSK_OK)
      return report_error(status);
    return print_poly(p, format);
  }

  if (cmd_mul->parsed()) {
    bpsk_poly *lhs = nullptr, *rhs = nullptr, *prod = nullptr;
    int rc = load_poly(lhs_path, lhs_v, &lhs);
    if (rc != 0) return rc;
    rc = load_poly(rhs_path, rhs_v, &rhs);
    if (rc != 0) {
      bpsk_poly_free(lhs);
      return rc;
    }
    status = bpsk_shuffle_mul(lhs, rhs, kernel.c_str(), &prod);
    bpsk_poly_free(lhs);
    bpsk_poly_free(rhs);
    if (status != BPSK_OK) return report_error(status);
    return print_poly(prod, format);
  }

  if (cmd_bwb->parsed()) {
    bpsk_poly* p = nullptr;
    if ((status = bpsk_bwb_expand(n, d, v, &p)) != BPSK_OK)
      return report_error(status);
    if (compare_shuffle) {
      bpsk_poly* q = nullptr;
      if ((status = bpsk_a_element(n * d, n * v, &q)) != BPSK_OK) {
        bpsk_poly_free(p);
        return report_error(status);
      }
      int same = 0;
      bpsk_poly_equal(p, q, &same);
      bpsk_poly_free(q);
      if (!same) {
        bpsk_poly_free(p);
        std::cout << "MISMATCH\n";
        return kExitCheckFailed;
      }
    }
    return print_poly(p, format);
  }

  if (cmd_div->parsed()) {
    int divisible = 0;
    char* report = nullptr;
    if ((status = bpsk_divcheck(d, v, &divisible, &report)) != BPSK_OK)
      return report_error(status);
    std::cout << report << "\n";
    bpsk_string_free(report);
    return divisible ? 0 : kExitCheckFailed;
  }

  if (cmd_wheel->parsed()) {
    int i = 0, j = 0, k = 0;
    if (std::sscanf(indices.c_str(), "%d,%d,%d", &i, &j, &k) != 3) {
      std::cerr << "error: --indices expects i,j,k\n";
      return kExitUsage;
    }
    int vanished = 0;
    char* residual = nullptr;
    status = bpsk_wheel(d, v, i, j, k, variant.c_str(), &vanished, &residual);
    if (status != BPSK_OK) return report_error(status);
    std::cout << (vanished ? "VANISHES" : residual) << "\n";
    bpsk_string_free(residual);
    return vanished ? 0 : kExitCheckFailed;
  }

  if (cmd_cop->parsed()) {
    int pass = 0;
    status = bpsk_coproduct_check(mode.c_str(), n, d, v, a, b, c, e, &pass);
    if (status != BPSK_OK) return report_error(status);
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : kExitCheckFailed;
  }

  if (cmd_prim->parsed()) {
    int dim = 0;
    char* basis = nullptr;
    if ((status = bpsk_primitives(n, &dim, &basis)) != BPSK_OK)
      return report_error(status);
    std::cout << "dimension " << dim << "\n";
    if (dim > 0) std::cout << "basis " << basis << "\n";
    bpsk_string_free(basis);
    if (with_shuffle) {
      int pass1 = 0, pass2 = 0;
      status = bpsk_coproduct_check("primitive", n, d, v, 0, 0, 0, 0, &pass1);
      if (status != BPSK_OK) return report_error(status);
      status = bpsk_phi_consistency(n, d, v, seed, &pass2);
      if (status != BPSK_OK) return report_error(status);
      std::cout << "shuffle-primitive " << (pass1 ? "PASS" : "FAIL") << "\n";
      std::cout << "rank-certificate " << (pass2 ? "PASS" : "FAIL") << "\n";
      if (!pass1 || !pass2) return kExitCheckFailed;
    }
    return 0;
  }

  if (cmd_magic->parsed()) {
    char* json = nullptr;
    if ((status = bpsk_magic_weights(d, w, &json)) != BPSK_OK)
      return report_error(status);
    std::cout << json << "\n";
    bpsk_string_free(json);
    return 0;
  }

  if (cmd_dt->parsed()) {
    char* json = nullptr;
    int identical = 0;
    if ((status = bpsk_dtseries(N, &json, &identical)) != BPSK_OK)
      return report_error(status);
    std::cout << json << "\n";
    bpsk_string_free(json);
    return (check && !identical) ? kExitCheckFailed : 0;
  }

  // selftest
  char* report = nullptr;
  int failed = 0;
  if ((status = bpsk_selftest(&report, &failed)) != BPSK_OK)
    return report_error(status);
  std::cout << report;
  bpsk_string_free(report);
  return failed == 0 ? 0 : kExitCheckFailed;
}
