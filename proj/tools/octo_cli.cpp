// octo: verification suites, kernel evaluation and the basis table.
//
//   octo verify <suite> [--seed --samples --trunc --tol --d --N --variant ...]
//   octo eval --kernel szego --setting slice --domain ball --x 0.5,0,0,0,0,0,0,0 --y ...
//   octo table
//
// Exit codes: 0 success, 1 failed check or singular kernel, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>

#include "octo/io.hpp"
#include "octo/monogenic.hpp"
#include "octo/slice_kernels.hpp"
#include "octo/verify.hpp"

namespace {

constexpr int kUsage = 2;

nlohmann::ordered_json to_json(const octo::VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["check"] = r.check;
  j["anchor"] = r.anchor;
  j["residual"] = r.residual;
  j["tolerance"] = r.tolerance;
  j["stderr"] = r.std_error;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["pass"] = r.pass;
  j["wall_ms"] = r.wall_ms;
  if (r.informational) j["informational"] = true;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_csv(const octo::VerificationReport& r) {
  std::cout << r.suite << ',' << r.check << ',' << csv_field(r.anchor) << ',' << octo::format_real(r.residual) << ','
            << octo::format_real(r.tolerance) << ',' << octo::format_real(r.std_error) << ',' << r.samples << ','
            << r.seed << ',' << (r.pass ? "true" : "false") << ',' << octo::format_real(r.wall_ms) << ','
            << (r.informational ? "true" : "false") << '\n';
}

std::string basis_name(const octo::BasisProduct& p) {
  std::string s = p.sign < 0 ? "-" : "";
  return s + (p.index == 0 ? "1" : "e" + std::to_string(p.index));
}

void print_table() {
  std::cout << std::setw(4) << "";
  for (std::size_t j = 1; j < 8; ++j) std::cout << std::setw(5) << ("e" + std::to_string(j));
  std::cout << '\n';
  for (std::size_t i = 1; i < 8; ++i) {
    std::cout << std::left << std::setw(4) << ("e" + std::to_string(i)) << std::right;
    for (std::size_t j = 1; j < 8; ++j) std::cout << std::setw(5) << basis_name(octo::basis_product(i, j));
    std::cout << '\n';
  }
}

struct EvalOptions {
  std::string kernel = "szego";
  std::string setting = "monogenic";
  std::string domain = "ball";
  std::string x = "0,0,0,0,0,0,0,0";
  std::string y = "0,0,0,0,0,0,0,0";
  double d = 1.0;
  std::uint32_t n = 50;
  octo::BergmanBallVariant variant = octo::BergmanBallVariant::scalar_factor;
  bool csv = false;
};

// Kernel value with the library's argument order: first argument --x, second --y.
octo::Octonion eval_kernel(const EvalOptions& o, const octo::Octonion& x, const octo::Octonion& y) {
  using namespace octo;
  const bool slice = o.setting == "slice";
  if (o.kernel == "cauchy") return slice ? slice_cauchy_kernel(x, y) : cauchy_kernel(x - y);

  DomainSpec dom = DomainSpec::ball();
  if (o.domain == "halfspace") dom = DomainSpec::halfspace();
  if (o.domain == "strip") dom = DomainSpec::strip(o.d, o.n);

  if (o.kernel == "szego") {
    if (!slice) return szego_kernel(dom, x, y);
    switch (dom.kind) {
      case DomainKind::ball: return slice_szego_ball(x, y);
      case DomainKind::halfspace: return slice_szego_halfspace(x, y);
      case DomainKind::strip: return slice_szego_strip(x, y, dom.d, dom.terms);
    }
  }
  if (!slice) return bergman_kernel(dom, x, y, o.variant);
  switch (dom.kind) {
    case DomainKind::ball: return slice_bergman_ball(x, y);
    case DomainKind::halfspace: return slice_bergman_halfspace(x, y);
    case DomainKind::strip: return slice_bergman_strip(x, y, dom.d, dom.terms);
  }
  throw std::logic_error("unknown kernel");
}

int run_eval(const EvalOptions& o) {
  octo::Octonion x, y;
  try {
    x = octo::parse_octonion(o.x);
    y = octo::parse_octonion(o.y);
  } catch (const std::invalid_argument& e) {
    std::cerr << "octo eval: " << e.what() << '\n';
    return kUsage;
  }
  try {
    const octo::Octonion k = eval_kernel(o, x, y);
    if (o.csv) {
      std::cout << "x0,x1,x2,x3,x4,x5,x6,x7,y0,y1,y2,y3,y4,y5,y6,y7,k0,k1,k2,k3,k4,k5,k6,k7\n";
      std::cout << octo::format_octonion(x) << ',' << octo::format_octonion(y) << ',' << octo::format_octonion(k)
                << '\n';
    } else {
      std::cout << octo::format_octonion(k) << '\n';
    }
    return 0;
  } catch (const octo::Singularity& e) {
    std::cerr << "octo eval: singular point, x lies on the set " << e.set() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "octo eval: " << e.what() << '\n';
    return kUsage;
  }
}

int run_verify(const std::string& suite, const octo::VerifyConfig& cfg, bool csv) {
  if (csv)
    std::cout << "suite,check,anchor,residual,tolerance,stderr,samples,seed,pass,wall_ms,informational\n";
  try {
    const std::size_t failures = octo::run_suite(suite, cfg, [&](const octo::VerificationReport& r) {
      if (csv)
        print_csv(r);
      else
        std::cout << to_json(r).dump() << '\n';
      std::cout.flush();
    });
    return failures == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "octo verify: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Octonionic Hardy and Bergman kernels: verification and evaluation"};
  app.require_subcommand(1);

  const std::map<std::string, octo::BergmanBallVariant> variants{
      {"scalar", octo::BergmanBallVariant::scalar_factor}, {"octonion", octo::BergmanBallVariant::octonion_factor}};

  octo::VerifyConfig cfg;
  std::string suite;
  bool csv = false, json = false;
  double tol = -1;
  auto* verify = app.add_subcommand("verify", "run a verification suite, one JSON report per line");
  verify->add_option("suite", suite, "algebra | slice-structure | monogenic | slice | inner-products | all")
      ->required()
      ->check(CLI::IsMember({"algebra", "slice-structure", "monogenic", "slice", "inner-products", "all"}));
  verify->add_option("--seed", cfg.seed, "base seed");
  verify->add_option("--samples", cfg.samples, "Monte Carlo samples per estimate");
  verify->add_option("--trunc", cfg.trunc, "maximal series degree");
  verify->add_option("--tol", tol, "override every default tolerance")->check(CLI::NonNegativeNumber);
  verify->add_option("--d", cfg.d, "strip width")->check(CLI::PositiveNumber);
  verify->add_option("--N", cfg.strip_terms, "strip truncation |n| <= N")->check(CLI::PositiveNumber);
  verify->add_option("--variant", cfg.variant, "ball Bergman kernel variant")
      ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case));
  verify->add_option("--circle-nodes", cfg.circle_nodes, "circle rule size (default 4 N + 1)");
  verify->add_option("--disk-order", cfg.disk_order, "radial Gauss order (default 2 N + 2)");
  verify->add_option("--workers", cfg.workers, "Monte Carlo threads (0: all cores)");
  verify->add_flag("--json", json, "JSON lines (default)");
  verify->add_flag("--csv", csv, "CSV instead of JSON lines");

  EvalOptions eo;
  auto* eval = app.add_subcommand("eval", "evaluate a kernel K(x, y)");
  eval->add_option("--kernel", eo.kernel)->check(CLI::IsMember({"cauchy", "szego", "bergman"}));
  eval->add_option("--setting", eo.setting)->check(CLI::IsMember({"monogenic", "slice"}));
  eval->add_option("--domain", eo.domain)->check(CLI::IsMember({"ball", "halfspace", "strip"}));
  eval->add_option("--x", eo.x, "octonion literal c0,...,c7");
  eval->add_option("--y", eo.y, "octonion literal c0,...,c7");
  eval->add_option("--d", eo.d, "strip width")->check(CLI::PositiveNumber);
  eval->add_option("--N", eo.n, "strip truncation")->check(CLI::PositiveNumber);
  eval->add_option("--variant", eo.variant)->transform(CLI::CheckedTransformer(variants, CLI::ignore_case));
  eval->add_flag("--csv", eo.csv, "print a CSV row x, y, K(x, y)");

  app.add_subcommand("table", "print the signed 7x7 table of e_i e_j");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*verify) {
    if (csv && json) {
      std::cerr << "octo verify: --json and --csv are exclusive\n";
      return kUsage;
    }
    if (tol >= 0) cfg.tol = tol;
    return run_verify(suite, cfg, csv);
  }
  if (*eval) return run_eval(eo);
  print_table();
  return 0;
}
