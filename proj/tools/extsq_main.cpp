// Command-line front end: verification suite, single-factor printing, and
// seeded Satake sampling. Exit codes: 0 success / all checks pass, 1 check
// failure, 2 usage or parse errors.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "extsq/lfactor.hpp"
#include "extsq/series.hpp"
#include "extsq/verify.hpp"

namespace {

using cplx = std::complex<double>;

// ---------------------------------------------------------------- parsing

/// Parses one complex literal: "1.5", "-2", "0.3+0.4i", "-i", "2i".
bool parse_complex(std::string tok, cplx& out) {
  std::erase(tok, ' ');
  if (tok.empty()) return false;
  auto parse_real = [](const std::string& s, double& v) {
    if (s == "" || s == "+") { v = 1.0; return true; }   // bare sign: +-i forms
    if (s == "-") { v = -1.0; return true; }
    char* end = nullptr;
    v = std::strtod(s.c_str(), &end);
    return end != nullptr && *end == '\0' && end != s.c_str();
  };
  if (tok.back() == 'i' || tok.back() == 'I') {
    const std::string body = tok.substr(0, tok.size() - 1);
    // split at the last +/- that is not leading and not an exponent sign
    size_t cut = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') &&
          body[k - 1] != 'e' && body[k - 1] != 'E') {
        cut = k;
        break;
      }
    }
    double re = 0.0, im = 0.0;
    if (cut == std::string::npos) {
      if (!parse_real(body, im)) return false;
    } else {
      if (!parse_real(body.substr(0, cut), re)) return false;
      if (!parse_real(body.substr(cut), im)) return false;
    }
    out = {re, im};
    return true;
  }
  double re = 0.0;
  if (tok == "+" || tok == "-" || !parse_real(tok, re)) return false;
  out = {re, 0.0};
  return true;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// --------------------------------------------------------------- printing

std::string fmt_cplx(cplx v) {
  char b[64];
  if (v.imag() == 0.0) {
    std::snprintf(b, sizeof b, "%.12g", v.real());
  } else {
    std::snprintf(b, sizeof b, "%.12g%+.12gi", v.real(), v.imag());
  }
  return b;
}

// ------------------------------------------------------------- subcommands

int run_verify(const extsq::VerifyConfig& cfg, const std::string& group) {
  const auto rep = extsq::run_suite(cfg, group);
  const std::string doc = extsq::report_to_json(rep);
  std::fputs(doc.c_str(), stdout);
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write report to " << cfg.out << "\n";
      return 2;
    }
    f << doc;
  }
  return rep.all_pass ? 0 : 1;
}

int run_lfactor(const std::string& fcase, const std::string& satake, int q,
                double s, int sign) {
  using namespace extsq;
  const bool split_case = fcase == "wedge2-split";

  if (satake == "generic") {
    ExactFactor f = [&] {
      if (fcase == "wedge2-split") return wedge2_factor_split_exact();
      if (fcase == "spin") return spin_factor_exact();
      if (fcase == "std-twisted") return std_twisted_factor_exact(sign);
      if (fcase == "wedge2-inert-spin") return wedge2_factor_inert_via_spin_exact();
      return wedge2_factor_inert_via_std_exact();
    }();
    std::printf("# case %s, satake generic (exact coefficients)\n", fcase.c_str());
    for (int k = 0; k <= f.degree(); ++k)
      std::printf("T^%d: %s\n", k, f.coeff(k).str().c_str());
    return 0;
  }

  const int want = split_case ? 4 : 2;
  std::vector<cplx> vals;
  if (satake == "identity") {
    vals.assign(static_cast<size_t>(want), cplx(1.0, 0.0));
  } else {
    const auto toks = split_csv(satake);
    if (static_cast<int>(toks.size()) != want) {
      std::cerr << "--satake: case " << fcase << " needs " << want
                << " comma-separated eigenvalues, got " << toks.size() << "\n";
      return 2;
    }
    for (size_t i = 0; i < toks.size(); ++i) {
      cplx v;
      if (!parse_complex(toks[i], v)) {
        std::cerr << "--satake[" << i << "]: cannot parse '" << toks[i] << "'\n";
        return 2;
      }
      vals.push_back(v);
    }
  }

  NumericFactor coeffs;
  if (fcase == "wedge2-split") {
    const std::array<cplx, 4> chi{vals[0], vals[1], vals[2], vals[3]};
    const auto e6 = wedge2_eigenvalues(chi);
    coeffs = euler_factor_numeric(std::span<const cplx>(e6.data(), e6.size()));
  } else if (fcase == "spin") {
    const auto e = spin_eigenvalues(vals[0], vals[1]);
    coeffs = euler_factor_numeric(std::span<const cplx>(e.data(), e.size()));
  } else if (fcase == "std-twisted") {
    auto e = std5_eigenvalues(vals[0], vals[1]);
    for (auto& x : e) x *= static_cast<double>(sign);
    coeffs = euler_factor_numeric(std::span<const cplx>(e.data(), e.size()));
  } else if (fcase == "wedge2-inert-spin") {
    coeffs = wedge2_factor_inert_via_spin_numeric(vals[0], vals[1]);
  } else {
    coeffs = wedge2_factor_inert_via_std_numeric(vals[0], vals[1]);
  }

  std::printf("# case %s, satake %s, q=%d, s=%g\n", fcase.c_str(),
              satake.c_str(), q, s);
  for (size_t k = 0; k < coeffs.size(); ++k)
    std::printf("T^%zu: %s\n", k, fmt_cplx(coeffs[k]).c_str());
  const cplx T = std::exp(-s * std::log(static_cast<double>(q)));
  const cplx P = factor_eval(coeffs, T);
  std::printf("inverse polynomial at T=q^-s: %s\n", fmt_cplx(P).c_str());
  std::printf("factor value 1/P: %s\n", fmt_cplx(1.0 / P).c_str());
  return 0;
}

int run_sample(const std::string& scase, std::uint64_t seed, int count) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  if (scase == "split") {
    for (const auto& c : extsq::sample_satake_split(seed, count)) {
      nlohmann::ordered_json e;
      auto chi = nlohmann::ordered_json::array();
      for (const auto& x : c.chi)
        chi.push_back(nlohmann::ordered_json::array({x.real(), x.imag()}));
      e["chi"] = chi;
      arr.push_back(e);
    }
  } else {
    for (const auto& c : extsq::sample_satake_inert(seed, count)) {
      nlohmann::ordered_json e;
      e["a"] = nlohmann::ordered_json::array({c.a.real(), c.a.imag()});
      e["b"] = nlohmann::ordered_json::array({c.b.real(), c.b.imag()});
      arr.push_back(e);
    }
  }
  std::fputs((arr.dump(2) + "\n").c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Verification toolkit for the rank-3/rank-2 local character identities"};
  app.require_subcommand(1);

  // ---- verify ----
  std::string group = "all";
  std::string config_path;
  extsq::VerifyConfig cli;  // CLI-bound values (defaults = VerifyConfig defaults)
  int order = 0;
  auto* ver = app.add_subcommand(
      "verify", "Run the check suite and print a JSON report");
  ver->add_option("group", group, "check group to run")
      ->check(CLI::IsMember(
          {"all", "split", "inert", "lemmas", "unipotent", "factors"}));
  ver->add_option("--config", config_path,
                  "key=value config file; explicit flags win");
  ver->add_option("--order", order, "set both truncation orders");
  ver->add_option("--samples", cli.samples, "numeric sample count");
  ver->add_option("--seed", cli.seed, "sampling seed");
  ver->add_option("--q", cli.q, "residue size q");
  ver->add_option("--tol", cli.tol, "numeric relative tolerance");
  ver->add_option("--s", cli.s, "numeric value of s");
  ver->add_option("--z", cli.z, "numeric value of z");
  ver->add_option("--terms", cli.numeric_terms,
                  "numeric truncation: diagonals m+n <= terms");
  ver->add_option("--out", cli.out, "also write the report to this file");
  ver->add_flag("--timings", cli.timings,
                "include runtime_ms per check (breaks byte-reproducibility)");
  ver->add_option("--perturb", cli.perturb,
                  "fault-injection hook: corrupt the named check's data");

  // ---- lfactor ----
  std::string fcase, satake = "generic";
  int fq = 3, sign = -1;
  double fs = 3.0;
  auto* lf = app.add_subcommand(
      "lfactor", "Print one local factor's inverse-polynomial coefficients");
  lf->add_option("--case", fcase, "which factor")
      ->required()
      ->check(CLI::IsMember({"wedge2-split", "spin", "std-twisted",
                             "wedge2-inert-spin", "wedge2-inert-std"}));
  lf->add_option("--satake", satake,
                 "generic | identity | comma-separated eigenvalues "
                 "(4 for wedge2-split, 2 otherwise)");
  lf->add_option("--q", fq, "residue size q");
  lf->add_option("--s", fs, "evaluate at T = q^-s");
  lf->add_option("--sign", sign, "twist sign for std-twisted")
      ->check(CLI::IsMember({-1, 1}));

  // ---- sample ----
  std::string scase;
  std::uint64_t sseed = 1;
  int scount = 10;
  auto* sm =
      app.add_subcommand("sample", "Emit seeded unit-modulus Satake classes");
  sm->add_option("--case", scase, "split | inert")
      ->required()
      ->check(CLI::IsMember({"split", "inert"}));
  sm->add_option("--seed", sseed, "sampling seed");
  sm->add_option("--count", scount, "number of classes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ver->parsed()) {
      extsq::VerifyConfig cfg;
      if (!config_path.empty()) {
        std::string err;
        if (!extsq::load_config_file(config_path, cfg, err)) {
          std::cerr << err << "\n";
          return 2;
        }
      }
      if (ver->count("--order")) {
        cfg.split_order = order;
        cfg.inert_order = order;
      }
      if (ver->count("--samples")) cfg.samples = cli.samples;
      if (ver->count("--seed")) cfg.seed = cli.seed;
      if (ver->count("--q")) cfg.q = cli.q;
      if (ver->count("--tol")) cfg.tol = cli.tol;
      if (ver->count("--s")) cfg.s = cli.s;
      if (ver->count("--z")) cfg.z = cli.z;
      if (ver->count("--terms")) cfg.numeric_terms = cli.numeric_terms;
      if (ver->count("--out")) cfg.out = cli.out;
      if (ver->count("--timings")) cfg.timings = cli.timings;
      if (ver->count("--perturb")) cfg.perturb = cli.perturb;
      return run_verify(cfg, group);
    }
    if (lf->parsed()) return run_lfactor(fcase, satake, fq, fs, sign);
    if (sm->parsed()) return run_sample(scase, sseed, scount);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
