// qbax: verify Baxterization identities from the command line.
#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qbax/classical.hpp"
#include "qbax/diffexpr.hpp"
#include "qbax/error.hpp"
#include "qbax/qdilog.hpp"
#include "qbax/report.hpp"

namespace {

using namespace qbax;

int emit_suite(const SuiteReport& r, const std::string& format, bool timing, const std::string& out) {
  std::string text = format == "json" ? format_json(r, timing) : format_text(r, timing);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw ConfigError("cannot write " + out);
    f << text;
  }
  if (format == "json" || !out.empty())
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  return r.ok() ? 0 : 1;
}

int emit_single(CheckResult r, const std::string& format) {
  SuiteReport s;
  s.filter = r.id;
  s.results.push_back(std::move(r));
  tally(s);
  return emit_suite(s, format, false, "");
}

std::complex<double> parse_complex(const std::string& s) {
  std::complex<double> z;
  auto comma = s.find(',');
  try {
    z.real(std::stod(s.substr(0, comma)));
    if (comma != std::string::npos) z.imag(std::stod(s.substr(comma + 1)));
  } catch (const std::exception&) {
    throw ConfigError("expected RE[,IM], got '" + s + "'");
  }
  return z;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qbax: exact and numeric checks for the Baxterization of GL_q(2)"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text", out;
  bool timing = false, serial = false;
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Override numeric tolerances (0 keeps the registered ones)");
  app.add_option("--max-sites", cfg.max_sites, "Largest chain length for symbolic transfer matrices")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--timing", timing, "Include wall times (reports are then not reproducible)");
  app.add_flag("--serial", serial, "Run checks one after another");
  app.add_option("-o,--output", out, "Write the report to a file");

  auto* verify = app.add_subcommand("verify", "Run registered checks whose id matches a glob");
  std::string pattern = "all";
  verify->add_option("pattern", pattern, "Id glob, e.g. 'rll.ext.*'; 'all' for every check")->capture_default_str();
  bool list_only = false;
  verify->add_flag("--list", list_only, "List matching ids without running them");

  auto* qd = app.add_subcommand("qdilog", "Quantum dilogarithm");
  qd->require_subcommand(1);
  auto* qd_eval = qd->add_subcommand("eval", "Evaluate S_omega(x)");
  double omega = 0.5;
  std::string xs = "1";
  qd_eval->add_option("--omega", omega, "omega, real in (0, 1]")->capture_default_str();
  qd_eval->add_option("--x", xs, "x as RE[,IM]")->capture_default_str();
  auto* qd_check = qd->add_subcommand("check", "Run a functional-equation check");
  std::string feq = "difference";
  int samples = 100;
  qd_check->add_option("--id", feq, "Check id")
      ->check(CLI::IsMember({"difference", "unitarity", "spectral", "volterra", "freefield", "reduction", "ratio"}))
      ->capture_default_str();
  qd_check->add_option("--samples", samples, "Samples per omega for sampled checks")->capture_default_str();

  auto* rep = app.add_subcommand("rep", "Root-of-unity matrix representations");
  rep->require_subcommand(1);
  rep->add_subcommand("check", "Representation, RLL and transfer residuals");

  auto* cl = app.add_subcommand("classical", "Classical lattice limits");
  cl->require_subcommand(1);
  auto* cont = cl->add_subcommand("continuum", "Convergence table of a lattice Hamiltonian");
  std::string model = "liouville", field = "sine";
  std::vector<double> kappas{1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
  double beta = 1.0, length = 1.0;
  cont->add_option("--model", model, "liouville | freefield_volterra | freefield_liouvillelimit")->capture_default_str();
  cont->add_option("--kappa-list", kappas, "Lattice spacings")->delimiter(',');
  cont->add_option("--field", field, "sine | mixed | zero")->capture_default_str();
  cont->add_option("--beta", beta)->capture_default_str();
  cont->add_option("--length", length)->capture_default_str();
  auto* zc = cl->add_subcommand("zc", "Zero-curvature residuals");
  std::string preset;
  zc->add_option("--preset", preset, "liouville | volterra_freefield | liouville_freefield (default: all)");

  auto* report = app.add_subcommand("report", "Full report or the registry table");
  bool docs = false;
  report->add_flag("--docs", docs, "Markdown table of all registered checks");

  CLI11_PARSE(app, argc, argv);
  cfg.parallel = !serial;

  try {
    if (verify->parsed()) {
      if (list_only) {
        for (const auto* e : select(pattern)) std::cout << e->id << "  " << e->anchor << "\n";
        return 0;
      }
      return emit_suite(run_suite(pattern, cfg), format, timing, out);
    }
    if (qd_eval->parsed()) {
      DilogParams p;
      p.omega = omega;
      p.parallel = !serial;
      const auto x = parse_complex(xs);
      const auto s = s_omega(x, p);
      std::cout.precision(15);
      std::cout << "S_omega(" << x.real() << (x.imag() < 0 ? "-" : "+") << std::abs(x.imag()) << "i) = " << s.real()
                << (s.imag() < 0 ? " - " : " + ") << std::abs(s.imag()) << "i  (omega = " << omega << ")\n";
      return 0;
    }
    if (qd_check->parsed()) {
      CheckResult r;
      if (feq == "difference") r = difference_grid_check(cfg.tol > 0 ? cfg.tol : 1e-8);
      else if (feq == "unitarity") r = unitarity_grid_check(cfg.tol > 0 ? cfg.tol : 1e-8);
      else if (feq == "spectral") r = spectral_sample_check(cfg.seed, samples, cfg.tol > 0 ? cfg.tol : 1e-8);
      else if (feq == "ratio") r = ratio_spread_check(cfg.tol > 0 ? cfg.tol : 1e-7);
      else r = feq_sample_check(feq_from_name(feq), cfg.seed, samples, cfg.tol > 0 ? cfg.tol : 1e-8);
      r.id = "qdilog." + feq;
      return emit_single(std::move(r), format);
    }
    if (rep->parsed()) return emit_suite(run_suite("rep.*", cfg), format, timing, out);
    if (cont->parsed()) {
      auto r = continuum_check(continuum_model_from_name(model), kappas, field_preset_from_name(field), beta, length,
                               !serial);
      std::cout << format_report(r);
      return r.order >= 1.0 ? 0 : 1;
    }
    if (zc->parsed()) {
      std::vector<ZcPreset> ps;
      if (preset.empty()) ps = {ZcPreset::liouville, ZcPreset::volterra_freefield, ZcPreset::liouville_freefield};
      else ps = {zc_preset_from_name(preset)};
      bool ok = true;
      for (ZcPreset p : ps) {
        ZcResult z = zc_residual(p);
        std::cout << zc_preset_name(p) << "\n  equation of motion: d+d-Phi = " << z.box_rhs.to_string() << "\n";
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            std::cout << "  [" << i << j << "] " << z.residual[i][j].to_string() << "  ->  "
                      << z.reduced[i][j].to_string() << "\n";
        ok = ok && z.reduced_terms() == 0;
      }
      return ok ? 0 : 1;
    }
    if (report->parsed()) {
      if (docs) {
        std::cout << registry_markdown();
        return 0;
      }
      return emit_suite(run_suite("all", cfg), format, timing, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
