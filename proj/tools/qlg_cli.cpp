#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>

#include "qlg/sweep.hpp"
#include "qlg/verify.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

// CSV goes to the file when --out is set, to stdout otherwise.
void emit(const qlg::CsvTable& table, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << qlg::to_csv_string(table);
  } else {
    qlg::write_csv_file(table, out_path);
  }
}

int run_verify(int samples, std::uint64_t seed, double tol_scale,
               const std::string& fault) {
  qlg::VerifyOptions options;
  options.samples = samples;
  options.seed = seed;
  options.tol_scale = tol_scale;
  const qlg::VerifyHooks hooks =
      fault.empty() ? qlg::VerifyHooks() : qlg::make_fault_hooks(fault);

  const qlg::VerifyReport report = qlg::run_verification(options, hooks);
  int passed = 0;
  for (const qlg::CheckResult& check : report.checks) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << ": "
              << check.detail << "\n";
    passed += check.passed ? 1 : 0;
  }
  std::cout << "verification: " << passed << "/" << report.checks.size()
            << " checks passed\n";
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Two-exponential qubit unitary family: energy and phase-integral "
      "sweeps, Leggett-Garg K3 protocols, composition-law audits, and an "
      "invariant verification suite. All numeric output is deterministic "
      "CSV."};
  app.require_subcommand(1);
  int rc = 0;

  // --- verify ---------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "Run every invariant suite; exit 0 iff all checks pass");
  int samples = 200;
  std::uint64_t seed = 0x51c0ffee;
  double tol_scale = 1.0;
  std::string fault;
  verify->add_option("--samples", samples, "Random samples per check")
      ->capture_default_str();
  verify->add_option("--seed", seed, "Sampler seed")->capture_default_str();
  verify
      ->add_option("--tol", tol_scale,
                   "Multiplier applied to every check tolerance")
      ->capture_default_str();
  verify->add_option(
      "--inject-fault", fault,
      "Self-test: run with a deliberate defect (tau-radical, gamma-quadrant, "
      "or exp-composition); the suite must then fail");
  verify->callback(
      [&] { rc = run_verify(samples, seed, tol_scale, fault); });

  // --- energy ---------------------------------------------------------
  auto* energy = app.add_subcommand(
      "energy", "Instantaneous energy eigenvalue E(t) over a time grid");
  double e_phi = 0.8;
  double e_alpha = kPi / 4;
  double e_tmin = 0.0;
  double e_tmax = kPi;
  int e_points = 512;
  std::string e_out;
  energy->add_option("--phi", e_phi, "Family angle phi in [0, pi)")
      ->capture_default_str();
  energy->add_option("--alpha", e_alpha, "Mixing angle alpha in [0, pi/2]")
      ->capture_default_str();
  energy->add_option("--t-min", e_tmin, "Grid start")->capture_default_str();
  energy->add_option("--t-max", e_tmax, "Grid end")->capture_default_str();
  energy->add_option("--points", e_points, "Grid points")->capture_default_str();
  energy->add_option("--out", e_out, "Output CSV path (default: stdout)");
  energy->callback([&] {
    emit(qlg::energy_sweep(qlg::FamilyParamsd(e_phi, e_alpha),
                           qlg::SweepRange(e_tmin, e_tmax, e_points)),
         e_out);
  });

  // --- tau ------------------------------------------------------------
  auto* tau = app.add_subcommand(
      "tau", "Phase integral tau(t) = int_0^t E dt' over a time grid");
  double t_phi = 0.95;
  double t_alpha = kPi / 4;
  double t_tmin = 0.0;
  double t_tmax = kPi;
  int t_points = 512;
  std::string t_out;
  tau->add_option("--phi", t_phi, "Family angle phi in [0, pi)")
      ->capture_default_str();
  tau->add_option("--alpha", t_alpha, "Mixing angle alpha in [0, pi/2]")
      ->capture_default_str();
  tau->add_option("--t-min", t_tmin, "Grid start")->capture_default_str();
  tau->add_option("--t-max", t_tmax, "Grid end")->capture_default_str();
  tau->add_option("--points", t_points, "Grid points")->capture_default_str();
  tau->add_option("--out", t_out, "Output CSV path (default: stdout)");
  tau->callback([&] {
    emit(qlg::tau_sweep(qlg::FamilyParamsd(t_phi, t_alpha),
                        qlg::SweepRange(t_tmin, t_tmax, t_points)),
         t_out);
  });

  // --- k3 -------------------------------------------------------------
  auto* k3 = app.add_subcommand(
      "k3", "Correlators, K3, and composition defect versus interval T");
  double k_phi = 0.9 * kPi;
  double k_alpha = kPi / 4;
  std::string k_scenario;
  double k_tmin = 0.0;
  double k_tmax = kPi;
  int k_points = 512;
  std::string k_out;
  k3->add_option("--phi", k_phi, "Family angle phi in [0, pi)")
      ->capture_default_str();
  k3->add_option("--alpha", k_alpha, "Mixing angle alpha in [0, pi/2]")
      ->capture_default_str();
  k3->add_option("--scenario", k_scenario, "Protocol: exp, a, or b")
      ->required();
  k3->add_option("--T-min", k_tmin, "Interval grid start (>= 0)")
      ->capture_default_str();
  k3->add_option("--T-max", k_tmax, "Interval grid end (<= pi)")
      ->capture_default_str();
  k3->add_option("--points", k_points, "Grid points")->capture_default_str();
  k3->add_option("--out", k_out, "Output CSV path (default: stdout)");
  k3->callback([&] {
    emit(qlg::k3_sweep(qlg::FamilyParamsd(k_phi, k_alpha),
                       qlg::scenario_from_string(k_scenario),
                       qlg::SweepRange(k_tmin, k_tmax, k_points)),
         k_out);
  });

  // --- k3max ----------------------------------------------------------
  auto* k3max = app.add_subcommand(
      "k3max", "K3 maximized over T in [0, pi] for each alpha on a grid");
  double m_phi = 0.9 * kPi;
  std::string m_scenario;
  double m_amin = 0.0;
  double m_amax = kPi / 4;
  int m_points = 101;
  int m_grid = 1024;
  double m_refine = 1e-10;
  std::string m_out;
  k3max->add_option("--phi", m_phi, "Family angle phi in [0, pi)")
      ->capture_default_str();
  k3max->add_option("--scenario", m_scenario, "Protocol: exp, a, or b")
      ->required();
  k3max->add_option("--alpha-min", m_amin, "Alpha grid start")
      ->capture_default_str();
  k3max->add_option("--alpha-max", m_amax, "Alpha grid end")
      ->capture_default_str();
  k3max->add_option("--points", m_points, "Alpha grid points")
      ->capture_default_str();
  k3max->add_option("--grid-points", m_grid, "Coarse T-scan resolution")
      ->capture_default_str();
  k3max->add_option("--refine-tol", m_refine, "Golden-section bracket width")
      ->capture_default_str();
  k3max->add_option("--out", m_out, "Output CSV path (default: stdout)");
  k3max->callback([&] {
    const qlg::K3MaxSweep sweep =
        qlg::k3max_sweep(m_phi, qlg::scenario_from_string(m_scenario),
                         qlg::SweepRange(m_amin, m_amax, m_points), m_grid,
                         m_refine);
    for (const double alpha : sweep.clipped_alphas) {
      std::cerr << "note: alpha " << qlg::format_value(alpha)
                << " clipped by the degeneracy guard\n";
    }
    emit(sweep.table, m_out);
  });

  // --- figure ---------------------------------------------------------
  auto* figure = app.add_subcommand(
      "figure", "Emit one figure's data set: CSV per curve plus a manifest");
  int fig_id = 0;
  std::string f_out = ".";
  figure->add_option("id", fig_id, "Figure id")
      ->required()
      ->check(CLI::IsMember({1, 2, 4, 5}));
  figure->add_option("--out", f_out, "Output directory")->capture_default_str();
  figure->callback([&] {
    const qlg::FigureResult result = qlg::write_figure(fig_id, f_out);
    for (const auto& file : result.files) {
      std::cout << file.string() << "\n";
    }
    std::cout << result.manifest.string() << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean; bad flags exit 2
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;  // I/O or internal failure; distinct from flag errors
  }
  return rc;
}
