#include "qlg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <utility>

#include "qlg/csv.hpp"
#include "qlg/dynamics.hpp"
#include "qlg/sweep.hpp"

namespace qlg {

namespace {

constexpr double kPi = std::numbers::pi;

double span(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// n . sigma for a uniformly random unit vector n: Hermitian, involutory.
Operator2d random_axis(std::mt19937_64& rng) {
  const double z = span(rng, -1.0, 1.0);
  const double ph = span(rng, 0.0, 2 * kPi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double x = r * std::cos(ph);
  const double y = r * std::sin(ph);
  Operator2d m;
  m << std::complex<double>(z, 0.0), std::complex<double>(x, -y),
      std::complex<double>(x, y), std::complex<double>(-z, 0.0);
  return m;
}

Operator2d random_matrix(std::mt19937_64& rng) {
  Operator2d m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      m(r, c) = std::complex<double>(span(rng, -1.0, 1.0), span(rng, -1.0, 1.0));
    }
  }
  return m;
}

State2d random_state(std::mt19937_64& rng) {
  State2d s;
  s << std::complex<double>(span(rng, -1.0, 1.0), span(rng, -1.0, 1.0)),
      std::complex<double>(span(rng, -1.0, 1.0), span(rng, -1.0, 1.0));
  if (s.norm() < 1e-3) {
    s << std::complex<double>(1.0, 0.0), std::complex<double>(0.0, 0.0);
  }
  return s.normalized();
}

// Upper-bound check: passes when worst <= tol.
CheckResult bounded(std::string name, double worst, double tol) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "worst deviation %.3e (tol %.3e)", worst, tol);
  return {std::move(name), worst <= tol, buf};
}

struct HookedK3 {
  double c12, c23, c13, k3, defect;
};

HookedK3 hooked_k3(const VerifyHooks& hooks, const FamilyParamsd& p, double T,
                   Scenario s) {
  const ScenarioUnitaries<double> v = hooks.scenario_unitaries(p, T, s);
  const double c12 = correlator(v.v12);
  const double c23 = correlator(v.v23);
  const double c13 = correlator(v.v13);
  return {c12, c23, c13, c12 + c23 - c13,
          composition_defect(v.v12, v.v23, v.v13)};
}

// --- algebra ---------------------------------------------------------------

CheckResult check_exp_unitarity(const VerifyOptions& o, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const Operator2d u = exp_traceless_hermitian(random_axis(rng), span(rng, -10.0, 10.0));
    worst = std::max(worst, frobenius_distance(u.adjoint() * u, Operator2d::Identity()));
  }
  return bounded("exp-unitarity", worst, 1e-12 * o.tol_scale);
}

CheckResult check_exp_same_axis_composition(const VerifyOptions& o,
                                            std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const Operator2d h = random_axis(rng);
    const double a = span(rng, -6.0, 6.0);
    const double b = span(rng, -6.0, 6.0);
    worst = std::max(worst,
                     frobenius_distance(exp_traceless_hermitian(h, a) *
                                            exp_traceless_hermitian(h, b),
                                        exp_traceless_hermitian(h, a + b)));
  }
  return bounded("exp-same-axis-composition", worst, 1e-12 * o.tol_scale);
}

CheckResult check_trace_linearity(const VerifyOptions& o, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const Operator2d a = random_matrix(rng);
    const Operator2d b = random_matrix(rng);
    const double x = span(rng, -2.0, 2.0);
    const double y = span(rng, -2.0, 2.0);
    worst = std::max(worst, std::abs((x * a + y * b).trace() -
                                     (x * a.trace() + y * b.trace())));
  }
  return bounded("trace-linearity", worst, 1e-12 * o.tol_scale);
}

CheckResult check_frobenius_triangle(const VerifyOptions& o, std::mt19937_64& rng) {
  double worst = -10.0;  // signed slack: d(a,c) - d(a,b) - d(b,c)
  for (int i = 0; i < o.samples; ++i) {
    const Operator2d a = random_matrix(rng);
    const Operator2d b = random_matrix(rng);
    const Operator2d c = random_matrix(rng);
    worst = std::max(worst, frobenius_distance(a, c) - frobenius_distance(a, b) -
                                frobenius_distance(b, c));
  }
  return bounded("frobenius-triangle-inequality", worst, 1e-12 * o.tol_scale);
}

CheckResult check_evolve_norm(const VerifyOptions& o, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const Operator2d u =
        std::polar(1.0, span(rng, 0.0, 2 * kPi)) *
        exp_traceless_hermitian(random_axis(rng), span(rng, -4.0, 4.0));
    worst = std::max(worst, std::abs(evolve(random_state(rng), u).norm() - 1.0));
  }
  return bounded("evolve-preserves-norm", worst, 1e-10 * o.tol_scale);
}

// --- family ----------------------------------------------------------------

CheckResult check_family_unitarity(const VerifyOptions& o, const ParamSampler& draw,
                                   std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const FamilyParamsd p = draw(rng);
    for (int j = 0; j <= 80; ++j) {
      const double t = -2 * kPi + 4 * kPi * j / 80.0;
      const Operator2d u = u_p(p, t);
      worst = std::max(worst,
                       frobenius_distance(u.adjoint() * u, Operator2d::Identity()));
    }
  }
  return bounded("family-unitarity", worst, 1e-12 * o.tol_scale);
}

CheckResult check_w_normalization(const VerifyOptions& o, const ParamSampler& draw,
                                  std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const FamilyParamsd p = draw(rng);
    const double t = span(rng, -2 * kPi, 2 * kPi);
    const Operator2d w = w_matrix(p, t);
    const Operator2d residual =
        w.adjoint() * w - norm_sq(p, t) * Operator2d::Identity();
    worst = std::max(worst, residual.cwiseAbs().maxCoeff());
  }
  return bounded("w-normalization-identity", worst, 1e-12 * o.tol_scale);
}

CheckResult check_u_tilde_chain(const VerifyOptions& o, const ParamSampler& draw,
                                std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const FamilyParamsd p = draw(rng);
    const double t1 = span(rng, -2.0, 2.0);
    const double t2 = span(rng, -2.0, 2.0);
    const double t3 = span(rng, -2.0, 2.0);
    worst = std::max(worst, frobenius_distance(u_tilde(p, t3, t2) * u_tilde(p, t2, t1),
                                               u_tilde(p, t3, t1)));
  }
  return bounded("u-tilde-composition-chain", worst, 1e-12 * o.tol_scale);
}

CheckResult check_non_homogeneity(const VerifyOptions& o, std::mt19937_64& rng) {
  // Generic parameters must break U(2T) = U(T)^2 somewhere; the degenerate
  // one-exponential members must satisfy it everywhere.
  const FamilyParamsd generic(0.9 * kPi, kPi / 4);
  double generic_max = 0.0;
  for (int j = 0; j <= 100; ++j) {
    const double T = kPi / 2 * j / 100.0;
    const Operator2d u1 = u_p(generic, T);
    generic_max =
        std::max(generic_max, frobenius_distance(u_p(generic, 2 * T), u1 * u1));
  }

  const FamilyParamsd alpha_zero(span(rng, 0.0, kPi * 0.999), 0.0);
  const FamilyParamsd phi_zero(0.0, span(rng, 0.0, kPi / 2));
  double degenerate_max = 0.0;
  for (const FamilyParamsd& p : {alpha_zero, phi_zero}) {
    for (int j = 0; j <= 100; ++j) {
      const double T = kPi / 2 * j / 100.0;
      const Operator2d u1 = u_p(p, T);
      degenerate_max =
          std::max(degenerate_max, frobenius_distance(u_p(p, 2 * T), u1 * u1));
    }
  }

  const double tol = 1e-12 * o.tol_scale;
  const bool passed = generic_max > 0.1 && degenerate_max <= tol;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "generic max %.3e (required > 1e-1), degenerate max %.3e (tol %.3e)",
                generic_max, degenerate_max, tol);
  return {"exp-protocol-non-homogeneity", passed, buf};
}

CheckResult check_u_periodicity(const VerifyOptions& o, const ParamSampler& draw,
                                std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const FamilyParamsd p = draw(rng);
    const double t = span(rng, -kPi, kPi);
    const std::complex<double> overlap = (u_p(p, t + kPi).adjoint() * u_p(p, t)).trace();
    worst = std::max(worst, std::abs(std::abs(overlap) - 2.0));
  }
  return bounded("u-periodicity-projective", worst, 1e-10 * o.tol_scale);
}

// --- dynamics --------------------------------------------------------------

CheckResult check_spectral_projectors(const VerifyOptions& o, const ParamSampler& draw,
                                      std::mt19937_64& rng) {
  double worst = 0.0;
  const Operator2d id = Operator2d::Identity();
  for (int i = 0; i < o.samples; ++i) {
    const SpectralData<double> sd = spectral(draw(rng));
    const Operator2d plus = (id + sd.direction) / 2.0;
    const Operator2d minus = (id - sd.direction) / 2.0;
    worst = std::max({worst, frobenius_distance(plus * plus, plus),
                      frobenius_distance(minus * minus, minus),
                      (plus * minus).norm(), frobenius_distance(plus + minus, id)});
  }
  return bounded("spectral-projectors", worst, 1e-12 * o.tol_scale);
}

CheckResult check_eigen_equation(const VerifyOptions& o, const ParamSampler& draw,
                                 std::mt19937_64& rng) {
  double worst = 0.0;
  const Operator2d id = Operator2d::Identity();
  for (int i = 0; i < o.samples; ++i) {
    const FamilyParamsd p = draw(rng);
    const double t = span(rng, -kPi, kPi);
    const SpectralData<double> sd = spectral(p);
    const Operator2d h = hamiltonian(p, t);
    const double e = energy(p, t);
    const Operator2d plus = (id + sd.direction) / 2.0;
    const Operator2d minus = (id - sd.direction) / 2.0;
    worst = std::max({worst, frobenius_distance(h * plus, e * plus),
                      frobenius_distance(h * minus, -e * minus)});
  }
  return bounded("eigen-equation", worst, 1e-12 * o.tol_scale);
}

CheckResult check_tau_additivity(const VerifyOptions& o, const VerifyHooks& hooks,
                                 const ParamSampler& draw, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const FamilyParamsd p = draw(rng);
    for (int j = 0; j <= 64; ++j) {
      const double t = -2 * kPi + 4 * kPi * j / 64.0;
      worst = std::max(worst,
                       std::abs(hooks.tau(p, t + kPi) - hooks.tau(p, t) - kPi));
    }
  }
  return bounded("tau-additivity", worst, 1e-10 * o.tol_scale);
}

CheckResult check_tau_monotonicity(const VerifyOptions& o, const VerifyHooks& hooks,
                                   const ParamSampler& draw, std::mt19937_64& rng) {
  double worst_step = 1.0;  // smallest forward difference seen
  for (int i = 0; i < o.samples; ++i) {
    const FamilyParamsd p = draw(rng);
    double prev = hooks.tau(p, -2 * kPi);
    for (int j = 1; j <= 128; ++j) {
      const double t = -2 * kPi + 4 * kPi * j / 128.0;
      const double cur = hooks.tau(p, t);
      worst_step = std::min(worst_step, cur - prev);
      prev = cur;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "smallest grid increment %.3e (required > 0)",
                worst_step);
  return {"tau-monotonicity", worst_step > 0.0, buf};
}

CheckResult check_triple_agreement(const VerifyOptions& o, const ParamSampler& draw,
                                   std::mt19937_64& rng) {
  // The stepped integrator is the expensive oracle; cap its sample count.
  const int n = std::min(o.samples, 100);
  double worst_closed = 0.0;
  double worst_stepped = 0.0;
  for (int i = 0; i < n; ++i) {
    const FamilyParamsd p = draw(rng);
    const double t1 = span(rng, -1.5, 1.5);
    const double t2 = span(rng, -1.5, 1.5);
    const Operator2d direct = u_tilde(p, t2, t1);
    const Operator2d closed = propagator_closed(p, t2, t1);
    const Operator2d stepped = propagator_stepped(p, t2, t1, 10000);
    worst_closed = std::max(worst_closed, frobenius_distance(direct, closed));
    worst_stepped = std::max({worst_stepped, frobenius_distance(direct, stepped),
                              frobenius_distance(closed, stepped)});
  }
  const double tol_closed = 1e-10 * o.tol_scale;
  const double tol_stepped = 1e-6 * o.tol_scale;
  const bool passed = worst_closed <= tol_closed && worst_stepped <= tol_stepped;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "direct-vs-closed %.3e (tol %.3e), stepped %.3e (tol %.3e)",
                worst_closed, tol_closed, worst_stepped, tol_stepped);
  return {"propagator-triple-agreement", passed, buf};
}

CheckResult check_hamiltonian_fd(const VerifyOptions& o, const VerifyHooks& hooks,
                                 const ParamSampler& draw, std::mt19937_64& rng) {
  const int n = std::min(o.samples, 100);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const FamilyParamsd p = draw(rng);
    const double t = span(rng, -2.0, 2.0);
    // Closed form reassembled from the direction angle under audit; the
    // finite-difference side stays hook-free as the independent reference.
    const Operator2d closed =
        (spectral(p).energy_prefactor / norm_sq(p, t)) * sigma_phi(hooks.gamma_angle(p));
    worst = std::max(worst,
                     frobenius_distance(closed, hamiltonian_numeric(p, t, 1e-5)));
  }
  return bounded("hamiltonian-matches-finite-difference", worst, 1e-7 * o.tol_scale);
}

CheckResult check_tau_derivative(const VerifyOptions& o, const VerifyHooks& hooks,
                                 const ParamSampler& draw, std::mt19937_64& rng) {
  const double h = 1e-5;
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const FamilyParamsd p = draw(rng);
    for (int j = 0; j < 100; ++j) {
      const double t = kPi * j / 99.0;
      const double slope = (hooks.tau(p, t + h) - hooks.tau(p, t - h)) / (2 * h);
      worst = std::max(worst, std::abs(slope - energy(p, t)));
    }
  }
  return bounded("tau-derivative-matches-energy", worst, 1e-6 * o.tol_scale);
}

// --- leggett-garg ----------------------------------------------------------

CheckResult check_ttb_compliance(const VerifyOptions& o, const VerifyHooks& hooks) {
  const double phis[] = {0.1, 0.5, 0.9 * kPi - 0.05, 0.9 * kPi};
  const double alphas[] = {0.0, kPi / 8, kPi / 4};
  double worst = -3.0;
  for (const double phi : phis) {
    for (const double alpha : alphas) {
      const FamilyParamsd p(phi, alpha);
      for (int j = 0; j < 512; ++j) {
        const double T = kPi * j / 511.0;
        for (const Scenario s : {Scenario::A, Scenario::B}) {
          worst = std::max(worst, hooked_k3(hooks, p, T, s).k3 - 1.5);
        }
      }
    }
  }
  return bounded("ttb-bound-compliance", worst, 1e-9 * o.tol_scale);
}

CheckResult check_degenerate_collapse(const VerifyOptions& o, const VerifyHooks& hooks,
                                      std::mt19937_64& rng) {
  double worst = 0.0;
  const int n = std::min(o.samples, 16);
  for (int i = 0; i < n; ++i) {
    const FamilyParamsd cases[] = {FamilyParamsd(span(rng, 0.0, kPi * 0.999), 0.0),
                                   FamilyParamsd(0.0, span(rng, 0.0, kPi / 2))};
    for (const FamilyParamsd& p : cases) {
      for (int j = 0; j <= 32; ++j) {
        const double T = kPi / 2 * j / 32.0;
        const HookedK3 a = hooked_k3(hooks, p, T, Scenario::Exp);
        const HookedK3 b = hooked_k3(hooks, p, T, Scenario::A);
        const HookedK3 c = hooked_k3(hooks, p, T, Scenario::B);
        worst = std::max({worst, std::abs(a.c12 - b.c12), std::abs(a.c23 - b.c23),
                          std::abs(a.c13 - b.c13), std::abs(a.k3 - b.k3),
                          std::abs(a.defect - b.defect), std::abs(a.c12 - c.c12),
                          std::abs(a.c23 - c.c23), std::abs(a.c13 - c.c13),
                          std::abs(a.k3 - c.k3), std::abs(a.defect - c.defect)});
      }
    }
  }
  return bounded("degenerate-collapse", worst, 1e-12 * o.tol_scale);
}

CheckResult check_correlator_closed_form(const VerifyOptions& o,
                                         const VerifyHooks& hooks,
                                         const ParamSampler& draw,
                                         std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const FamilyParamsd p = draw(rng);
    const double T = span(rng, 0.0, kPi / 2);
    const ScenarioUnitaries<double> v = hooks.scenario_unitaries(p, T, Scenario::B);
    const double tau0 = hooks.tau(p, 0.0);
    const double tau1 = hooks.tau(p, T);
    const double tau2 = hooks.tau(p, 2 * T);
    worst = std::max(
        {worst, std::abs(correlator(v.v12) - std::cos(2 * (tau1 - tau0))),
         std::abs(correlator(v.v23) - std::cos(2 * (tau2 - tau1))),
         std::abs(correlator(v.v13) - std::cos(2 * (tau2 - tau0)))});
  }
  return bounded("correlator-closed-form", worst, 1e-10 * o.tol_scale);
}

CheckResult check_algebraic_bound(const VerifyOptions& o, const VerifyHooks& hooks,
                                  const ParamSampler& draw, std::mt19937_64& rng) {
  double worst = -3.0;  // signed margin: |K3| - 3
  for (int i = 0; i < o.samples; ++i) {
    const FamilyParamsd p = draw(rng);
    const double T = span(rng, 0.0, kPi);
    for (const Scenario s : {Scenario::Exp, Scenario::A, Scenario::B}) {
      worst = std::max(worst, std::abs(hooked_k3(hooks, p, T, s).k3) - 3.0);
    }
  }
  return bounded("k3-algebraic-bound", worst, 1e-12 * o.tol_scale);
}

CheckResult check_defect_vanishes_at_zero(const VerifyOptions& o,
                                          const VerifyHooks& hooks,
                                          const ParamSampler& draw,
                                          std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const FamilyParamsd p = draw(rng);
    for (const Scenario s : {Scenario::Exp, Scenario::A, Scenario::B}) {
      worst = std::max(worst, hooked_k3(hooks, p, 0.0, s).defect);
    }
  }
  return bounded("defect-vanishes-at-zero", worst, 1e-12 * o.tol_scale);
}

CheckResult check_composition_audit(const VerifyOptions& o, const VerifyHooks& hooks,
                                    const ParamSampler& draw, std::mt19937_64& rng) {
  // Legitimate protocols compose; the reconstructed experimental protocol
  // must not, with a macroscopic defect at the reference point.
  double worst_legit = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const FamilyParamsd p = draw(rng);
    const double T = span(rng, 0.0, kPi / 2);
    worst_legit = std::max({worst_legit, hooked_k3(hooks, p, T, Scenario::A).defect,
                            hooked_k3(hooks, p, T, Scenario::B).defect});
  }
  const FamilyParamsd ref(0.9 * kPi, kPi / 4);
  const double exp_defect = hooked_k3(hooks, ref, 0.8, Scenario::Exp).defect;

  const double tol = 1e-10 * o.tol_scale;
  const bool passed = worst_legit <= tol && exp_defect > 0.05;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "legitimate worst %.3e (tol %.3e), exp defect %.3e (required > 5e-2)",
                worst_legit, tol, exp_defect);
  return {"composition-defect-audit", passed, buf};
}

// --- sweep/csv -------------------------------------------------------------

CheckResult check_csv_determinism(const VerifyOptions&) {
  const FamilyParamsd p(0.8, kPi / 8);
  const SweepRange range(0.0, kPi, 64);
  const std::string a = to_csv_string(energy_sweep(p, range));
  const std::string b = to_csv_string(energy_sweep(p, range));

  // Round-trip: every emitted value must parse back to the exact double.
  bool roundtrip = true;
  const CsvTable table = energy_sweep(p, range);
  for (const auto& row : table.rows) {
    for (const double v : row) {
      if (std::strtod(format_value(v).c_str(), nullptr) != v) {
        roundtrip = false;
      }
    }
  }
  const bool passed = (a == b) && roundtrip;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "byte-identical %s, value round-trip %s",
                a == b ? "yes" : "NO", roundtrip ? "exact" : "LOSSY");
  return {"csv-determinism", passed, buf};
}

}  // namespace

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

FamilyParamsd ParamSampler::operator()(std::mt19937_64& rng) const {
  for (;;) {
    const double phi = uniform01(rng) * kPi;
    const double alpha = uniform01(rng) * (kPi / 2);
    if (1.0 + std::cos(phi) * std::sin(2 * alpha) < margin) {
      continue;
    }
    return FamilyParamsd(phi, alpha);
  }
}

VerifyHooks::VerifyHooks()
    : tau([](const FamilyParamsd& p, double t) { return qlg::tau(p, t); }),
      gamma_angle([](const FamilyParamsd& p) { return qlg::gamma_angle(p); }),
      scenario_unitaries([](const FamilyParamsd& p, double T, Scenario s) {
        return qlg::scenario_unitaries(p, T, s);
      }) {}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verification(const VerifyOptions& options, const VerifyHooks& hooks) {
  if (options.samples < 1) {
    throw std::invalid_argument("run_verification: samples must be >= 1");
  }
  if (!(options.tol_scale > 0.0) || !std::isfinite(options.tol_scale)) {
    throw std::invalid_argument("run_verification: tol_scale must be positive");
  }

  const ParamSampler draw;
  VerifyReport report;
  std::uint64_t salt = 0;
  // Each check gets its own generator so the sequence any one check sees is
  // independent of the others' sample counts.
  const auto fresh = [&] {
    return std::mt19937_64(options.seed ^ (0x9e3779b97f4a7c15ull * ++salt));
  };

  {
    auto rng = fresh();
    report.checks.push_back(check_exp_unitarity(options, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_exp_same_axis_composition(options, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_trace_linearity(options, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_frobenius_triangle(options, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_evolve_norm(options, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_family_unitarity(options, draw, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_w_normalization(options, draw, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_u_tilde_chain(options, draw, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_non_homogeneity(options, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_u_periodicity(options, draw, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_spectral_projectors(options, draw, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_eigen_equation(options, draw, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_tau_additivity(options, hooks, draw, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_tau_monotonicity(options, hooks, draw, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_triple_agreement(options, draw, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_hamiltonian_fd(options, hooks, draw, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_tau_derivative(options, hooks, draw, rng));
  }
  report.checks.push_back(check_ttb_compliance(options, hooks));
  {
    auto rng = fresh();
    report.checks.push_back(check_degenerate_collapse(options, hooks, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_correlator_closed_form(options, hooks, draw, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_algebraic_bound(options, hooks, draw, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_defect_vanishes_at_zero(options, hooks, draw, rng));
  }
  {
    auto rng = fresh();
    report.checks.push_back(check_composition_audit(options, hooks, draw, rng));
  }
  report.checks.push_back(check_csv_determinism(options));
  return report;
}

VerifyHooks make_fault_hooks(const std::string& fault_name) {
  VerifyHooks hooks;
  if (fault_name == "tau-radical") {
    // The phase-ratio radical divides tan(t) instead of multiplying it.
    hooks.tau = [](const FamilyParamsd& p, double t) {
      const double n = std::floor(t / kPi + 0.5);
      const double tr = t - n * kPi;
      return std::atan2(std::sin(tr), phase_ratio(p) * std::cos(tr)) + n * kPi;
    };
  } else if (fault_name == "gamma-quadrant") {
    // Plain arctan of the ratio: loses the second-quadrant branch.
    hooks.gamma_angle = [](const FamilyParamsd& p) {
      const double sa = std::sin(p.alpha);
      return std::atan(std::sin(p.phi) * sa /
                       (std::cos(p.alpha) + std::cos(p.phi) * sa));
    };
  } else if (fault_name == "exp-composition") {
    // Mislabels the experimental protocol as composition-law compliant by
    // substituting the homogeneous V13.
    hooks.scenario_unitaries = [](const FamilyParamsd& p, double T, Scenario s) {
      if (s == Scenario::Exp) {
        return qlg::scenario_unitaries(p, T, Scenario::A);
      }
      return qlg::scenario_unitaries(p, T, s);
    };
  } else {
    throw std::invalid_argument("unknown fault '" + fault_name +
                                "' (expected tau-radical, gamma-quadrant, or "
                                "exp-composition)");
  }
  return hooks;
}

}  // namespace qlg
