#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qlg/family.hpp"
#include "qlg/leggett_garg.hpp"

namespace qlg {

/// Deterministic uniform double in [0, 1) from a raw 64-bit draw; identical
/// across platforms for a given generator state, unlike
/// std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng);

/// Draws valid family parameters for randomized checks. Samples are rejected
/// while min_t n_p^2 < margin: finite-difference truncation and float
/// cancellation both blow up against the fixed test tolerances as the
/// normalization degenerates, while every identity checked here is already
/// exact in the well-conditioned region.
struct ParamSampler {
  double margin = 0.04;
  FamilyParamsd operator()(std::mt19937_64& rng) const;
};

struct VerifyOptions {
  int samples = 200;
  std::uint64_t seed = 0x51c0ffee;
  double tol_scale = 1.0;  // multiplies every check tolerance
};

/// Seams for mutation audits: each replaces one quantity the checks consume.
/// Defaults are the production implementations.
struct VerifyHooks {
  std::function<double(const FamilyParamsd&, double)> tau;
  std::function<double(const FamilyParamsd&)> gamma_angle;
  std::function<ScenarioUnitaries<double>(const FamilyParamsd&, double, Scenario)>
      scenario_unitaries;

  VerifyHooks();
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Runs every invariant suite over deterministic samples and fixed parameter
/// grids. Throws std::invalid_argument for samples < 1 or tol_scale <= 0.
VerifyReport run_verification(const VerifyOptions& options,
                              const VerifyHooks& hooks = VerifyHooks());

/// Named fault injections for mutation audits of the verification suite:
///   tau-radical      misplaces the phase-integral radical over tan(t)
///   gamma-quadrant   drops the quadrant correction of the direction angle
///   exp-composition  mislabels the Exp protocol as composition-law compliant
VerifyHooks make_fault_hooks(const std::string& fault_name);

}  // namespace qlg
