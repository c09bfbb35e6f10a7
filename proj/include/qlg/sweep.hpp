#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qlg/csv.hpp"
#include "qlg/family.hpp"
#include "qlg/leggett_garg.hpp"

namespace qlg {

/// Closed uniform grid over [lo, hi] with points >= 2; both endpoints are
/// grid members.
struct SweepRange {
  double lo;
  double hi;
  int points;

  SweepRange(double lo_, double hi_, int points_);
  double at(int j) const;
};

/// Columns (t, E): energy eigenvalue along a time grid.
CsvTable energy_sweep(const FamilyParamsd& p, const SweepRange& range);

/// Columns (t, tau): phase integral along a time grid.
CsvTable tau_sweep(const FamilyParamsd& p, const SweepRange& range);

/// Columns (T, C12, C23, C13, K3, defect) for one scenario. The range must
/// stay inside [0, pi].
CsvTable k3_sweep(const FamilyParamsd& p, Scenario s, const SweepRange& range);

struct K3MaxSweep {
  CsvTable table;                      // columns (alpha, K3_max, T_star)
  std::vector<double> clipped_alphas;  // grid values rejected by the degeneracy guard
};

/// Columns (alpha, K3_max, T_star): K3 maximized over T in [0, pi] for each
/// alpha on the grid. Alphas failing the degeneracy guard are clipped out
/// and reported, never silently dropped.
K3MaxSweep k3max_sweep(double phi, Scenario s, const SweepRange& alpha_range,
                       int grid_points = 1024, double refine_tol = 1e-10);

struct FigureResult {
  std::vector<std::filesystem::path> files;  // CSVs, one per curve
  std::filesystem::path manifest;
};

/// Emits the figure data sets (ids 1, 2, 4, 5) into out_dir: one CSV per
/// curve plus a key=value manifest mapping curves to parameters and listing
/// reference lines. Throws on unknown ids and I/O failure.
FigureResult write_figure(int fig_id, const std::filesystem::path& out_dir);

}  // namespace qlg
