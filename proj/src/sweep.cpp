#include "qlg/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <future>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qlg/dynamics.hpp"

namespace qlg {

namespace {

constexpr double kPi = std::numbers::pi;

// 512 intervals over [0, pi] so that pi/2 and pi are exact grid members.
constexpr int kFigureCurvePoints = 513;

// Fills rows[j] = fn(j) for j in [0, n) with a small pool of std::async
// workers; assembly is by index, so the output never depends on scheduling.
template <class Fn>
std::vector<std::vector<double>> map_rows(int n, const Fn& fn) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(n));
  const int workers =
      std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1,
                 std::max(1, n / 32));
  if (workers <= 1) {
    for (int j = 0; j < n; ++j) {
      rows[static_cast<std::size_t>(j)] = fn(j);
    }
    return rows;
  }
  std::atomic<int> next{0};
  std::vector<std::future<void>> tasks;
  tasks.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&] {
      for (int j = next.fetch_add(1); j < n; j = next.fetch_add(1)) {
        rows[static_cast<std::size_t>(j)] = fn(j);
      }
    }));
  }
  for (auto& t : tasks) {
    t.get();  // rethrows the first worker failure
  }
  return rows;
}

void write_text_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed for '" + path.string() + "'");
  }
}

std::string join_values(const std::vector<double>& values) {
  if (values.empty()) {
    return "none";
  }
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += format_value(values[i]);
  }
  return out;
}

// Figs. 1 and 2 share one layout: three alpha curves of a scalar of t.
FigureResult figure_scalar_curves(int fig_id, double phi,
                                  const std::filesystem::path& out_dir) {
  const struct {
    double alpha;
    const char* label;
  } curves[] = {{kPi / 4, "0.25pi"}, {kPi / 8, "0.125pi"}, {0.0, "0"}};

  const SweepRange range(0.0, kPi, kFigureCurvePoints);
  FigureResult result;
  std::string manifest;
  manifest += "figure=" + std::to_string(fig_id) + "\n";
  manifest += "phi=" + format_value(phi) + "\n";
  manifest += std::string("columns=") + (fig_id == 1 ? "t,E" : "t,tau") + "\n";
  manifest += "points=" + std::to_string(kFigureCurvePoints) + "\n";
  manifest += "t_min=" + format_value(0.0) + "\n";
  manifest += "t_max=" + format_value(kPi) + "\n";

  int index = 0;
  for (const auto& curve : curves) {
    const FamilyParamsd p(phi, curve.alpha);
    const CsvTable table =
        fig_id == 1 ? energy_sweep(p, range) : tau_sweep(p, range);
    const std::string name = "fig" + std::to_string(fig_id) + "_alpha_" +
                             curve.label + ".csv";
    write_csv_file(table, out_dir / name);
    result.files.push_back(out_dir / name);
    ++index;
    const std::string key = "curve." + std::to_string(index);
    manifest += key + ".file=" + name + "\n";
    manifest += key + ".alpha=" + format_value(curve.alpha) + "\n";
  }
  manifest += "time_scale_factor=2\n";
  result.manifest = out_dir / ("fig" + std::to_string(fig_id) + "_manifest.txt");
  write_text_file(result.manifest, manifest);
  return result;
}

FigureResult figure_k3_curves(const std::filesystem::path& out_dir) {
  const double phi = 0.9 * kPi;
  const double alpha = kPi / 4;
  const FamilyParamsd p(phi, alpha);
  const SweepRange range(0.0, kPi, kFigureCurvePoints);

  FigureResult result;
  std::string manifest;
  manifest += "figure=4\n";
  manifest += "phi=" + format_value(phi) + "\n";
  manifest += "alpha=" + format_value(alpha) + "\n";
  manifest += "columns=T,C12,C23,C13,K3,defect\n";
  manifest += "points=" + std::to_string(kFigureCurvePoints) + "\n";
  manifest += "T_min=" + format_value(0.0) + "\n";
  manifest += "T_max=" + format_value(kPi) + "\n";

  int index = 0;
  for (const Scenario s : {Scenario::Exp, Scenario::A, Scenario::B}) {
    const std::string name =
        "fig4_scenario_" + std::string(to_string(s)) + ".csv";
    write_csv_file(k3_sweep(p, s, range), out_dir / name);
    result.files.push_back(out_dir / name);
    ++index;
    const std::string key = "curve." + std::to_string(index);
    manifest += key + ".file=" + name + "\n";
    manifest += key + ".scenario=" + std::string(to_string(s)) + "\n";
  }
  manifest += "refline.ttb=" + format_value(1.5) + "\n";
  manifest += "refline.k3_algebraic_max=" + format_value(3.0) + "\n";
  manifest += "time_scale_factor=2\n";
  result.manifest = out_dir / "fig4_manifest.txt";
  write_text_file(result.manifest, manifest);
  return result;
}

FigureResult figure_k3max_curves(const std::filesystem::path& out_dir) {
  const double phi = 0.9 * kPi;
  const SweepRange alpha_range(0.0, kPi / 4, 101);
  const int grid_points = 1024;
  const double refine_tol = 1e-10;

  FigureResult result;
  std::string manifest;
  manifest += "figure=5\n";
  manifest += "phi=" + format_value(phi) + "\n";
  manifest += "columns=alpha,K3_max,T_star\n";
  manifest += "points=" + std::to_string(alpha_range.points) + "\n";
  manifest += "alpha_min=" + format_value(alpha_range.lo) + "\n";
  manifest += "alpha_max=" + format_value(alpha_range.hi) + "\n";
  manifest += "grid_points=" + std::to_string(grid_points) + "\n";
  manifest += "refine_tol=" + format_value(refine_tol) + "\n";

  int index = 0;
  for (const Scenario s : {Scenario::Exp, Scenario::A, Scenario::B}) {
    const K3MaxSweep sweep = k3max_sweep(phi, s, alpha_range, grid_points, refine_tol);
    const std::string name =
        "fig5_scenario_" + std::string(to_string(s)) + ".csv";
    write_csv_file(sweep.table, out_dir / name);
    result.files.push_back(out_dir / name);
    ++index;
    const std::string key = "curve." + std::to_string(index);
    manifest += key + ".file=" + name + "\n";
    manifest += key + ".scenario=" + std::string(to_string(s)) + "\n";
    manifest += key + ".clipped_alphas=" + join_values(sweep.clipped_alphas) + "\n";
  }
  manifest += "refline.ttb=" + format_value(1.5) + "\n";
  manifest += "refline.k3_algebraic_max=" + format_value(3.0) + "\n";
  manifest += "time_scale_factor=2\n";
  result.manifest = out_dir / "fig5_manifest.txt";
  write_text_file(result.manifest, manifest);
  return result;
}

}  // namespace

SweepRange::SweepRange(double lo_, double hi_, int points_)
    : lo(lo_), hi(hi_), points(points_) {
  detail::require_finite(lo, "SweepRange: lo");
  detail::require_finite(hi, "SweepRange: hi");
  if (!(hi > lo)) {
    throw std::invalid_argument("SweepRange: requires lo < hi");
  }
  if (points < 2) {
    throw std::invalid_argument("SweepRange: points must be >= 2");
  }
}

double SweepRange::at(int j) const {
  if (j < 0 || j >= points) {
    throw std::out_of_range("SweepRange: index outside grid");
  }
  if (j == points - 1) {
    return hi;  // exact endpoint regardless of rounding
  }
  return lo + (hi - lo) * (static_cast<double>(j) / (points - 1));
}

CsvTable energy_sweep(const FamilyParamsd& p, const SweepRange& range) {
  CsvTable table;
  table.header = {"t", "E"};
  table.rows = map_rows(range.points, [&](int j) {
    const double t = range.at(j);
    return std::vector<double>{t, energy(p, t)};
  });
  return table;
}

CsvTable tau_sweep(const FamilyParamsd& p, const SweepRange& range) {
  CsvTable table;
  table.header = {"t", "tau"};
  table.rows = map_rows(range.points, [&](int j) {
    const double t = range.at(j);
    return std::vector<double>{t, tau(p, t)};
  });
  return table;
}

CsvTable k3_sweep(const FamilyParamsd& p, Scenario s, const SweepRange& range) {
  if (range.lo < 0.0 || range.hi > kPi) {
    throw std::invalid_argument("k3_sweep: T range must lie in [0, pi]");
  }
  CsvTable table;
  table.header = {"T", "C12", "C23", "C13", "K3", "defect"};
  table.rows = map_rows(range.points, [&](int j) {
    const double T = range.at(j);
    const K3Record<double> r = k3(p, T, s);
    return std::vector<double>{T, r.c12, r.c23, r.c13, r.k3, r.composition_defect};
  });
  return table;
}

K3MaxSweep k3max_sweep(double phi, Scenario s, const SweepRange& alpha_range,
                       int grid_points, double refine_tol) {
  detail::require_finite(phi, "k3max_sweep: phi");
  if (phi < 0.0 || phi >= kPi) {
    throw std::invalid_argument("k3max_sweep: phi must lie in [0, pi)");
  }
  if (alpha_range.lo < 0.0 || alpha_range.hi > kPi / 2) {
    throw std::invalid_argument("k3max_sweep: alpha range must lie in [0, pi/2]");
  }
  if (grid_points < 64) {
    throw std::invalid_argument("k3max_sweep: grid_points must be >= 64");
  }
  if (!(refine_tol > 0.0)) {
    throw std::invalid_argument("k3max_sweep: refine_tol must be positive");
  }

  K3MaxSweep out;
  out.table.header = {"alpha", "K3_max", "T_star"};
  std::vector<double> kept;
  kept.reserve(static_cast<std::size_t>(alpha_range.points));
  for (int j = 0; j < alpha_range.points; ++j) {
    const double alpha = alpha_range.at(j);
    if (1.0 + std::cos(phi) * std::sin(2 * alpha) < kDegeneracyFloor) {
      out.clipped_alphas.push_back(alpha);
    } else {
      kept.push_back(alpha);
    }
  }
  out.table.rows = map_rows(static_cast<int>(kept.size()), [&](int j) {
    const double alpha = kept[static_cast<std::size_t>(j)];
    const MaximizerResult<double> m =
        k3_max_over_T(FamilyParamsd(phi, alpha), s, grid_points, refine_tol);
    return std::vector<double>{alpha, m.k3_max, m.t_star};
  });
  return out;
}

FigureResult write_figure(int fig_id, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  switch (fig_id) {
    case 1:
      return figure_scalar_curves(1, 0.8, out_dir);
    case 2:
      return figure_scalar_curves(2, 0.95, out_dir);
    case 4:
      return figure_k3_curves(out_dir);
    case 5:
      return figure_k3max_curves(out_dir);
    default:
      throw std::invalid_argument("write_figure: unknown figure id " +
                                  std::to_string(fig_id) +
                                  " (expected 1, 2, 4, or 5)");
  }
}

}  // namespace qlg
