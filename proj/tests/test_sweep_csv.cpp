#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>

#include "qlg/sweep.hpp"
#include "test_support.hpp"

using namespace qlg;
namespace fs = std::filesystem;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("SweepRange grid") {
  const SweepRange r(0.0, kPi, 513);
  CHECK(r.at(0) == 0.0);
  CHECK(r.at(512) == kPi);                 // endpoints are exact
  CHECK(r.at(256) == kPi * 0.5);           // power-of-two midpoint is exact
  CHECK(r.at(1) == doctest::Approx(kPi / 512));

  CHECK_THROWS_AS(SweepRange(1.0, 0.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(SweepRange(0.0, 0.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(SweepRange(0.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(r.at(-1), std::out_of_range);
  CHECK_THROWS_AS(r.at(513), std::out_of_range);
}

TEST_CASE("format_value round-trips doubles exactly") {
  for (const double v : {0.0, 1.0, -2.5e17, kPi, 1.0 / 3.0, 1e-300, 6.02e23}) {
    const std::string s = format_value(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
    CHECK(s.find('e') != std::string::npos);
  }
  // 16 digits after the decimal point
  CHECK(format_value(1.0).substr(0, 18) == "1.0000000000000000");
}

TEST_CASE("to_csv_string layout and validation") {
  CsvTable t;
  t.header = {"x", "y"};
  t.rows = {{1.0, 2.0}, {3.0, 4.5}};
  const std::string s = to_csv_string(t);
  CHECK(s == "x,y\n"
             "1.0000000000000000e+00,2.0000000000000000e+00\n"
             "3.0000000000000000e+00,4.5000000000000000e+00\n");

  SUBCASE("ragged table rejected") {
    t.rows.push_back({7.0});
    CHECK_THROWS_AS(validate(t), std::invalid_argument);
  }
  SUBCASE("non-finite value rejected") {
    t.rows[0][1] = std::nan("");
    CHECK_THROWS_AS(to_csv_string(t), std::invalid_argument);
  }
  SUBCASE("header cells cannot contain separators") {
    t.header[0] = "a,b";
    CHECK_THROWS_AS(validate(t), std::invalid_argument);
  }
  SUBCASE("empty header rejected") {
    CsvTable empty;
    CHECK_THROWS_AS(validate(empty), std::invalid_argument);
  }
}

TEST_CASE("energy_sweep") {
  SUBCASE("alpha = 0 curve is flat at 1") {
    const CsvTable t = energy_sweep(FamilyParamsd(0.8, 0.0), SweepRange(0.0, kPi, 201));
    REQUIRE(t.header == std::vector<std::string>{"t", "E"});
    REQUIRE(t.rows.size() == 201);
    for (const auto& row : t.rows) {
      CHECK(std::abs(row[1] - 1.0) < 1e-12);
    }
  }

  SUBCASE("columns repeat with period pi") {
    const FamilyParamsd p(0.8, kPi / 4);
    const CsvTable a = energy_sweep(p, SweepRange(0.0, kPi, 64));
    const CsvTable b = energy_sweep(p, SweepRange(kPi, 2 * kPi, 64));
    for (std::size_t j = 0; j < a.rows.size(); ++j) {
      CHECK(std::abs(a.rows[j][1] - b.rows[j][1]) < 1e-12);
    }
  }
}

TEST_CASE("tau_sweep is monotone") {
  const CsvTable t = tau_sweep(FamilyParamsd(0.95, kPi / 4), SweepRange(0.0, kPi, 128));
  for (std::size_t j = 1; j < t.rows.size(); ++j) {
    CHECK(t.rows[j][1] > t.rows[j - 1][1]);
  }
}

TEST_CASE("k3_sweep") {
  const FamilyParamsd p(0.9 * kPi, kPi / 4);
  const CsvTable t = k3_sweep(p, Scenario::B, SweepRange(0.0, kPi, 65));
  REQUIRE(t.header ==
          std::vector<std::string>{"T", "C12", "C23", "C13", "K3", "defect"});
  for (const auto& row : t.rows) {
    CHECK(row[4] == doctest::Approx(row[1] + row[2] - row[3]).epsilon(1e-14));
    CHECK(row[5] < 1e-12);  // scenario B composes
  }
  CHECK_THROWS_AS(k3_sweep(p, Scenario::B, SweepRange(-0.5, 1.0, 8)),
                  std::invalid_argument);
  CHECK_THROWS_AS(k3_sweep(p, Scenario::B, SweepRange(0.0, 4.0, 8)),
                  std::invalid_argument);
}

TEST_CASE("k3max_sweep clips the degenerate alpha and reports it") {
  // phi just shy of pi: only alpha = pi/4 trips the degeneracy floor
  const SweepRange alphas(0.0, kPi / 2, 3);
  const K3MaxSweep sweep = k3max_sweep(kPi - 1e-5, Scenario::A, alphas, 64, 1e-6);
  REQUIRE(sweep.clipped_alphas.size() == 1);
  CHECK(sweep.clipped_alphas[0] == doctest::Approx(kPi / 4));
  REQUIRE(sweep.table.rows.size() == 2);
  CHECK(sweep.table.rows[0][0] == 0.0);
  CHECK(sweep.table.rows[1][0] == kPi / 2);

  CHECK_THROWS_AS(k3max_sweep(-1.0, Scenario::A, alphas, 64, 1e-6),
                  std::invalid_argument);
  CHECK_THROWS_AS(k3max_sweep(0.5, Scenario::A, SweepRange(0.0, 2.0, 4), 64, 1e-6),
                  std::invalid_argument);
  CHECK_THROWS_AS(k3max_sweep(0.5, Scenario::A, alphas, 8, 1e-6),
                  std::invalid_argument);
}

TEST_CASE("write_figure emits curve files plus a manifest") {
  const fs::path dir = fs::temp_directory_path() / "qlg_fig_unit";
  fs::remove_all(dir);

  SUBCASE("figure 1") {
    const FigureResult r = write_figure(1, dir);
    REQUIRE(r.files.size() == 3);
    for (const auto& f : r.files) {
      CHECK(fs::exists(f));
    }
    CHECK(fs::exists(r.manifest));
    const std::string manifest = support::read_file(r.manifest);
    CHECK(manifest.find("figure=1\n") != std::string::npos);
    CHECK(manifest.find("curve.3.file=fig1_alpha_0.csv") != std::string::npos);
    CHECK(manifest.find("time_scale_factor=2\n") != std::string::npos);
  }

  SUBCASE("figure 4 manifest carries both reference lines") {
    const FigureResult r = write_figure(4, dir);
    REQUIRE(r.files.size() == 3);
    const std::string manifest = support::read_file(r.manifest);
    CHECK(manifest.find("refline.ttb=1.5000000000000000e+00") != std::string::npos);
    CHECK(manifest.find("refline.k3_algebraic_max=3.0000000000000000e+00") !=
          std::string::npos);
    CHECK(manifest.find("curve.1.scenario=exp") != std::string::npos);
  }

  SUBCASE("unknown id") {
    CHECK_THROWS_AS(write_figure(3, dir), std::invalid_argument);
  }

  fs::remove_all(dir);
}
