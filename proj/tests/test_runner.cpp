#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "qot/errors.hpp"
#include "qot/report_io.hpp"
#include "qot/runner.hpp"
#include "qot/scenario.hpp"

namespace {

// Cheap two-model scenario: three fixed-power channels over two spans, with
// quadrature turned down to the floor the validator allows.
qot::ScenarioConfig small_two_model_config() {
  std::string text =
      "[band]\n"
      "centers_thz = 193.4 193.5 193.6\n"
      "power_dbm = 0\n"
      "[link]\n"
      "span_count = 2\n"
      "[models]\n"
      "names = closed_form integral\n"
      "[quadrature]\n"
      "zeta_points = 64\n"
      "f_grid_points = 32\n";
  return qot::parse_config(text);
}

std::string scratch_dir(const std::string& leaf) {
  static bool cleaned = [] {
    std::filesystem::remove_all("runner_scratch");
    return true;
  }();
  (void)cleaned;
  return "runner_scratch/" + leaf;
}

}  // namespace

TEST_CASE("full C-band scenario runs end to end with the closed form") {
  auto config = qot::generate_scenario(qot::ScenarioKind::c_band_48, 0);
  qot::RunOptions opt;
  opt.models_override = {"closed_form"};
  opt.out_dir_override = scratch_dir("cband");
  auto summary = qot::run_scenario(config, opt);

  REQUIRE(summary.csv_paths.size() == 1);
  CHECK(summary.csv_paths[0] == scratch_dir("cband") + "/gsnr_closed_form.csv");
  CHECK_FALSE(summary.has_comparison);
  CHECK(summary.powers_optimized);
  REQUIRE(summary.launch_power_dbm.size() == 1);
  CHECK(summary.launch_power_dbm[0] >= -4.0);
  CHECK(summary.launch_power_dbm[0] <= 4.0);

  auto table = qot::parse_gsnr_csv(qot::read_text_file(summary.csv_paths[0]));
  CHECK(table.freq_thz.size() == 48);
  CHECK(table.gsnr_db.size() == 10);
  for (std::size_t i = 0; i < table.freq_thz.size(); ++i) {
    // GSNR after ten spans lands in a sane window for 100 km SSMF spans
    CHECK(table.gsnr_db[9][i] > 10.0);
    CHECK(table.gsnr_db[9][i] < 40.0);
    CHECK(table.gsnr_db[9][i] < table.gsnr_db[0][i]);
  }
}

TEST_CASE("two requested models produce two tables and a comparison") {
  auto config = small_two_model_config();
  qot::RunOptions opt;
  opt.out_dir_override = scratch_dir("pair");
  auto summary = qot::run_scenario(config, opt);

  REQUIRE(summary.csv_paths.size() == 2);
  CHECK(summary.csv_paths[0] == scratch_dir("pair") + "/gsnr_closed_form.csv");
  CHECK(summary.csv_paths[1] == scratch_dir("pair") + "/gsnr_integral.csv");
  REQUIRE(summary.has_comparison);
  CHECK(summary.comparison_path == scratch_dir("pair") + "/comparison.csv");
  CHECK_FALSE(summary.powers_optimized);
  CHECK(summary.launch_power_dbm == std::vector<double>{0.0});

  summary.comparison.validate();
  CHECK(summary.comparison.mae_db < 0.5);  // the two models track each other

  auto a = qot::parse_gsnr_csv(qot::read_text_file(summary.csv_paths[0]));
  auto b = qot::parse_gsnr_csv(qot::read_text_file(summary.csv_paths[1]));
  auto m = qot::compare_tables(a, b);
  // metrics recomputed from the files agree with the summary up to %.6g
  CHECK(std::fabs(m.mae_db - summary.comparison.mae_db) < 1e-4);
  CHECK(std::fabs(m.max_ae_db - summary.comparison.max_ae_db) < 1e-4);

  std::string comparison = qot::read_text_file(summary.comparison_path);
  CHECK(comparison.rfind(qot::kComparisonCsvHeader, 0) == 0);
}

TEST_CASE("repeated runs and thread counts produce identical bytes") {
  auto config = small_two_model_config();

  qot::RunOptions a;
  a.out_dir_override = scratch_dir("det_a");
  qot::RunOptions b = a;
  b.out_dir_override = scratch_dir("det_b");
  b.n_threads = 3;

  auto sa = qot::run_scenario(config, a);
  auto sb = qot::run_scenario(config, b);
  REQUIRE(sa.csv_paths.size() == sb.csv_paths.size());
  for (std::size_t i = 0; i < sa.csv_paths.size(); ++i) {
    CHECK(qot::read_text_file(sa.csv_paths[i]) == qot::read_text_file(sb.csv_paths[i]));
  }
  CHECK(qot::read_text_file(sa.comparison_path) == qot::read_text_file(sb.comparison_path));

  // same directory twice: second run overwrites with the same bytes
  auto again = qot::run_scenario(config, a);
  CHECK(qot::read_text_file(again.csv_paths[0]) == qot::read_text_file(sa.csv_paths[0]));
}

TEST_CASE("power rules must be uniform across bands") {
  std::string text =
      "[band]\n"
      "centers_thz = 186.5\n"
      "power_dbm = 0\n"
      "[band]\n"
      "centers_thz = 193.5\n"
      "power_dbm = optimize\n";
  auto config = qot::parse_config(text);
  qot::RunOptions opt;
  opt.out_dir_override = scratch_dir("mixed");
  opt.models_override = {"closed_form"};
  CHECK_THROWS_AS(qot::run_scenario(config, opt), qot::ConfigError);
}

TEST_CASE("unknown model names fail before any simulation") {
  auto config = small_two_model_config();
  qot::RunOptions opt;
  opt.out_dir_override = scratch_dir("unknown");
  opt.models_override = {"no_such_model"};
  CHECK_THROWS_AS(qot::run_scenario(config, opt), qot::ModelError);
  CHECK_FALSE(std::filesystem::exists(scratch_dir("unknown")));
}
