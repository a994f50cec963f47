#ifndef QOT_RUNNER_HPP
#define QOT_RUNNER_HPP

// Executes a scenario config end to end: resolve launch powers, simulate the
// link once per requested model, write one GSNR CSV per model, and when two
// or more models ran, write a comparison CSV for the first two. All file
// content is rendered in memory and written in fixed order, so identical
// configs produce byte-identical outputs at any thread count.

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qot/channel.hpp"
#include "qot/errors.hpp"
#include "qot/link_engine.hpp"
#include "qot/model_registry.hpp"
#include "qot/report_io.hpp"
#include "qot/scenario.hpp"

namespace qot {

struct RunOptions {
  unsigned n_threads = 1;
  std::string out_dir_override;               // empty = config [output] directory
  std::vector<std::string> models_override;   // empty = config [models] names
};

struct RunSummary {
  std::vector<std::string> csv_paths;         // one per model, in model order
  std::string comparison_path;                // empty when fewer than two models
  bool has_comparison = false;
  ComparisonMetrics comparison;
  std::vector<ValidityWarning> warnings;
  bool powers_optimized = false;
  std::vector<double> launch_power_dbm;       // per band, as used for the run
};

inline RunSummary run_scenario(ScenarioConfig config, const RunOptions& options) {
  if (!options.models_override.empty()) config.models = options.models_override;
  if (!options.out_dir_override.empty()) config.output.directory = options.out_dir_override;
  config.validate();

  // Resolve evaluators up front so an unknown model fails before any work.
  // "integral" is rebuilt against the config's quadrature settings.
  std::vector<std::pair<std::string, NliEvaluator>> models;
  for (const std::string& name : config.models) {
    if (name == "integral") {
      models.emplace_back(name, make_integral_handle(config.quadrature).evaluator);
    } else {
      models.emplace_back(name, lookup_model(name));
    }
  }

  RunSummary summary;
  ChannelPlan plan = build_plan(config);
  auto partition = band_partition(config);
  LinkConfig link = build_link(config.link);

  std::size_t n_optimize = 0;
  for (const BandSpec& band : config.bands) n_optimize += band.optimize_power ? 1 : 0;
  if (n_optimize != 0 && n_optimize != config.bands.size()) {
    throw ConfigError(
        "config: mixing explicit power_dbm and 'optimize' across bands is not supported");
  }
  if (n_optimize > 0) {
    // The sweep always drives the fast model; the tuned profile is then used
    // for every requested model so their outputs stay comparable.
    auto dbm = optimize_uniform_launch_power(plan, link.spans.front(), partition,
                                             lookup_model("closed_form"), &summary.warnings);
    std::vector<double> powers(plan.size(), 0.0);
    for (std::size_t b = 0; b < partition.size(); ++b) {
      for (std::size_t idx : partition[b]) powers[idx] = dbm_to_watt(dbm[b]);
    }
    plan = plan.with_powers(powers);
    summary.powers_optimized = true;
    summary.launch_power_dbm = dbm;
  } else {
    for (const BandSpec& band : config.bands) {
      summary.launch_power_dbm.push_back(band.power_dbm);
    }
  }

  std::error_code ec;
  std::filesystem::create_directories(config.output.directory, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + config.output.directory +
                  "': " + ec.message());
  }

  std::vector<GsnrTable> tables;
  for (const auto& [name, evaluator] : models) {
    LinkReport report = simulate_link(plan, link, evaluator, &summary.warnings,
                                      options.n_threads);
    std::string path = config.output.directory + "/gsnr_" + name + ".csv";
    write_text_file(path, render_gsnr_csv(plan, report));
    summary.csv_paths.push_back(path);
    if (tables.size() < 2) tables.push_back(table_from_report(plan, report));
  }

  if (tables.size() >= 2) {
    summary.comparison = compare_tables(tables[0], tables[1]);
    summary.comparison_path = config.output.directory + "/comparison.csv";
    write_text_file(summary.comparison_path, render_comparison_csv(tables[0], tables[1]));
    summary.has_comparison = true;
  }
  return summary;
}

}  // namespace qot

#endif  // QOT_RUNNER_HPP
