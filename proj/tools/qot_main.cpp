// Command-line front end: generate bundled scenario configs, run them, and
// compare GSNR tables. Exit codes: 0 success, 1 usage or config problems,
// 2 model or numerical problems, 3 file IO problems. Progress and results go
// to stdout, validity warnings to stderr (one line each).

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qot/errors.hpp"
#include "qot/report_io.hpp"
#include "qot/runner.hpp"
#include "qot/scenario.hpp"

namespace {

std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::size_t end = comma == std::string::npos ? s.size() : comma;
    if (end > start) out.push_back(s.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

qot::ScenarioKind kind_from_name(const std::string& name) {
  if (name == "c_band_48") return qot::ScenarioKind::c_band_48;
  if (name == "cl_band_96") return qot::ScenarioKind::cl_band_96;
  return qot::ScenarioKind::random_60;
}

void print_comparison(const qot::ComparisonMetrics& m) {
  std::cout << "comparison: mae_db=" << fmt6(m.mae_db) << " max_ae_db=" << fmt6(m.max_ae_db)
            << " worst_span=" << m.worst_span_index << " worst_channel=" << m.worst_channel_index
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GSNR estimation for multi-span WDM links (integral and closed-form ISRS GN models)"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "write a bundled scenario config");
  std::string gen_kind;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("kind", gen_kind, "one of: c_band_48, cl_band_96, random_60")
      ->required()
      ->check(CLI::IsMember({"c_band_48", "cl_band_96", "random_60"}));
  gen->add_option("--seed", gen_seed, "seed for the random loadout (default 0)");
  gen->add_option("-o,--output", gen_out, "config file to write (default: stdout)");

  auto* run = app.add_subcommand("run", "simulate a scenario config and write GSNR CSVs");
  std::string run_config;
  std::string run_models;
  std::string run_out_dir;
  unsigned run_threads = 1;
  int run_zeta = 0;
  int run_fgrid = 0;
  double run_rel_tol = 0.0;
  std::string run_strategy;
  run->add_option("config", run_config, "scenario config file")->required();
  run->add_option("--models", run_models, "comma-separated models (overrides [models] names)");
  run->add_option("--out-dir", run_out_dir, "output directory (overrides [output] directory)");
  run->add_option("--threads", run_threads, "worker threads for the per-channel evaluation")
      ->check(CLI::Range(1u, 256u));
  run->add_option("--zeta-points", run_zeta, "override [quadrature] zeta_points");
  run->add_option("--f-grid-points", run_fgrid, "override [quadrature] f_grid_points");
  run->add_option("--grid-strategy", run_strategy, "override [quadrature] grid_strategy")
      ->check(CLI::IsMember({"uniform", "hyperbolic_refined"}));
  run->add_option("--rel-tol", run_rel_tol, "override [quadrature] rel_tol");

  auto* cmp = app.add_subcommand("compare", "compare two GSNR CSVs channel by channel");
  std::string cmp_a, cmp_b, cmp_out;
  cmp->add_option("a", cmp_a, "first GSNR CSV")->required();
  cmp->add_option("b", cmp_b, "second GSNR CSV")->required();
  cmp->add_option("-o,--output", cmp_out, "comparison CSV to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      std::string text = qot::serialize_config(qot::generate_scenario(kind_from_name(gen_kind),
                                                                      gen_seed));
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        qot::write_text_file(gen_out, text);
        std::cout << "wrote " << gen_out << "\n";
      }
      return 0;
    }

    if (run->parsed()) {
      qot::ScenarioConfig config = qot::parse_config(qot::read_text_file(run_config));
      if (run->count("--zeta-points") > 0) config.quadrature.zeta_points = run_zeta;
      if (run->count("--f-grid-points") > 0) config.quadrature.f_grid_points = run_fgrid;
      if (run->count("--rel-tol") > 0) config.quadrature.rel_tol = run_rel_tol;
      if (run->count("--grid-strategy") > 0) {
        config.quadrature.grid_strategy = run_strategy == "uniform"
                                              ? qot::GridStrategy::uniform
                                              : qot::GridStrategy::hyperbolic_refined;
      }
      qot::RunOptions options;
      options.n_threads = run_threads;
      options.out_dir_override = run_out_dir;
      options.models_override = split_commas(run_models);

      qot::RunSummary summary = qot::run_scenario(config, options);
      for (const qot::ValidityWarning& w : summary.warnings) {
        std::cerr << "warning: " << w.code << ": " << w.message << "\n";
      }
      for (const std::string& path : summary.csv_paths) {
        std::cout << "wrote " << path << "\n";
      }
      if (summary.has_comparison) {
        std::cout << "wrote " << summary.comparison_path << "\n";
      }
      for (std::size_t b = 0; b < summary.launch_power_dbm.size(); ++b) {
        std::string label = b < config.bands.size() && !config.bands[b].label.empty()
                                ? config.bands[b].label
                                : "band " + std::to_string(b + 1);
        std::cout << "launch_power_dbm[" << label << "] = " << fmt6(summary.launch_power_dbm[b])
                  << (summary.powers_optimized ? " (optimized)" : " (configured)") << "\n";
      }
      if (summary.has_comparison) print_comparison(summary.comparison);
      return 0;
    }

    // compare
    qot::GsnrTable a = qot::parse_gsnr_csv(qot::read_text_file(cmp_a));
    qot::GsnrTable b = qot::parse_gsnr_csv(qot::read_text_file(cmp_b));
    qot::ComparisonMetrics metrics = qot::compare_tables(a, b);
    if (!cmp_out.empty()) {
      qot::write_text_file(cmp_out, qot::render_comparison_csv(a, b));
      std::cout << "wrote " << cmp_out << "\n";
    }
    print_comparison(metrics);
    return 0;
  } catch (const qot::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const qot::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qot::ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qot::QuadratureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qot::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
