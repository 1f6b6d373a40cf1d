// Command-line front end: figure presets, config files, CSV/heatmap/peaks
// export and the closed-form audit report.
//
// Exit codes: 0 success, 1 configuration error, 2 solver error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vloc/config.hpp"
#include "vloc/export.hpp"
#include "vloc/presets.hpp"
#include "vloc/standing_wave.hpp"

namespace fs = std::filesystem;

namespace {

struct RunOptions {
  std::string preset;
  std::string config_path;
  std::string out_dir = ".";
  int grid_n = 0;          // 0 = keep configured
  std::string domain;      // "", "half" or "full"
  std::string emit;        // comma list, empty = keep configured
  int threads = 1;
};

vloc::RunConfig resolve_config(const RunOptions& opt) {
  std::string text;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw vloc::ConfigError("cannot open config file " + opt.config_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  // Command-line flags override the file; append them as config lines so the
  // resolution order (preset first, then fields) is shared with file parsing.
  std::ostringstream extra;
  extra << text;
  if (!opt.preset.empty()) extra << "\npreset = " << opt.preset << "\n";
  if (opt.grid_n > 0) extra << "nx = " << opt.grid_n << "\nny = " << opt.grid_n << "\n";
  if (opt.domain == "half")
    extra << "x_min = -0.25\nx_max = 0.25\ny_min = -0.25\ny_max = 0.25\n";
  else if (opt.domain == "full")
    extra << "x_min = -0.5\nx_max = 0.5\ny_min = -0.5\ny_max = 0.5\n";
  else if (!opt.domain.empty())
    throw vloc::ConfigError("--domain must be `half` or `full`");
  if (!opt.emit.empty()) extra << "emit = " << opt.emit << "\n";
  return vloc::parse_config(extra.str());
}

std::vector<vloc::SystemParams> audit_points(const vloc::RunConfig& cfg, int samples) {
  // Sample the standing wave on a samples x samples sub-grid of the domain.
  std::vector<vloc::SystemParams> points;
  for (int j = 0; j < samples; ++j) {
    for (int i = 0; i < samples; ++i) {
      const double m = samples - 1;
      const double x = (cfg.grid.x_min * (m - i) + cfg.grid.x_max * i) / m;
      const double y = (cfg.grid.y_min * (m - j) + cfg.grid.y_max * j) / m;
      vloc::SystemParams p = cfg.base;
      p.omega_c = vloc::standing_wave_rabi(x, y, cfg.wave);
      points.push_back(p);
    }
  }
  return points;
}

int run_command(const RunOptions& opt) {
  const vloc::RunConfig cfg = resolve_config(opt);
  const std::string stem = cfg.preset.empty() ? "run" : cfg.preset;
  fs::create_directories(opt.out_dir);
  const fs::path out(opt.out_dir);

  {
    std::ofstream echo(out / (stem + ".cfg"));
    echo << vloc::render_config(cfg);
  }
  std::cout << vloc::render_config(cfg);

  const vloc::LocalizationMap map =
      vloc::scan_map(cfg.base, cfg.wave, cfg.grid, opt.threads);

  for (const auto& kind : cfg.outputs) {
    if (kind == "csv") {
      std::ofstream f(out / (stem + ".csv"), std::ios::binary);
      vloc::export_csv(map, f);
    } else if (kind == "heatmap") {
      std::ofstream f(out / (stem + ".ppm"), std::ios::binary);
      vloc::export_heatmap(map, f);
    } else if (kind == "peaks") {
      double max_abs = 0.0;
      for (double v : map.values) max_abs = std::max(max_abs, std::abs(v));
      const auto peaks = vloc::find_extrema(map, 0.05 * max_abs);
      const auto quadrants = vloc::quadrant_distribution(map);
      std::ofstream f(out / (stem + "_peaks.txt"));
      vloc::export_peaks(map, peaks, quadrants, f);
    } else if (kind == "audit") {
      std::ofstream f(out / (stem + "_audit.txt"));
      vloc::export_audit(audit_points(cfg, 5), f);
    }
  }
  return 0;
}

int audit_command(const std::string& preset, int samples, const std::string& out_dir) {
  const auto p = vloc::find_preset(preset);
  if (!p) throw vloc::ConfigError("unknown preset '" + preset + "'");
  vloc::RunConfig cfg;
  cfg.preset = preset;
  cfg.base = p->base;
  cfg.wave = p->wave;
  if (samples < 2) throw vloc::ConfigError("--samples must be at least 2");
  fs::create_directories(out_dir);
  std::ofstream f(fs::path(out_dir) / (preset + "_audit.txt"));
  vloc::export_audit(audit_points(cfg, samples), f);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"V-scheme probe-absorption localization maps"};
  app.require_subcommand(1);

  RunOptions opt;
  auto* run = app.add_subcommand("run", "scan a map and write the requested outputs");
  run->add_option("--preset", opt.preset, "figure preset name (e.g. fig2a)");
  run->add_option("--config", opt.config_path, "key = value configuration file");
  run->add_option("--out-dir", opt.out_dir, "output directory");
  run->add_option("--grid", opt.grid_n, "samples per axis (odd, >= 3)");
  run->add_option("--domain", opt.domain, "half ([-1/4,1/4]^2) or full ([-1/2,1/2]^2)");
  run->add_option("--emit", opt.emit, "comma list of csv,heatmap,peaks,audit");
  run->add_option("--threads", opt.threads, "scan worker threads");

  std::string audit_preset;
  int audit_samples = 5;
  std::string audit_out = ".";
  auto* audit = app.add_subcommand("audit", "closed-form vs numeric audit report");
  audit->add_option("--preset", audit_preset, "figure preset name")->required();
  audit->add_option("--samples", audit_samples, "sub-grid samples per axis");
  audit->add_option("--out-dir", audit_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // any command-line problem is a configuration error
  }

  try {
    if (run->parsed()) return run_command(opt);
    return audit_command(audit_preset, audit_samples, audit_out);
  } catch (const vloc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const vloc::Error& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return 2;
  }
}
