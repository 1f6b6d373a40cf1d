#include "vloc/presets.hpp"

#include <cmath>

namespace vloc {

namespace {

FigurePreset make(const std::string& name, double delta_p, double delta_c,
                  double theta) {
  FigurePreset f;
  f.name = name;
  f.base.gamma1 = 1.0;
  f.base.gamma2 = 1.0;
  f.base.omega_p = 0.01;
  f.base.delta_p = delta_p;
  f.base.delta_c = delta_c;
  f.base.theta = theta;
  f.wave.omega0 = 10.0;
  f.wave.kappa1 = 1.0;
  f.wave.kappa2 = 1.0;
  f.wave.delta_phase = 0.0;
  f.wave.eta_phase = 0.0;
  return f;
}

}  // namespace

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = {
      make("fig2a", 0.0, 0.0, 0.5 * M_PI),
      make("fig2b", 20.0, 0.0, 0.5 * M_PI),
      make("fig2c", 30.0, 0.0, 0.5 * M_PI),
      make("fig2d", 40.0, 0.0, 0.5 * M_PI),
      make("fig4a", 20.0, 8.0, 0.5 * M_PI),
      make("fig4b", 20.0, 12.0, 0.5 * M_PI),
      make("fig4c", 20.0, 15.0, 0.5 * M_PI),
      make("fig4d", 20.0, 20.0, 0.5 * M_PI),
      make("fig6a", 30.0, 0.0, M_PI / 1.99),
      make("fig6b", 30.0, 0.0, M_PI / 1.9),
      make("fig6c", 30.0, 0.0, M_PI / 1.8),
      make("fig6d", 30.0, 0.0, M_PI / 1.7),
  };
  return presets;
}

std::optional<FigurePreset> find_preset(const std::string& name) {
  for (const auto& p : figure_presets())
    if (p.name == name) return p;
  return std::nullopt;
}

}  // namespace vloc
