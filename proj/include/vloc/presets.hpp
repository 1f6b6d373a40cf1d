#ifndef VLOC_PRESETS_HPP
#define VLOC_PRESETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "vloc/params.hpp"
#include "vloc/standing_wave.hpp"

namespace vloc {

// One figure preset: probe/coupling detunings and dipole angle on top of the
// common base (kappa1 = kappa2 = 2 pi/lambda, omega0 = 10, omega_p = 0.01,
// delta = eta = 0).
struct FigurePreset {
  std::string name;
  SystemParams base;      // omega_c unused (set per grid node)
  StandingWaveSpec wave;
};

// The twelve shipped presets: fig2{a-d} sweep delta_p at delta_c = 0,
// fig4{a-d} sweep delta_c at delta_p = 20, fig6{a-d} sweep theta at
// delta_c = 0, delta_p = 30.
const std::vector<FigurePreset>& figure_presets();

std::optional<FigurePreset> find_preset(const std::string& name);

}  // namespace vloc

#endif
