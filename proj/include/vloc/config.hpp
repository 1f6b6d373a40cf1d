#ifndef VLOC_CONFIG_HPP
#define VLOC_CONFIG_HPP

#include <string>
#include <vector>

#include "vloc/params.hpp"
#include "vloc/scan.hpp"
#include "vloc/standing_wave.hpp"

namespace vloc {

// Resolved run description.  A preset, when named, is applied first and
// explicit keys override its fields afterwards.
struct RunConfig {
  SystemParams base;     // omega_c is set per grid node, not here
  StandingWaveSpec wave;
  GridSpec grid;
  std::vector<std::string> outputs = {"csv", "heatmap", "peaks"};
  std::string preset;    // empty when none was named

  void validate() const;
};

// Line-oriented `key = value` text with `#` comments.  Numeric values accept
// a trailing `pi` (e.g. `theta = 0.5883pi`).  Unknown keys are errors.
// Recognized keys: preset, gamma1, gamma2, omega_p, delta_p, delta_c, theta,
// omega0, kappa1, kappa2, delta_phase, eta_phase, x_min, x_max, y_min, y_max,
// nx, ny, emit.
RunConfig parse_config(const std::string& text);

// Echo of the resolved configuration; itself parseable and reproducing the
// run (values rendered with full precision).
std::string render_config(const RunConfig& config);

}  // namespace vloc

#endif
