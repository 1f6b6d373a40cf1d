#ifndef VLOC_STANDING_WAVE_HPP
#define VLOC_STANDING_WAVE_HPP

#include <cmath>

#include "vloc/errors.hpp"

namespace vloc {

// Two orthogonal standing waves summed.  Positions are in wavelength units;
// wave vectors in units of 2*pi/lambda, so kappa = 1 gives phase 2*pi*x.
struct StandingWaveSpec {
  double omega0 = 10.0;   // peak Rabi amplitude per wave
  double kappa1 = 1.0;
  double kappa2 = 1.0;
  double delta_phase = 0.0;  // phase shift of the x wave [rad]
  double eta_phase = 0.0;    // phase shift of the y wave [rad]

  void validate() const {
    if (omega0 < 0.0) throw RangeError("omega0 must be non-negative");
    if (!(kappa1 > 0.0) || !(kappa2 > 0.0))
      throw RangeError("kappa1 and kappa2 must be positive");
  }
};

// Omega0 * [sin(2 pi kappa1 x + delta) + sin(2 pi kappa2 y + eta)], signed.
inline double standing_wave_rabi(double x, double y, const StandingWaveSpec& spec) {
  const double two_pi = 2.0 * M_PI;
  return spec.omega0 * (std::sin(two_pi * spec.kappa1 * x + spec.delta_phase) +
                        std::sin(two_pi * spec.kappa2 * y + spec.eta_phase));
}

}  // namespace vloc

#endif
