#ifndef VLOC_PARAMS_HPP
#define VLOC_PARAMS_HPP

#include <cmath>

#include "vloc/errors.hpp"

namespace vloc {

// All scalar physics inputs, in units of the scaling rate gamma.
//
// delta_p / delta_c store the detunings (atomic transition frequency minus
// drive frequency) directly; bare frequencies never appear.  omega_c is the
// local, signed value of the standing-wave coupling; omega_p is the probe
// amplitude and is kept non-negative.
struct SystemParams {
  double gamma1 = 1.0;  // half decay rate of |2>
  double gamma2 = 1.0;  // half decay rate of |3>
  double omega_p = 0.01;
  double omega_c = 0.0;
  double delta_p = 0.0;
  double delta_c = 0.0;
  double theta = 0.5 * M_PI;  // angle between the two dipole moments [rad]

  // p = cos(theta), the vacuum-interference alignment.  Derived, never stored.
  double p() const { return std::cos(theta); }

  void validate() const {
    if (!(gamma1 > 0.0) || !(gamma2 > 0.0))
      throw RangeError("gamma1 and gamma2 must be positive");
    if (omega_p < 0.0) throw RangeError("omega_p must be non-negative");
    if (!std::isfinite(omega_p) || !std::isfinite(omega_c) ||
        !std::isfinite(delta_p) || !std::isfinite(delta_c) ||
        !std::isfinite(theta) || !std::isfinite(gamma1) || !std::isfinite(gamma2))
      throw RangeError("parameters must be finite");
  }
};

}  // namespace vloc

#endif
