#ifndef VLOC_TIME_EVOLUTION_HPP
#define VLOC_TIME_EVOLUTION_HPP

#include "vloc/density_matrix.hpp"
#include "vloc/liouvillian.hpp"

namespace vloc {

// Step that resolves the fastest oscillation set by the largest parameter.
inline double default_dt(const SystemParams& params) {
  double scale = std::max({1.0, std::abs(params.delta_p), std::abs(params.delta_c),
                           std::abs(params.omega_c)});
  return 1e-3 / scale;
}

// Fixed-step classical RK4 integration of d rho/dt = L(rho) from rho0 to
// t_final.  Trace and Hermiticity are preserved to roundoff; a trace drift
// above 1e-8 aborts with StepTooLarge.  The number of steps is
// ceil(t_final / dt); the step actually used divides t_final evenly.
DensityMatrix time_evolve(const SystemParams& params, const DensityMatrix& rho0,
                          double t_final, double dt);

}  // namespace vloc

#endif
