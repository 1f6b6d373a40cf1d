#include "vloc/time_evolution.hpp"

#include <cmath>

namespace vloc {

DensityMatrix time_evolve(const SystemParams& params, const DensityMatrix& rho0,
                          double t_final, double dt) {
  if (!(dt > 0.0)) throw RangeError("dt must be positive");
  if (t_final < 0.0) throw RangeError("t_final must be non-negative");
  if (t_final == 0.0) return rho0;

  const Superoperator L = build_liouvillian(params);
  const long n_steps = std::max(1L, static_cast<long>(std::ceil(t_final / dt - 1e-12)));
  const double h = t_final / static_cast<double>(n_steps);

  Vector9c v = flatten(rho0.rho);
  Vector9c k1, k2, k3, k4;
  for (long step = 0; step < n_steps; ++step) {
    k1 = L.m * v;
    k2 = L.m * (v + (0.5 * h) * k1);
    k3 = L.m * (v + (0.5 * h) * k2);
    k4 = L.m * (v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double drift = std::abs((v(I11) + v(I22) + v(I33)) - Complex(1.0));
    if (!(drift <= 1e-8))  // also catches NaN from an unstable step
      throw StepTooLarge("trace drift " + std::to_string(drift) + " at t = " +
                         std::to_string((step + 1) * h) + "; decrease dt");
  }

  DensityMatrix out;
  out.rho = unflatten(v);
  return out;
}

}  // namespace vloc
