#ifndef VLOC_STEADY_STATE_HPP
#define VLOC_STEADY_STATE_HPP

#include "vloc/density_matrix.hpp"
#include "vloc/liouvillian.hpp"

namespace vloc {

struct SteadyStateSolution {
  DensityMatrix rho;
  double residual = 0.0;   // ||L(rho)||_inf over the 9 entries
  int nullspace_dim = 1;
};

// Stationary rho with unit trace, by dense LU with the rho11 row replaced by
// the trace constraint.  Throws DegenerateSteadyState when the nullspace of L
// has dimension > 1 and SingularSystem when the constrained solve fails.
SteadyStateSolution steady_state(const Superoperator& liouvillian);

// ||L(rho)||_inf.
double residual(const Superoperator& liouvillian, const DensityMatrix& rho);

}  // namespace vloc

#endif
