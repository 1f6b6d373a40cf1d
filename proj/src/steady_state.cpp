#include "vloc/steady_state.hpp"

namespace vloc {

namespace {
constexpr double kNullspaceRelTol = 1e-9;  // relative to the largest singular value
}

SteadyStateSolution steady_state(const Superoperator& liouvillian) {
  // Nullspace dimension of the unconstrained generator.
  Eigen::JacobiSVD<Matrix9c> svd(liouvillian.m);
  const auto& sigma = svd.singularValues();
  const double cutoff = kNullspaceRelTol * sigma(0);
  int null_dim = 0;
  for (int k = 0; k < 9; ++k)
    if (sigma(k) < cutoff) ++null_dim;
  if (null_dim > 1)
    throw DegenerateSteadyState("stationary state is not unique (nullspace dimension " +
                                std::to_string(null_dim) + ")");

  // Replace the redundant rho11 row by the trace constraint.
  Matrix9c a = liouvillian.m;
  a.row(I11).setZero();
  a(I11, I11) = 1.0;
  a(I11, I22) = 1.0;
  a(I11, I33) = 1.0;
  Vector9c b = Vector9c::Zero();
  b(I11) = 1.0;

  Eigen::FullPivLU<Matrix9c> lu(a);
  if (!lu.isInvertible())
    throw SingularSystem("trace-constrained linear system is singular");
  Vector9c v = lu.solve(b);
  // One refinement pass keeps the residual at roundoff level.
  v += lu.solve(b - a * v);

  SteadyStateSolution out;
  out.rho.rho = unflatten(v);
  out.residual = liouvillian.apply(v).cwiseAbs().maxCoeff();
  out.nullspace_dim = null_dim == 0 ? 1 : null_dim;
  return out;
}

double residual(const Superoperator& liouvillian, const DensityMatrix& rho) {
  return liouvillian.apply(flatten(rho.rho)).cwiseAbs().maxCoeff();
}

}  // namespace vloc
