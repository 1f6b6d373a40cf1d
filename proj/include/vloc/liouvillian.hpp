#ifndef VLOC_LIOUVILLIAN_HPP
#define VLOC_LIOUVILLIAN_HPP

#include <Eigen/Dense>

#include "vloc/density_matrix.hpp"
#include "vloc/params.hpp"

namespace vloc {

using Matrix9c = Eigen::Matrix<Complex, 9, 9>;

// Flattened-rho indices.  Levels are {1,2,3}, ground state first.
enum RhoIndex {
  I11 = 0, I12 = 1, I13 = 2,
  I21 = 3, I22 = 4, I23 = 5,
  I31 = 6, I32 = 7, I33 = 8,
};

// Generator of the master equation, acting on the row-major flattening of rho.
//
// Guaranteed structure: rows I11 + I22 + I33 sum to zero (trace conservation)
// and L maps Hermitian matrices to Hermitian matrices.
struct Superoperator {
  Matrix9c m = Matrix9c::Zero();

  Vector9c apply(const Vector9c& v) const { return m * v; }
  Matrix3c apply(const Matrix3c& rho) const { return unflatten(m * flatten(rho)); }

  // max |row(I11) + row(I22) + row(I33)|; zero up to roundoff.
  double trace_violation() const {
    return (m.row(I11) + m.row(I22) + m.row(I33)).cwiseAbs().maxCoeff();
  }
};

// Assembles the equations of motion of the V scheme:
//
//   d rho22 = -2 g1 rho22 + i Wc (rho12 - rho21) - q (rho23 + rho32)
//   d rho33 = -2 g2 rho33 + i Wp (rho13 - rho31) - q (rho23 + rho32)
//   d rho12 = -(g1 + i Dc) rho12 - q rho13 + i Wc (rho22 - rho11) + i Wp rho32
//   d rho13 = -q rho12 - (g2 + i Dp) rho13 + i Wc rho23 + i Wp (rho33 - rho11)
//   d rho23 = i Wc rho13 - i Wp rho21 - (g1 + g2 + i(Dp - Dc)) rho23
//             - q (rho22 + rho33)
//
// with q = p sqrt(g1 g2), plus the adjoint rows for rho21, rho31, rho32 and
// the unique trace-preserving closure for rho11.
Superoperator build_liouvillian(const SystemParams& params);

}  // namespace vloc

#endif
