#ifndef VLOC_DENSITY_MATRIX_HPP
#define VLOC_DENSITY_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>

namespace vloc {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;
using Vector9c = Eigen::Matrix<Complex, 9, 1>;

// The 3x3 state rho over levels {1,2,3}; index 0 is the ground state |1>.
struct DensityMatrix {
  Matrix3c rho = Matrix3c::Zero();

  static DensityMatrix ground() {
    DensityMatrix d;
    d.rho(0, 0) = 1.0;
    return d;
  }

  double trace_error() const { return std::abs(rho.trace() - Complex(1.0)); }

  double hermiticity_error() const {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  }

  // Smallest eigenvalue of the Hermitian part; >= -1e-9 for a physical state.
  double min_eigenvalue() const {
    Matrix3c h = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix3c> es(h);
    return es.eigenvalues().minCoeff();
  }
};

// Row-major flattening of rho: element (i,j) sits at 3*i + j.
inline Vector9c flatten(const Matrix3c& rho) {
  Vector9c v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v(3 * i + j) = rho(i, j);
  return v;
}

inline Matrix3c unflatten(const Vector9c& v) {
  Matrix3c rho;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rho(i, j) = v(3 * i + j);
  return rho;
}

}  // namespace vloc

#endif
