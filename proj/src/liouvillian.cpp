#include "vloc/liouvillian.hpp"

#include <cmath>

namespace vloc {

Superoperator build_liouvillian(const SystemParams& params) {
  params.validate();

  const double g1 = params.gamma1;
  const double g2 = params.gamma2;
  const double wp = params.omega_p;
  const double wc = params.omega_c;
  const double dp = params.delta_p;
  const double dc = params.delta_c;
  const double q = params.p() * std::sqrt(g1 * g2);
  const Complex i(0.0, 1.0);

  Superoperator L;
  Matrix9c& m = L.m;

  // rho11: closure, -(d rho22 + d rho33) expanded in matrix elements.
  m(I11, I12) = -i * wc;
  m(I11, I21) = i * wc;
  m(I11, I13) = -i * wp;
  m(I11, I31) = i * wp;
  m(I11, I22) = 2.0 * g1;
  m(I11, I33) = 2.0 * g2;
  m(I11, I23) = 2.0 * q;
  m(I11, I32) = 2.0 * q;

  // rho12
  m(I12, I11) = -i * wc;
  m(I12, I12) = -(g1 + i * dc);
  m(I12, I13) = -q;
  m(I12, I22) = i * wc;
  m(I12, I32) = i * wp;

  // rho13
  m(I13, I11) = -i * wp;
  m(I13, I12) = -q;
  m(I13, I13) = -(g2 + i * dp);
  m(I13, I23) = i * wc;
  m(I13, I33) = i * wp;

  // rho21 = conj(rho12 equation)
  m(I21, I11) = i * wc;
  m(I21, I21) = -(g1 - i * dc);
  m(I21, I31) = -q;
  m(I21, I22) = -i * wc;
  m(I21, I23) = -i * wp;

  // rho22
  m(I22, I12) = i * wc;
  m(I22, I21) = -i * wc;
  m(I22, I22) = -2.0 * g1;
  m(I22, I23) = -q;
  m(I22, I32) = -q;

  // rho23
  m(I23, I13) = i * wc;
  m(I23, I21) = -i * wp;
  m(I23, I22) = -q;
  m(I23, I23) = -(g1 + g2) - i * (dp - dc);
  m(I23, I33) = -q;

  // rho31 = conj(rho13 equation)
  m(I31, I11) = i * wp;
  m(I31, I21) = -q;
  m(I31, I31) = -(g2 - i * dp);
  m(I31, I32) = -i * wc;
  m(I31, I33) = -i * wp;

  // rho32 = conj(rho23 equation)
  m(I32, I12) = i * wp;
  m(I32, I22) = -q;
  m(I32, I31) = -i * wc;
  m(I32, I32) = -(g1 + g2) + i * (dp - dc);
  m(I32, I33) = -q;

  // rho33; the decay rate of |3> is g2.
  m(I33, I13) = i * wp;
  m(I33, I31) = -i * wp;
  m(I33, I33) = -2.0 * g2;
  m(I33, I23) = -q;
  m(I33, I32) = -q;

  return L;
}

}  // namespace vloc
