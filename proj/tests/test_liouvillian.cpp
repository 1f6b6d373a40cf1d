#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"
#include "vloc/liouvillian.hpp"

using namespace vloc;
using vloc_test::reference_rhs;

TEST_CASE("ground state is dark with all fields off") {
  SystemParams p;
  p.omega_p = 0.0;
  p.omega_c = 0.0;
  p.theta = 0.5 * M_PI;
  const Superoperator L = build_liouvillian(p);
  const Matrix3c out = L.apply(DensityMatrix::ground().rho);
  CHECK(out.cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("all 81 entries match the term-by-term reference") {
  SystemParams p;  // detuning-free preset base at a fixed coupling
  p.omega_p = 0.01;
  p.omega_c = 10.0;
  p.delta_p = 0.0;
  p.delta_c = 0.0;
  p.theta = 0.5 * M_PI;
  const Superoperator L = build_liouvillian(p);

  Matrix9c oracle;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      Matrix3c basis = Matrix3c::Zero();
      basis(k, l) = 1.0;
      const Vector9c col = flatten(reference_rhs(p, basis));
      oracle.col(3 * k + l) = col;
    }
  }
  CHECK((L.m - oracle).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("entries also match at a generic parameter point") {
  SystemParams p;
  p.gamma1 = 0.7;
  p.gamma2 = 1.3;
  p.omega_p = 0.05;
  p.omega_c = -7.5;
  p.delta_p = 13.0;
  p.delta_c = -4.0;
  p.theta = 1.1;
  const Superoperator L = build_liouvillian(p);
  Matrix9c oracle;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      Matrix3c basis = Matrix3c::Zero();
      basis(k, l) = 1.0;
      oracle.col(3 * k + l) = flatten(reference_rhs(p, basis));
    }
  CHECK((L.m - oracle).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("L is trace- and Hermiticity-preserving on random inputs") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 1000; ++trial) {
    const SystemParams p = vloc_test::random_params(rng);
    const Superoperator L = build_liouvillian(p);
    CHECK(L.trace_violation() <= 1e-12);

    const Matrix3c rho = vloc_test::random_hermitian_unit_trace(rng);
    const Matrix3c out = L.apply(rho);
    CHECK(std::abs(out.trace()) <= 1e-12);
    CHECK((out - out.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("invalid parameters are rejected") {
  SystemParams p;
  p.gamma1 = 0.0;
  CHECK_THROWS_AS(build_liouvillian(p), RangeError);
  p.gamma1 = 1.0;
  p.omega_p = -0.01;
  CHECK_THROWS_AS(build_liouvillian(p), RangeError);
}
