#ifndef VLOC_PERTURBATION_HPP
#define VLOC_PERTURBATION_HPP

#include <complex>

#include "vloc/params.hpp"

namespace vloc {

// Closed-form coherences of the undriven-probe problem with the populations
// frozen at the ground-state initial condition.  These are reference
// expressions, not the self-consistent stationary state; the audit report
// quantifies the difference.
struct ZeroOrderCoherences {
  std::complex<double> rho12_0;
  std::complex<double> rho13_0;
  std::complex<double> rho23_0;
};

// The eleven polynomial coefficients a0..a10 entering the closed-form
// first-order coherence.  Finite for finite inputs.
struct ClosedFormCoefficients {
  std::complex<double> a[11];
};

struct PerturbativeComparison {
  std::complex<double> analytic;  // closed-form value
  std::complex<double> numeric;   // omega_p * r1 from the linear-response solve
  double abs_error;
  double rel_error;  // abs_error / max(|numeric|, 1e-300)
};

// Evaluates the closed-form zero-order coherences at (p, delta_p, delta_c,
// omega_c); omega_p does not enter.  Throws DenominatorUnderflow within
// 1e-12 of a resonance pole of the expressions.
ZeroOrderCoherences zero_order_coherences(const SystemParams& params);

ClosedFormCoefficients closed_form_coefficients(const SystemParams& params);

// Closed-form first-order coherence rho13, assembled from the zero-order
// coherences and the coefficient table.
std::complex<double> first_order_rho13_analytic(const SystemParams& params);

// r1 = d rho13 / d omega_p at omega_p = 0, computed exactly by splitting the
// generator L = L0 + omega_p L1, solving L0(rho0) = 0 with unit trace and
// then L0(rho1) = -L1(rho0) with zero trace.  Independent of params.omega_p.
std::complex<double> first_order_rho13_numeric(const SystemParams& params);

PerturbativeComparison compare_analytic_numeric(const SystemParams& params);

}  // namespace vloc

#endif
