#include "vloc/perturbation.hpp"

#include <cmath>

#include "vloc/liouvillian.hpp"
#include "vloc/steady_state.hpp"

namespace vloc {

namespace {

using C = std::complex<double>;
constexpr C i_(0.0, 1.0);

// Common denominator of the zero-order coherences.
C zero_order_denominator(double p, double dp, double dc, double wc) {
  return (2.0 * i_ + dc - dp) * (p * p + (dp - i_) * (dc - i_)) +
         (dc - i_) * wc * wc;
}

}  // namespace

ZeroOrderCoherences zero_order_coherences(const SystemParams& params) {
  params.validate();
  const double p = params.p();
  const double dp = params.delta_p;
  const double dc = params.delta_c;
  const double wc = params.omega_c;

  // The expressions are written in gamma-scaled units with gamma1 = gamma2;
  // the gammas do not appear explicitly.
  const C den = zero_order_denominator(p, dp, dc, wc);
  if (std::abs(den) < 1e-12)
    throw DenominatorUnderflow("zero-order denominator within 1e-12 of a pole");

  ZeroOrderCoherences z;
  z.rho12_0 = ((dp - i_) * (-2.0 * i_ - dc + dp) * wc - wc * wc * wc) / den;
  // rho13's denominator is i * den: i[(2i+dc-dp)(p^2+(dp-i)(dc-i))] expands to
  // (2i+dc-dp)[i p^2 - i + dc(1 + i dp) + dp] and i(dc-i) = 1 + i dc.
  z.rho13_0 = p * wc * (2.0 * i_ + dc - dp) / (i_ * den);
  z.rho23_0 = i_ * p * wc * wc / den;
  return z;
}

ClosedFormCoefficients closed_form_coefficients(const SystemParams& params) {
  params.validate();
  const double p = params.p();
  const double dp = params.delta_p;
  const double dc = params.delta_c;
  const double wc = params.omega_c;
  const double wp = params.omega_p;
  const double p2 = p * p;
  const double p3 = p2 * p;
  const double p4 = p2 * p2;
  const double p5 = p4 * p;
  const double u = wc * wc;  // wc^2

  ClosedFormCoefficients out;
  C* a = out.a;

  a[0] = p4 * (8.0 * i_ + dc - 3.0 * dp) +
         u * (5.0 * i_ + dc - 2.0 * dp) * (u + (i_ + dp) * (-2.0 * i_ + dc - dp)) +
         p2 * ((i_ + dp) * (i_ + dc) * (8.0 * i_ + dc - 3.0 * dp) +
               2.0 * u * (5.0 * i_ + dc - 4.0 * dp));

  a[1] = 2.0 * i_ * p2 *
         ((8.0 * i_ + dc - 3.0 * dp) * (p2 + (i_ + dp) * (i_ + dc)) +
          u * (4.0 * i_ + dc - 3.0 * dp));

  a[2] = 2.0 * p4 -
         (u + (i_ + dp) * (-2.0 * i_ + dc - dp)) * (u + (i_ + dc) * (-3.0 * i_ + dp)) +
         p2 * (4.0 + u + dp * (i_ + dp) + dc * (5.0 * i_ + dp));

  a[3] = -i_ * p4 * (-4.0 * i_ + dc - 3.0 * dp) +
         2.0 * (u + (i_ + dp) * (-2.0 * i_ + dc - dp)) * (1.0 + dc * dc + 2.0 * u) -
         i_ * p2 *
             (dp * (5.0 - 3.0 * i_ * dp) + dc * dc * (3.0 * i_ + dp) +
              u * (2.0 * i_ - 3.0 * dp) + dc * (9.0 - dp * (8.0 * i_ + 3.0 * dp) + u));

  a[4] = 8.0 * i_ * p4 +
         p2 * (-2.0 * i_ *
                   (8.0 + dc * (-4.0 * i_ + dc) - 4.0 * i_ * dp - 6.0 * dc * dp +
                    dp * dp) +
               u * (6.0 * i_ + dc - 5.0 * dp)) +
         (u + (i_ + dp) * (-2.0 * i_ + dc - dp)) *
             (2.0 * (1.0 - i_ * dc) * (2.0 * i_ + dc - dp) +
              u * (3.0 * i_ + dc - 2.0 * dp));

  a[5] = p4 * (4.0 * i_ + dc - 3.0 * dp) +
         (u + (i_ + dp) * (-2.0 * i_ + dc - dp)) *
             (2.0 * (i_ + dc) * (3.0 + i_ * dp) + u * (7.0 * i_ + dc - 2.0 * dp)) +
         p2 * (dc * dc * (i_ + dp) + dp * (-3.0 - 5.0 * i_ * dp - 8.0 * u) +
               8.0 * i_ * (-2.0 + u) + dc * (1.0 + (4.0 * i_ - 3.0 * dp) * dp + 2.0 * u));

  a[6] = p2 * (6.0 * i_ + dc - 5.0 * dp) +
         (5.0 * i_ + dc - 2.0 * dp) * ((-2.0 * i_ + dc - dp) * (i_ + dp) + u);

  // a7 grouping choices:
  //   - the bracket "(8 + dc ...^2" is read as 8 + dc^2, matching the
  //     identical polynomial inside the p^3 term;
  //   - (1 + dc^2 + 2 wc^2) multiplies the braced omega_p block.  Reading it
  //     as a standalone additive term leaves a probe-independent offset that
  //     breaks the wc -> 0, p -> 0 reduction to the bare two-level response.
  a[7] = -4.0 * i_ * p5 * wc +
         i_ * p3 * (8.0 + dc * dc + dp * (-4.0 * i_ + dp) - 2.0 * dc * (2.0 * i_ + 3.0 * dp)) * wc +
         p * wc * ((2.0 + i_ * dc - i_ * dp + i_ * u) * (i_ + dp)) *
             ((i_ + dc) * (2.0 * i_ + dc - dp) + u) +
         (1.0 + dc * dc + 2.0 * u) *
             ((4.0 + (dc - dp) * (dc - dp)) * (i_ + dp) + (2.0 * i_ + dc - dp) * u) * wp +
         p2 *
             ((dc - i_) *
                  (8.0 + dc * dc + dp * (dp - 4.0 * i_) - 2.0 * dc * (2.0 * i_ + 3.0 * dp)) -
              (12.0 * i_ + 5.0 * dc + (3.0 + 2.0 * i_ * dp) * dp) * u - i_ * u * u) *
             wp +
         2.0 * p4 * (-2.0 * dc + i_ * (2.0 + u)) * wp;

  a[8] = -2.0 * dc * dc * dc * dp + 6.0 * (2.0 + dp) * (2.0 + dp) -
         2.0 * dc * dp * (6.0 + dp) * (6.0 + dp) +
         dc * dc * (6.0 + 8.0 * dp) * (6.0 + 8.0 * dp) +
         2.0 * (4.0 - (dc - 4.0 * dp) * (dc + dp)) * u + u * u;

  // a9 grouping: (1 + dp^2).  The alternative (1 + dp)^2 breaks the wc -> 0
  // two-level reduction at dp != 0.
  a[9] = (4.0 + (dc - dp) * (dc - dp)) * (1.0 + dp * dp) +
         2.0 * (2.0 + (dc - dp) * dp) * u + u * u;

  a[10] = 12.0 + dc * dc - 10.0 * dc * dp + dp * dp - 4.0 * u;

  return out;
}

std::complex<double> first_order_rho13_analytic(const SystemParams& params) {
  params.validate();
  const double p = params.p();
  const double dc = params.delta_c;
  const double wc = params.omega_c;
  const double wp = params.omega_p;
  const double p2 = p * p;
  const double p4 = p2 * p2;
  const double p6 = p4 * p2;
  const double u = wc * wc;

  const ZeroOrderCoherences z = zero_order_coherences(params);
  const ClosedFormCoefficients cf = closed_form_coefficients(params);
  const C* a = cf.a;

  const C numerator =
      -4.0 * a[7] +
      wp * (-a[1] * z.rho12_0 +
            wc * (-i_ * (a[0] - a[5]) * p * std::conj(z.rho13_0) -
                  2.0 * a[2] * p * z.rho13_0 + 2.0 * a[3] * std::conj(z.rho12_0) +
                  2.0 * p * a[6] * wc * z.rho23_0) -
            2.0 * p * a[4] * std::conj(z.rho23_0));

  const C denominator =
      4.0 * (-p2 * a[8] + a[10] * p4 - 4.0 * p6 + a[9] * (1.0 + dc * dc + 2.0 * u));

  if (std::abs(denominator) < 1e-12)
    throw DenominatorUnderflow("first-order denominator within 1e-12 of a pole");
  return numerator / denominator;
}

std::complex<double> first_order_rho13_numeric(const SystemParams& params) {
  params.validate();

  // L is affine in omega_p: L(wp) = L0 + wp * L1.
  SystemParams base = params;
  base.omega_p = 0.0;
  const Superoperator L0 = build_liouvillian(base);
  SystemParams probe = params;
  probe.omega_p = 1.0;
  const Matrix9c L1 = build_liouvillian(probe).m - L0.m;

  const SteadyStateSolution zero = steady_state(L0);  // DegenerateSteadyState propagates
  const Vector9c rhs = -(L1 * flatten(zero.rho.rho));

  Matrix9c a = L0.m;
  a.row(I11).setZero();
  a(I11, I11) = 1.0;
  a(I11, I22) = 1.0;
  a(I11, I33) = 1.0;
  Vector9c b = rhs;
  b(I11) = 0.0;  // first-order correction is traceless

  Eigen::FullPivLU<Matrix9c> lu(a);
  if (!lu.isInvertible())
    throw SingularSystem("linear-response system is singular");
  Vector9c v = lu.solve(b);
  v += lu.solve(b - a * v);
  return v(I13);
}

PerturbativeComparison compare_analytic_numeric(const SystemParams& params) {
  PerturbativeComparison cmp;
  cmp.analytic = first_order_rho13_analytic(params);
  cmp.numeric = params.omega_p * first_order_rho13_numeric(params);
  cmp.abs_error = std::abs(cmp.analytic - cmp.numeric);
  cmp.rel_error = cmp.abs_error / std::max(std::abs(cmp.numeric), 1e-300);
  return cmp;
}

}  // namespace vloc
