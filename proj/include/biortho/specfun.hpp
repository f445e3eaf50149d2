// SPDX-License-Identifier: Apache-2.0

#ifndef BIORTHO_SPECFUN_HPP
#define BIORTHO_SPECFUN_HPP

#include <string>
#include <vector>

#include "biortho/errors.hpp"

// Double-precision special function kernel.  Pure functions of their
// arguments, no caller-visible state; relative error target 1e-12 away from
// cancellation regimes.  Algorithm selection (series vs asymptotics vs
// continued fraction) is documented at each definition; switchover radii are
// implementation constants.
namespace biortho::specfun {

struct SpecFunResult {
  double value = 0;
  double abs_error = 0;  // conservative bound, not statistical
};

inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

// Gamma(x), or log Gamma(x) when log_scale (then x > 0 required).
// Poles at nonpositive integers raise DomainError.
double gamma_fn(double x, bool log_scale = false);

// Psi function.  Poles at nonpositive integers raise DomainError.
double digamma(double x);

enum class GammaIncKind { Lower, Upper };

// Unnormalised incomplete gamma functions, a > 0, x >= 0.  The two kinds
// sum to Gamma(a) by construction (the complement is obtained by
// subtraction from Gamma(a)).
double gamma_inc(double a, double x, GammaIncKind kind);

// log of the upper incomplete gamma, usable where Gamma(a,x) underflows.
double log_gamma_inc_upper(double a, double x);

struct ErfPair {
  double erf = 0;
  double erfc = 0;
};
ErfPair erf_pair(double x);

// Airy function of the first kind (deriv_order 0) or its derivative
// (deriv_order 1), both signs of x.
double airy_ai(double x, int deriv_order = 0);

enum class BesselScaledKind { Omega, Rho };

// omega_nu(x) = x^{nu/2} I_nu(2 sqrt x)  (ascending series, all terms
// positive), rho_nu(x) = 2 x^{nu/2} K_nu(2 sqrt x).  nu > -1, x >= 0
// (x = 0 as a limit).  Raises OverflowSignal when the result would not fit
// in double range.
double bessel_scaled(double nu, double x, BesselScaledKind kind);

// Modified Bessel function of the second kind, nu real, z > 0.
double bessel_k(double nu, double z);

// Kummer confluent function M(a; c; z).  c must not be a nonpositive
// integer.
double kummer_m(double a, double c, double z);

// Tricomi confluent function U(a; c; x) for a > 0, x >= 0 (x = 0 only when
// the limit is finite, i.e. c < 1).  Connection formula through M for
// noninteger c at small x, asymptotic series at large x, and adaptive
// quadrature of the Laplace integral otherwise (also used when c is within
// 1e-6 of an integer, where the connection formula degenerates).
double tricomi_u(double a, double c, double x);

// Small-x limit of U(a; c; x); finite only for c < 1.
double tricomi_u_limit0(double a, double c);

enum class ModTricomiKind { ScriptU, ScriptV };

// Exponentially tilted Tricomi functions on complementary half-lines:
//   scriptU(y; p, q) = e^{-y} U(1+p; 2+p+q; 2y),   y >= 0, 1+p > 0
//   scriptV(y; q, p) = e^{+y} U(1+q; 2+p+q; -2y),  y <= 0, 1+q > 0
double mod_tricomi(double y, double p, double q, ModTricomiKind kind);

// Gauss-Airy function (1/pi) Int_0^inf e^{-xi t^2} cos(x t + tau t^3/3) dt,
// xi >= 0.  Reduced in closed form to a tilted/shifted Airy evaluation (or
// a Gaussian integral when tau = 0; xi = tau = 0 is out of domain).
double gauss_airy(double x, double xi, double tau);

// Gauss hypergeometric function for real parameters.  Supported arguments:
// z <= 1 with z = 1 requiring c-a-b > 0; z < 0 of any magnitude is mapped
// into [0, 1) by the Pfaff transformation.
double hyp2f1(double a, double b, double c, double z);

// Invariant grid for the kernel (identity residuals).  Used by the hidden
// CLI self-test.
struct SelfTestEntry {
  std::string name;
  double worst_residual = 0;
  double threshold = 0;
  bool pass = false;
};
std::vector<SelfTestEntry> self_test();

}  // namespace biortho::specfun

#endif
