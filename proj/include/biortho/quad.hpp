// SPDX-License-Identifier: Apache-2.0

#ifndef BIORTHO_QUAD_HPP
#define BIORTHO_QUAD_HPP

#include <functional>
#include <vector>

#include "biortho/errors.hpp"
#include "biortho/poly.hpp"

namespace biortho::weights {
struct Measure;
}

namespace biortho::quad {

using Fn = std::function<double(double)>;

struct QuadResult {
  double value = 0;
  double error_estimate = 0;
  long panels_used = 0;
  std::vector<double> truncation_points;
  bool converged = false;
};

struct Options {
  double tol = 1e-10;        // mixed absolute/relative target
  long max_panels = 80000;
  double first_panel = 1.0;  // initial panel length for infinite tails
};

// Adaptive Gauss-Kronrod 15(7) over a finite interval.  Panels are split
// worst-error-first; the final sum is taken in left-to-right panel order so
// results are bit-stable across runs.  Throws BudgetExceeded (carrying the
// partial value) when the panel budget runs out.
QuadResult integrate_finite(const Fn& f, double a, double b, const Options& opt = {});

// [a, +inf) for dir = +1, (-inf, a] for dir = -1.  Geometric panel
// extension, terminated when a panel contributes less than tol/10 of the
// accumulated absolute value.  The reached truncation point is recorded.
QuadResult integrate_half(const Fn& f, double a, int dir, const Options& opt = {});

enum class Domain { WholeLine, PosHalf, NegHalf };
QuadResult integrate(const Fn& f, Domain d, const Options& opt = {});

// Conditionally convergent oscillatory tail over (-inf, start]: the axis is
// cut at consecutive sign changes of f, each lobe is integrated by
// Gauss-Kronrod, and the alternating lobe series is summed with Euler's
// transformation (which also sums the Abel-regularized divergent-amplitude
// case).  local_halfperiod(x) should estimate the zero spacing near x.
QuadResult integrate_lobes_left(const Fn& f, double start, const Fn& local_halfperiod,
                                const Options& opt = {});

// Abel-regularized Airy tail moments
//   T_n(a) = Int_{-inf}^{-a} x^n Ai(x) dx      (derivative = false)
//   S_n(a) = Int_{-inf}^{-a} x^n Ai'(x) dx     (derivative = true)
// computed by reducing with x Ai = Ai'' down to the convergent T_0 lobe sum
// plus boundary values of Ai, Ai' at -a.
double airy_tail_moment(int n, double a, bool derivative, const Options& opt = {});

// <u, f> for a constructed measure: weight integral over every branch of
// the support plus the atom contributions.  The polynomial overload also
// handles oscillatory (Airy-type) tails, where moments are only defined in
// the Abel-regularized sense.
double pair(const weights::Measure& mu, const Fn& f, const Options& opt = {});
double pair(const weights::Measure& mu, const Poly& p, const Options& opt = {});

}  // namespace biortho::quad

#endif
