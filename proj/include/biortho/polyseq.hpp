// SPDX-License-Identifier: Apache-2.0

#ifndef BIORTHO_POLYSEQ_HPP
#define BIORTHO_POLYSEQ_HPP

#include <vector>

#include "biortho/poly.hpp"

namespace biortho {

// The five free parameters of the model.  gamma is half the first
// gamma-coefficient of the recurrence (gamma1 = 2*gamma).
struct ModelParams {
  Rat r{0}, s{0}, beta0{0}, alpha1{0}, gamma{1};

  Rat delta0() const { return s + r; }
  Rat delta1() const { return s - r; }
  Rat eta() const { return Rat(2) * r * alpha1 - gamma; }
  Rat gamma1() const { return Rat(2) * gamma; }
  // delta_n = s + r*(-1)^n
  Rat delta(long n) const { return (n % 2 == 0) ? delta0() : delta1(); }
};

inline int eps(long n) { return (n % 2 == 0) ? 1 : -1; }

// Recurrence coefficients of {P_n} and of the derivative sequence {Q_n} at
// one index.  alpha_t / gamma_t are meaningful for n >= 1 only.
struct RecurrenceCoeffs {
  long n = 0;
  Rat beta, alpha_next, gamma_next;  // beta_n, alpha_{n+1}, gamma_{n+1}
  Rat beta_t;                        // tilde beta_n
  Rat alpha_t, gamma_t;              // tilde alpha_n, tilde gamma_n (n >= 1)
};

RecurrenceCoeffs coeffs(const ModelParams& mp, long n);

// Throws RegularityError if some alpha_n or gamma_n (1 <= n <= N) vanishes.
void check_regularity(const ModelParams& mp, long N);

// P_0..P_N and Q_0..Q_N, monic, exact.
std::vector<Poly> gen_p(const ModelParams& mp, long N);
std::vector<Poly> gen_q(const ModelParams& mp, long N);

}  // namespace biortho

#endif
