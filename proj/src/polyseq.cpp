// SPDX-License-Identifier: Apache-2.0

#include "biortho/polyseq.hpp"

namespace biortho {

namespace {

// Shared bracket of gamma_{n+1} and tilde gamma_n:
//   eps_n (r - eps_n s)^2 r n - (1-eps_n)/2 ((r+s)^2 + 2 alpha1) r + gamma
Rat gamma_bracket(const ModelParams& mp, long n) {
  Rat e(eps(n));
  Rat res = mp.r - e * mp.s;
  Rat b = e * res * res * mp.r * Rat(n);
  b -= (Rat(1) - e) / 2 * ((mp.r + mp.s) * (mp.r + mp.s) + Rat(2) * mp.alpha1) * mp.r;
  b += mp.gamma;
  return b;
}

Rat alpha_bracket(const ModelParams& mp, long n) {
  Rat e(eps(n));
  return (mp.r * mp.r + mp.s * mp.s) * Rat(n) + (Rat(1) - e) * mp.r * mp.s + mp.alpha1;
}

}  // namespace

RecurrenceCoeffs coeffs(const ModelParams& mp, long n) {
  RecurrenceCoeffs rc;
  rc.n = n;
  Rat e(eps(n));
  rc.beta = (e * mp.r - Rat(2) * mp.s) * Rat(n) - (Rat(1) - e) / 2 * mp.r + mp.beta0;
  rc.alpha_next = Rat(n + 1) * alpha_bracket(mp, n);
  rc.gamma_next = Rat(n + 2) * Rat(n + 1) * gamma_bracket(mp, n);
  rc.beta_t = -(e * mp.r + Rat(2) * mp.s) * Rat(n) - (Rat(1) + e) / 2 * mp.r - mp.s + mp.beta0;
  if (n >= 1) {
    rc.alpha_t = Rat(n) * alpha_bracket(mp, n);
    rc.gamma_t = Rat(n + 1) * Rat(n) * gamma_bracket(mp, n);
  }
  return rc;
}

void check_regularity(const ModelParams& mp, long N) {
  // gamma_n != 0 is the essential condition: the third-order recurrence
  // generates a genuine 2-orthogonal sequence iff its trailing coefficient
  // never vanishes.  alpha_n may vanish (it does identically for the
  // 2-symmetric family), so it is not treated as an error here.
  for (long n = 1; n <= N; ++n) {
    RecurrenceCoeffs rc = coeffs(mp, n - 1);  // yields alpha_n, gamma_n
    if (rc.gamma_next == 0) throw RegularityError("gamma", n);
  }
}

namespace {

// Third-order recurrence driver shared by both sequences.
std::vector<Poly> run_recurrence(long N, const std::vector<Rat>& beta,
                                 const std::vector<Rat>& alpha, const std::vector<Rat>& gam) {
  std::vector<Poly> p;
  p.reserve(N + 1);
  p.push_back(Poly::constant(Rat(1)));
  if (N >= 1) p.push_back(Poly::linear(Rat(1), -beta[0]));
  if (N >= 2)
    p.push_back(Poly::linear(Rat(1), -beta[1]) * p[1] - Poly::constant(alpha[1]));
  for (long n = 3; n <= N; ++n) {
    Poly next = Poly::linear(Rat(1), -beta[n - 1]) * p[n - 1] - p[n - 2] * alpha[n - 1] -
                p[n - 3] * gam[n - 2];
    p.push_back(next);
  }
  return p;
}

}  // namespace

std::vector<Poly> gen_p(const ModelParams& mp, long N) {
  check_regularity(mp, N);
  std::vector<Rat> beta(N + 1), alpha(N + 1), gam(N + 1);
  for (long n = 0; n <= N; ++n) {
    RecurrenceCoeffs rc = coeffs(mp, n);
    beta[n] = rc.beta;
    if (n >= 1) {
      RecurrenceCoeffs prev = coeffs(mp, n - 1);
      alpha[n] = prev.alpha_next;
      gam[n] = prev.gamma_next;
    }
  }
  return run_recurrence(N, beta, alpha, gam);
}

std::vector<Poly> gen_q(const ModelParams& mp, long N) {
  check_regularity(mp, N);
  std::vector<Rat> beta(N + 1), alpha(N + 1), gam(N + 1);
  for (long n = 0; n <= N; ++n) {
    RecurrenceCoeffs rc = coeffs(mp, n);
    beta[n] = rc.beta_t;
    if (n >= 1) {
      alpha[n] = rc.alpha_t;
      gam[n] = rc.gamma_t;
    }
  }
  return run_recurrence(N, beta, alpha, gam);
}

}  // namespace biortho
