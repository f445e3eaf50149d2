// SPDX-License-Identifier: Apache-2.0

#include "biortho/functional.hpp"

namespace biortho {

const char* to_string(SystemTag t) {
  switch (t) {
    case SystemTag::S1: return "S1";
    case SystemTag::S2: return "S2";
    case SystemTag::S3: return "S3";
  }
  return "?";
}

FunctionalSystem classify(const ModelParams& mp) {
  FunctionalSystem sys;
  sys.params = mp;
  sys.delta0 = mp.delta0();
  sys.delta1 = mp.delta1();
  sys.eta = mp.eta();
  sys.gamma1 = mp.gamma1();
  if (mp.gamma == 0) throw DomainError("gamma must be nonzero (gamma_1 = 2 gamma is a recurrence coefficient)");

  if (sys.eta == 0 && sys.delta0 == 0)
    throw DomainError("eta = 0 and delta0 = 0: Phi(x) is singular, no functional system applies");
  if (sys.eta == 0)
    sys.tag = SystemTag::S3;
  else if (sys.delta0 == 0)
    sys.tag = SystemTag::S2;
  else
    sys.tag = SystemTag::S1;

  const Rat& b0 = mp.beta0;
  Poly x_minus_b0 = Poly::linear(Rat(1), -b0);

  sys.phi = x_minus_b0 * (-sys.delta1 * sys.delta0) +
            Poly::constant(sys.delta1 * mp.alpha1 + mp.gamma);
  sys.vartheta = x_minus_b0 * (Rat(2) * mp.s) - Poly::constant(mp.alpha1);
  sys.chi = -x_minus_b0;
  sys.varrho = x_minus_b0 * sys.delta0;
  sys.sigma = x_minus_b0 * sys.delta1 - Poly::constant(mp.alpha1);
  sys.tau = -x_minus_b0 + Poly::constant(sys.delta1);

  sys.tau0 = Rat(1) + sys.delta1 * mp.alpha1 / mp.gamma;
  sys.tau1 = -mp.alpha1 / mp.gamma;
  sys.psi_slope = Rat(1) / mp.gamma;

  sys.Phi[0][0] = Poly::constant(Rat(1));
  sys.Phi[0][1] = Poly::constant(-sys.delta0);
  sys.Phi[1][0] = x_minus_b0 * (-sys.delta1 / mp.gamma);
  sys.Phi[1][1] = Poly::constant(sys.tau0);
  sys.Psi[0][0] = Poly();
  sys.Psi[0][1] = Poly::constant(Rat(1));
  sys.Psi[1][0] = x_minus_b0 * sys.psi_slope;
  sys.Psi[1][1] = Poly::constant(sys.tau1);
  return sys;
}

Rat pair_moments(const MomentTable& t, const Poly& p) {
  Rat acc(0);
  for (long k = 0; k <= p.degree(); ++k) {
    if (k >= t.size()) throw DomainError("moment table too short for pairing");
    acc += p.coeff(k) * t.m[k];
  }
  return acc;
}

MomentTable moments_u0(const FunctionalSystem& sys, long K) {
  MomentTable t;
  t.m.assign(K + 1, Rat(0));
  if (K < 0) return t;
  t.m[0] = 1;
  const ModelParams& mp = sys.params;

  if (sys.tag == SystemTag::S3) {
    // <sigma u0' + tau u0, x^n> = 0 gives
    //   m_{n+1} = (beta0 - n delta1) m_n + n (delta1 beta0 + alpha1) m_{n-1}
    Rat lin = sys.delta1 * mp.beta0 + mp.alpha1;
    for (long n = 0; n < K; ++n) {
      Rat v = (mp.beta0 - Rat(n) * sys.delta1) * t.m[n];
      if (n >= 1) v += Rat(n) * lin * t.m[n - 1];
      t.m[n + 1] = v;
    }
    return t;
  }

  // S1/S2: <u0, phi f'' - vartheta f' + chi f> = 0 at f = x^n gives the
  // four-term recurrence
  //   m_{n+1} = (beta0 - n theta1) m_n + n ((n-1) phi1 - theta0) m_{n-1}
  //             + n (n-1) phi0 m_{n-2}
  Rat phi1 = sys.phi.coeff(1), phi0 = sys.phi.coeff(0);
  Rat th1 = sys.vartheta.coeff(1), th0 = sys.vartheta.coeff(0);
  for (long n = 0; n < K; ++n) {
    Rat v = (mp.beta0 - Rat(n) * th1) * t.m[n];
    if (n >= 1) v += Rat(n) * (Rat(n - 1) * phi1 - th0) * t.m[n - 1];
    if (n >= 2) v += Rat(n) * Rat(n - 1) * phi0 * t.m[n - 2];
    t.m[n + 1] = v;
  }
  return t;
}

MomentTable moments_u1(const FunctionalSystem& sys, const MomentTable& m0, long K) {
  MomentTable t;
  t.m.assign(K + 1, Rat(0));
  if (K < 0) return t;
  const ModelParams& mp = sys.params;

  if (sys.tag == SystemTag::S3) {
    // delta0 u1' - u1 = u0' paired with x^n:
    //   <u1, x^n> = n m0_{n-1} - n delta0 <u1, x^{n-1}>,  <u1, 1> = 0
    if (m0.size() < K) throw DomainError("m0 table too short");
    for (long n = 1; n <= K; ++n)
      t.m[n] = Rat(n) * m0[n - 1] - Rat(n) * sys.delta0 * t.m[n - 1];
    return t;
  }

  if (sys.eta == 0) throw DomainError("internal inconsistency: eta = 0 with an S1/S2 tag");
  if (m0.size() < K + 2) throw DomainError("m0 table too short (needs K+1 plus one slack)");
  // eta <u1, x^n> = <u0, -phi n x^{n-1} + varrho x^n>
  Rat phi1 = sys.phi.coeff(1), phi0 = sys.phi.coeff(0);
  for (long n = 0; n <= K; ++n) {
    Rat v = sys.delta0 * (m0[n + 1] - mp.beta0 * m0[n]);
    v -= Rat(n) * phi1 * m0[n];
    if (n >= 1) v -= Rat(n) * phi0 * m0[n - 1];
    t.m[n] = v / sys.eta;
  }
  return t;
}

DerivedMoments derived_functionals(const FunctionalSystem& sys, const MomentTable& m0,
                                   const MomentTable& m1, long K) {
  if (m0.size() < K + 2 || m1.size() < K + 1)
    throw DomainError("moment tables too short for derived functionals");
  DerivedMoments d;
  d.u2.m.resize(K + 1);
  d.v0.m.resize(K + 1);
  d.v1.m.resize(K + 1);
  const ModelParams& mp = sys.params;
  for (long n = 0; n <= K; ++n) {
    d.u2.m[n] = (m0[n + 1] - mp.beta0 * m0[n] - mp.alpha1 * m1[n]) / sys.gamma1;
    d.v0.m[n] = m0[n] - sys.delta0 * m1[n];
    d.v1.m[n] = m1[n] - Rat(2) * sys.delta1 * d.u2.m[n];
  }
  return d;
}

}  // namespace biortho
