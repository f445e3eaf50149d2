// SPDX-License-Identifier: Apache-2.0

#ifndef BIORTHO_FUNCTIONAL_HPP
#define BIORTHO_FUNCTIONAL_HPP

#include <array>
#include <vector>

#include "biortho/polyseq.hpp"

namespace biortho {

// Which first/second-order differential system the functional pair (u0, u1)
// obeys.  S1: eta != 0, delta0 != 0.  S2: eta != 0, delta0 = 0 (then
// u1 = -u0').  S3: eta = 0, delta0 != 0 (u0 is a classical Laguerre/Hermite
// functional).
enum class SystemTag { S1, S2, S3 };

const char* to_string(SystemTag t);

// Classification result: the coefficient polynomials (all degree <= 1) of
// the functional equations, the 2x2 polynomial matrices of the matrix
// equation (Phi U)' + Psi U = 0, and the derived scalars.  The two
// null-representer constants are fixed to zero throughout.
struct FunctionalSystem {
  SystemTag tag;
  ModelParams params;

  Poly phi, vartheta, chi, varrho;  // second-order system data
  Poly sigma, tau;                  // first-order system data

  std::array<std::array<Poly, 2>, 2> Phi, Psi;
  Rat tau0, tau1;       // constant entries of Phi / Psi
  Rat psi_slope;        // 1/gamma, the slope of Psi_21
  Rat eta, delta0, delta1, gamma1;

  static constexpr int zeta0 = 0;
  static constexpr int zeta1 = 0;
};

// Throws DomainError when eta = delta0 = 0 (the Phi matrix would be
// singular and no system applies).
FunctionalSystem classify(const ModelParams& mp);

// Exact moment sequence of a linear functional: m.at(k) = <u, x^k>.
struct MomentTable {
  std::vector<Rat> m;
  long size() const { return static_cast<long>(m.size()); }
  const Rat& operator[](long k) const { return m[k]; }
};

// <u, p> for a functional given by its moment table.
Rat pair_moments(const MomentTable& t, const Poly& p);

// Moments of u0 up to and including K, from the distributional equation of
// the classified system applied to monomials ("apply to f = x^n, integrate
// by parts at the functional level").  Seed m0[0] = 1.
MomentTable moments_u0(const FunctionalSystem& sys, long K);

// Moments of u1 up to K.  S1/S2 route: eta <u1, x^n> = <u0, G(x^n)> with
// G(f) = -phi f' + varrho f (needs m0 up to K+1).  S3 route: first-order
// recurrence from delta0 u1' - u1 = u0', seeded <u1, 1> = 0.
MomentTable moments_u1(const FunctionalSystem& sys, const MomentTable& m0, long K);

struct DerivedMoments {
  MomentTable u2;  // gamma1 u2 = (x - beta0) u0 - alpha1 u1
  MomentTable v0;  // v0 = u0 - delta0 u1
  MomentTable v1;  // v1 = u1 - 2 delta1 u2
};

DerivedMoments derived_functionals(const FunctionalSystem& sys, const MomentTable& m0,
                                   const MomentTable& m1, long K);

}  // namespace biortho

#endif
