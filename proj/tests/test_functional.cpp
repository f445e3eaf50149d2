// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "biortho/functional.hpp"

using namespace biortho;

namespace {

std::vector<ModelParams> random_regular_params(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<ModelParams> out;
  while (static_cast<int>(out.size()) < count) {
    ModelParams mp;
    mp.r = frac(num(rng), den(rng));
    mp.s = frac(num(rng), den(rng));
    mp.beta0 = frac(num(rng), den(rng));
    mp.alpha1 = frac(num(rng), den(rng));
    mp.gamma = frac(num(rng), den(rng));
    if (mp.alpha1 == 0 || mp.gamma == 0) continue;
    if (mp.eta() == 0 && mp.delta0() == 0) continue;
    try {
      check_regularity(mp, 18);
    } catch (const RegularityError&) {
      continue;
    }
    out.push_back(mp);
  }
  return out;
}

ModelParams case_i2() {
  ModelParams mp;
  mp.alpha1 = 0;
  mp.gamma = 1;
  return mp;
}

ModelParams case_iii2(const Rat& alpha) {
  ModelParams mp;
  mp.r = 1;
  mp.beta0 = alpha + 1;
  mp.alpha1 = alpha + 1;
  mp.gamma = Rat(2) * mp.alpha1;  // eta = 0
  return mp;
}

}  // namespace

TEST_CASE("classification tags") {
  CHECK(classify(case_i2()).tag == SystemTag::S2);

  FunctionalSystem s3 = classify(case_iii2(Rat(3)));
  CHECK(s3.tag == SystemTag::S3);
  // sigma = -x, tau = -x + alpha for the Laguerre-type subcase
  CHECK(s3.sigma == Poly::linear(Rat(-1), Rat(0)));
  CHECK(s3.tau == Poly::linear(Rat(-1), Rat(3)));

  ModelParams bad;  // eta = 0 and delta0 = 0
  bad.r = 0;
  bad.s = 0;
  bad.alpha1 = 1;
  bad.gamma = 0;
  CHECK_THROWS_AS(classify(bad), DomainError);

  ModelParams sing;  // r=1, s=-1 => delta0 = 0; gamma = 2 r alpha1 => eta = 0
  sing.r = 1;
  sing.s = -1;
  sing.alpha1 = 1;
  sing.gamma = 2;
  CHECK_THROWS_AS(classify(sing), DomainError);
}

TEST_CASE("phi identities") {
  for (const ModelParams& mp : random_regular_params(8, 99)) {
    FunctionalSystem sys = classify(mp);
    // phi = gamma * det(Phi)
    Poly det = sys.Phi[0][0] * sys.Phi[1][1] - sys.Phi[0][1] * sys.Phi[1][0];
    CHECK(sys.phi == det * mp.gamma);
    // phi + delta0 sigma + eta = 0 identically
    Poly z = sys.phi + sys.sigma * sys.delta0 + Poly::constant(sys.eta);
    CHECK(z.is_zero());
  }
}

TEST_CASE("airy-type moments (symmetric cubic case)") {
  FunctionalSystem sys = classify(case_i2());
  MomentTable m0 = moments_u0(sys, 12);
  // (u0)_{3n} = (3n)!/(3^n n!), zero otherwise
  CHECK(m0[0] == Rat(1));
  CHECK(m0[1] == Rat(0));
  CHECK(m0[2] == Rat(0));
  CHECK(m0[3] == Rat(2));
  CHECK(m0[6] == Rat(40));
  CHECK(m0[9] == Rat(2240));
  CHECK(m0[12] == Rat(246400));
  MomentTable m1 = moments_u1(sys, m0, 11);
  CHECK(m1[0] == Rat(0));
  CHECK(m1[1] == Rat(1));
  CHECK(m1[4] == Rat(8));
  CHECK(m1[7] == Rat(280));
  CHECK(m1[10] == Rat(22400));
  CHECK(m1[2] == Rat(0));
  CHECK(m1[3] == Rat(0));
}

TEST_CASE("laguerre-type moments") {
  FunctionalSystem sys = classify(case_iii2(Rat(0)));
  MomentTable m0 = moments_u0(sys, 9);
  Rat f(1);
  for (long n = 1; n <= 9; ++n) {
    f *= n;
    CHECK(m0[n] == f);  // n!
  }
  MomentTable m1 = moments_u1(sys, m0, 8);
  CHECK(m1[0] == Rat(0));
  CHECK(m1[1] == Rat(1));
  // recurrence m1_n = n m0_{n-1} - n delta0 m1_{n-1} with delta0 = 1
  CHECK(m1[2] == Rat(0));
  CHECK(m1[3] == Rat(6));
  CHECK(m1[4] == Rat(0));
}

TEST_CASE("duality seeds for arbitrary parameters") {
  for (const ModelParams& mp : random_regular_params(8, 1234)) {
    FunctionalSystem sys = classify(mp);
    MomentTable m0 = moments_u0(sys, 6);
    MomentTable m1 = moments_u1(sys, m0, 5);
    CHECK(m0[0] == Rat(1));
    CHECK(m1[0] == Rat(0));
    CHECK(m1[1] == Rat(1));
    // <u0, P_1> = 0 means m0[1] = beta0
    CHECK(m0[1] == mp.beta0);
  }
}

TEST_CASE("exact 2-orthogonality pattern") {
  auto sets = random_regular_params(5, 5150);
  sets.push_back(case_i2());
  sets.push_back(case_iii2(Rat(1, 2)));
  for (const ModelParams& mp : sets) {
    FunctionalSystem sys = classify(mp);
    const long N = 14;
    auto P = gen_p(mp, N);
    MomentTable m0 = moments_u0(sys, N + 7);
    MomentTable m1 = moments_u1(sys, m0, N + 6);
    const MomentTable* mk[2] = {&m0, &m1};
    for (int k = 0; k <= 1; ++k)
      for (long m = 0; 2 * m + k <= N; ++m)
        for (long n = 2 * m + k; n <= N; ++n) {
          Rat v = pair_moments(*mk[k], P[n].shifted_up(m));
          if (n >= 2 * m + k + 1)
            CHECK(v == Rat(0));
          else
            CHECK(v != Rat(0));
        }
  }
}

TEST_CASE("derived functionals and dual pairings") {
  auto sets = random_regular_params(6, 31337);
  for (const ModelParams& mp : sets) {
    FunctionalSystem sys = classify(mp);
    const long N = 14;
    auto P = gen_p(mp, N);
    auto Q = gen_q(mp, N);
    MomentTable m0 = moments_u0(sys, N + 2);
    MomentTable m1 = moments_u1(sys, m0, N + 1);
    DerivedMoments d = derived_functionals(sys, m0, m1, N);

    CHECK(pair_moments(d.v0, P[1]) == -sys.delta0);
    CHECK(pair_moments(d.v1, P[2]) == Rat(-2) * sys.delta1);
    CHECK(pair_moments(d.u2, P[2]) == Rat(1));
    CHECK(pair_moments(d.u2, P[0]) == Rat(0));
    CHECK(pair_moments(d.u2, P[1]) == Rat(0));

    // dual-sequence pairings <v_k, Q_n> = delta_{kn}
    for (long n = 0; n <= N; ++n) {
      CHECK(pair_moments(d.v0, Q[n]) == (n == 0 ? Rat(1) : Rat(0)));
      CHECK(pair_moments(d.v1, Q[n]) == (n == 1 ? Rat(1) : Rat(0)));
    }

    // x u0 = beta0 u0 + alpha1 u1 + gamma1 u2 moment-by-moment
    for (long n = 0; n <= N - 1; ++n) {
      Rat lhs = m0[n + 1];
      Rat rhs = mp.beta0 * m0[n] + mp.alpha1 * m1[n] + sys.gamma1 * d.u2.m[n];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("moment table guards") {
  FunctionalSystem sys = classify(case_iii2(Rat(0)));
  MomentTable m0 = moments_u0(sys, 3);
  CHECK_THROWS_AS(moments_u1(classify(case_i2()), m0, 3), DomainError);
  CHECK_THROWS_AS(derived_functionals(sys, m0, moments_u1(sys, m0, 3), 3), DomainError);
}
