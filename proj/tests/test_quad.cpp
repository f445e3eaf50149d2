// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "biortho/quad.hpp"
#include "biortho/specfun.hpp"

using namespace biortho;
using namespace biortho::quad;

namespace {
double rel(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
}  // namespace

TEST_CASE("gaussian mass over the whole line") {
  auto f = [](double x) { return std::exp(-x * x) / specfun::kSqrtPi; };
  QuadResult r = integrate(f, Domain::WholeLine);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - 1.0) < 1e-10);
  CHECK(r.truncation_points.size() == 2);
}

TEST_CASE("tilted airy normalization") {
  // Int e^{a x} Ai(x + a^2) dx = e^{-2a^3/3}
  for (double a : {0.5, 1.0, 2.0}) {
    auto f = [a](double x) { return std::exp(a * x) * specfun::airy_ai(x + a * a); };
    Options opt;
    opt.tol = 1e-11;
    QuadResult r = integrate(f, Domain::WholeLine, opt);
    CHECK(rel(r.value, std::exp(-2.0 * a * a * a / 3.0)) < 1e-8);
  }
}

TEST_CASE("half-line tricomi integral against the hypergeometric value") {
  double p = -0.6, q = -0.6;
  auto f = [&](double x) { return std::exp(-x) * specfun::tricomi_u(1.0 + p, 2.0 + p + q, 2.0 * x); };
  Options opt;
  opt.tol = 1e-11;
  QuadResult r = integrate_half(f, 0.0, +1, opt);
  double want = specfun::gamma_fn(-p - q) / specfun::gamma_fn(1.0 - q) *
                specfun::hyp2f1(1.0, 1.0 + p, 1.0 - q, -1.0);
  CHECK(rel(r.value, want) < 1e-8);
}

TEST_CASE("piecewise self-consistency") {
  auto f = [](double x) { return std::exp(-std::fabs(x)) * (1.0 + x * x); };
  Options opt;
  opt.tol = 1e-10;
  double whole = integrate(f, Domain::WholeLine, opt).value;
  double split = integrate(f, Domain::NegHalf, opt).value + integrate(f, Domain::PosHalf, opt).value;
  CHECK(std::fabs(whole - split) < 2 * opt.tol);
}

TEST_CASE("order stability under tolerance halving") {
  auto f = [](double x) { return std::sin(3 * x) * std::exp(-x * x / 4.0) + 0.2 / (1.0 + x * x); };
  Options a;
  a.tol = 1e-8;
  Options b;
  b.tol = 5e-9;
  QuadResult ra = integrate(f, Domain::WholeLine, a);
  QuadResult rb = integrate(f, Domain::WholeLine, b);
  CHECK(std::fabs(ra.value - rb.value) <= std::max(ra.error_estimate, rb.error_estimate));
}

TEST_CASE("lobe summation of the airy left tail") {
  // T_0(8): compare against 2/3 minus the adaptive piece on [-8, 0]
  Options opt;
  opt.tol = 1e-11;
  auto ai = [](double x) { return specfun::airy_ai(x); };
  double inner = integrate_finite(ai, -8.0, 0.0, opt).value;
  double right = integrate_half(ai, 0.0, +1, opt).value;  // = 1/3
  double t0 = airy_tail_moment(0, 8.0, false);
  // total mass of Ai over the line is 1
  CHECK(rel(t0 + inner + right, 1.0) < 1e-9);
  CHECK(rel(right, 1.0 / 3.0) < 1e-9);
}

TEST_CASE("regularized airy tail moments reproduce the exact moment pattern") {
  // Int_R x^n Ai dx = (3k)!/(3^k k!) at n = 3k and 0 otherwise.  Zero
  // moments are measured against the running series scale: the quadrature
  // works with integrand values of that size, so that is the attainable
  // cancellation level in doubles.
  const double a = 8.0;
  Options opt;
  opt.tol = 1e-11;
  const double want[11] = {1, 0, 0, 2, 0, 0, 40, 0, 0, 2240, 0};
  double scale = 1.0;
  for (int n = 0; n <= 10; ++n) {
    scale = std::max(scale, std::fabs(want[n]));
    auto f = [n](double x) { return std::pow(x, n) * specfun::airy_ai(x); };
    double finite = integrate_finite(f, -a, 0.0, opt).value;
    double rightp = integrate_half(f, 0.0, +1, opt).value;
    double tail = airy_tail_moment(n, a, false);
    double got = tail + finite + rightp;
    CHECK(std::fabs(got - want[n]) < 1e-6 * scale);
  }
}

TEST_CASE("budget errors carry the partial value") {
  auto nasty = [](double x) { return std::sin(1e4 * x); };
  Options opt;
  opt.tol = 1e-14;
  opt.max_panels = 8;
  CHECK_THROWS_AS(integrate_finite(nasty, 0.0, 30.0, opt), BudgetExceeded);
}
