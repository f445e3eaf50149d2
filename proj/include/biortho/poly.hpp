// SPDX-License-Identifier: Apache-2.0

#ifndef BIORTHO_POLY_HPP
#define BIORTHO_POLY_HPP

#include <string>
#include <vector>

#include "biortho/rational.hpp"

namespace biortho {

// Dense univariate polynomial with exact rational coefficients, ascending
// order (coeff(0) is the constant term).  Degrees stay small here (<= ~20),
// no sparse representation.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }
  static Poly constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }
  // c1*x + c0
  static Poly linear(const Rat& c1, const Rat& c0) {
    return Poly(std::vector<Rat>{c0, c1});
  }
  static Poly monomial(int degree, const Rat& v = Rat(1));

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero poly
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(long k) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Rat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly derivative() const;
  Poly shifted_up(int m) const;  // multiply by x^m

  Rat eval(const Rat& x) const;
  double eval(double x) const;

  // "x^3 - 2", "1", "x^2 - 1/2 x + 3" -- descending powers, unit
  // coefficients elided.
  std::string pretty(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace biortho

#endif
