// SPDX-License-Identifier: Apache-2.0

#ifndef BIORTHO_RATIONAL_HPP
#define BIORTHO_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "biortho/errors.hpp"

namespace biortho {

// Exact rational scalar.  All recurrence coefficients, polynomial
// coefficients and moments are kept in this type; doubles appear only at the
// quadrature/evaluation boundary.
using Rat = mpq_class;

inline double to_double(const Rat& q) { return q.get_d(); }

inline std::string to_string(const Rat& q) { return q.get_str(); }

// Accepts "3", "-7/5" and plain decimal strings like "-0.6" (converted
// exactly, 6/10 -> 3/5).
Rat rat_parse(const std::string& text);

// mpq_class(n, d) does not reduce; arithmetic and comparisons assume
// canonical operands, so always build fractions through this.
inline Rat frac(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace biortho

#endif
