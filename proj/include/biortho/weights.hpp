// SPDX-License-Identifier: Apache-2.0

#ifndef BIORTHO_WEIGHTS_HPP
#define BIORTHO_WEIGHTS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "biortho/functional.hpp"

namespace biortho::weights {

// The named parameter families.  "lim" entries are the two degenerate
// parameter limits of the Tricomi families.
enum class CaseId {
  I1,
  I2,
  I3,
  II,
  III1,
  III1Lim1,
  III1Lim2,
  III2,
  IV1,
  IV2,
  V1,
  VI1,
  VI1Lim1,
  VI1Lim2,
  VI2,
};

std::string to_string(CaseId id);
CaseId case_from_string(const std::string& name);
std::vector<CaseId> all_cases();

// Sign convention for the last family, where the source text is internally
// inconsistent: the product delta0*delta1 is taken as +1 (as printed) or -1
// (which makes both tails decay).  Which one yields a working measure is
// decided numerically by the verification report.
enum class Vi1Convention { ProductPlusOne, ProductMinusOne };

// Rational case parameters (alpha, p, q, r, s, mu, nu, delta0, beta0 as
// applicable) plus the convention toggle.
struct CaseParams {
  std::map<std::string, Rat> v;
  Vi1Convention convention = Vi1Convention::ProductMinusOne;

  Rat get(const std::string& key, const Rat& dflt) const {
    auto it = v.find(key);
    return it == v.end() ? dflt : it->second;
  }
  bool has(const std::string& key) const { return v.count(key) != 0; }
};

CaseParams default_case_params(CaseId id);

// The five model parameters induced by a case's substitutions.
ModelParams case_model_params(CaseId id, const CaseParams& cp);

enum class Support { WholeLine, PosHalfLine, NegHalfLine, PiecewiseAtZero };

struct Atom {
  double location = 0;
  double mass = 0;
};

// Decay information for the infinite ends, used to steer quadrature.
struct TailHint {
  enum class Kind { ExpDecay, GaussDecay, AiryOscillatory } kind = Kind::ExpDecay;
  double rate = 1.0;  // e^{-rate |x|} or e^{-rate x^2}
  // oscillatory tail density: coef_ai * Ai(scale x) + coef_aip * Ai'(scale x)
  double scale = 1.0, coef_ai = 0.0, coef_aip = 0.0;
};

// A weight expression over a support, plus point masses and the resolved
// normalization constants.  Signed densities are allowed.
struct Measure {
  Support support = Support::WholeLine;
  std::function<double(double)> w_pos;  // density for x >= 0 (or everywhere)
  std::function<double(double)> w_neg;  // density for x < 0 when piecewise
  bool piecewise = false;
  std::vector<Atom> atoms;
  std::map<std::string, double> constants;
  TailHint left_tail, right_tail;
  bool continuous_at_zero = false;
};

// Density value at x; atoms are not density values and x must lie in the
// support.
double eval_measure(const Measure& mu, double x);

enum class TricomiVariant { CaseIII, CaseVI };

// Normalization constants of the two-sided Tricomi weights.
//  CaseIII: Delta, I1, I2, k1, k2, kt1, kt2   (kt = k/eta, eta = 2p)
//  CaseVI:  J1, J2, k1, k2, kt1, kt2          (needs delta0; kt = k/eta)
// Throws DomainError when the parameters leave the valid range or the
// normalization system degenerates.
std::map<std::string, double> tricomi_constants(
    double p, double q, TricomiVariant variant, double delta0 = 0.0,
    Vi1Convention conv = Vi1Convention::ProductMinusOne);

struct CaseBuild {
  CaseId id;
  CaseParams case_params;
  ModelParams params;
  FunctionalSystem sys;
  Measure mu0, mu1;
};

// Constructs the measure pair for a case: weight expressions with all
// constants resolved (closed forms where available, quadrature for the
// Gaussian-Tricomi normalizer), atom bookkeeping, and tail hints.
CaseBuild build_measure(CaseId id, const CaseParams& cp);
CaseBuild build_measure(CaseId id);

}  // namespace biortho::weights

#endif
