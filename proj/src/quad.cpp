// SPDX-License-Identifier: Apache-2.0

#include "biortho/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "biortho/specfun.hpp"

namespace biortho::quad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK constants).
constexpr double kXgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897, 0.8648644233597690727897128,
    0.7415311855993944398638648, 0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007, 0.1047900103222501838398763,
    0.1406532597155259187451896, 0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
constexpr double kWg[4] = {0.1294849661688696932706114, 0.2797053914892766679014678,
                           0.3818300505051189449503698, 0.4179591836734693877551020};

struct PanelEval {
  double kronrod = 0, err = 0, resabs = 0;
};

PanelEval gk15(const Fn& f, double a, double b) {
  double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  double fc = f(c);
  double resk = kWgk[7] * fc, resg = kWg[3] * fc, resabs = kWgk[7] * std::fabs(fc);
  double fv[15];
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    double dx = hw * kXgk[j];
    double f1 = f(c - dx), f2 = f(c + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) resg += kWg[(j - 1) / 2] * (f1 + f2);
  }
  double mean = resk * 0.5;
  double resasc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));
  resk *= hw;
  resg *= hw;
  resabs *= std::fabs(hw);
  resasc *= std::fabs(hw);
  double err = std::fabs(resk - resg);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  err = std::max(err, 50.0 * kEps * resabs);
  return {resk, err, resabs};
}

struct Panel {
  double a, b, val, err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

}  // namespace

QuadResult integrate_finite(const Fn& f, double a, double b, const Options& opt) {
  QuadResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  std::priority_queue<Panel> heap;
  PanelEval e0 = gk15(f, a, b);
  heap.push({a, b, e0.kronrod, e0.err});
  double total_val = e0.kronrod, total_err = e0.err;
  long used = 1;
  while (total_err > std::max(opt.tol, opt.tol * std::fabs(total_val)) &&
         static_cast<long>(heap.size()) < opt.max_panels) {
    Panel worst = heap.top();
    if (worst.err == 0.0) break;  // nothing left to refine
    heap.pop();
    if (worst.b - worst.a < 16 * kEps * (std::fabs(worst.a) + std::fabs(worst.b) + 1e-300)) {
      heap.push({worst.a, worst.b, worst.val, 0.0});  // double resolution reached
      total_err -= worst.err;
      continue;
    }
    double mid = 0.5 * (worst.a + worst.b);
    PanelEval l = gk15(f, worst.a, mid), r = gk15(f, mid, worst.b);
    total_val += l.kronrod + r.kronrod - worst.val;
    total_err += l.err + r.err - worst.err;
    heap.push({worst.a, mid, l.kronrod, l.err});
    heap.push({mid, worst.b, r.kronrod, r.err});
    ++used;
  }
  // deterministic reduction: sum panels in left-to-right order
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double v = 0, err = 0;
  for (const Panel& p : panels) {
    v += p.val;
    err += p.err;
  }
  res.value = v;
  res.error_estimate = err;
  res.panels_used = used;
  res.converged = err <= std::max(opt.tol, opt.tol * std::fabs(v));
  if (!res.converged && static_cast<long>(panels.size()) >= opt.max_panels)
    throw BudgetExceeded("integrate_finite: panel budget exceeded", v, err);
  return res;
}

QuadResult integrate_half(const Fn& f, double a, int dir, const Options& opt) {
  if (dir != 1 && dir != -1) throw DomainError("integrate_half: dir must be +1 or -1");
  QuadResult res;
  Options sub = opt;
  sub.tol = opt.tol / 4;
  sub.max_panels = std::max<long>(opt.max_panels / 8, 2000);
  double len = opt.first_panel;
  double lo = a;
  double acc_abs = 0;
  int consecutive_small = 0;
  const int kMaxExtensions = 64;
  for (int k = 0; k < kMaxExtensions; ++k) {
    double hi = lo + dir * len;
    QuadResult piece =
        (dir > 0) ? integrate_finite(f, lo, hi, sub) : integrate_finite(f, hi, lo, sub);
    res.value += piece.value;
    res.error_estimate += piece.error_estimate;
    res.panels_used += piece.panels_used;
    acc_abs += std::fabs(piece.value);
    lo = hi;
    len *= 2;
    // geometric extension ends when panels stop contributing
    if (k >= 2 && std::fabs(piece.value) < (opt.tol / 10) * std::max(acc_abs, opt.tol)) {
      if (++consecutive_small >= 2) break;
    } else {
      consecutive_small = 0;
    }
  }
  res.truncation_points.push_back(lo);
  res.converged = res.error_estimate <= std::max(opt.tol, opt.tol * std::fabs(res.value)) * 4;
  return res;
}

QuadResult integrate(const Fn& f, Domain d, const Options& opt) {
  if (d == Domain::PosHalf) return integrate_half(f, 0.0, +1, opt);
  if (d == Domain::NegHalf) return integrate_half(f, 0.0, -1, opt);
  QuadResult l = integrate_half(f, 0.0, -1, opt);
  QuadResult r = integrate_half(f, 0.0, +1, opt);
  QuadResult res;
  res.value = l.value + r.value;
  res.error_estimate = l.error_estimate + r.error_estimate;
  res.panels_used = l.panels_used + r.panels_used;
  res.truncation_points = {l.truncation_points[0], r.truncation_points[0]};
  res.converged = l.converged && r.converged;
  return res;
}

namespace {

// Euler transformation of an alternating series (van Wijngaarden's running
// difference table).  Sums Abel-summable series whose lobe magnitudes grow
// polynomially as well as ordinary convergent alternating series.
class EulerAccelerator {
 public:
  // feeds the next signed term, returns |change of the accelerated sum|
  double add(double term) {
    double delta;
    if (n_ == 0) {
      w_.assign(1, term);
      n_ = 1;
      sum_ = delta = 0.5 * term;
    } else {
      double tmp = w_[0];
      w_[0] = term;
      for (std::size_t j = 0; j + 1 < n_; ++j) {
        double dum = w_[j + 1];
        w_[j + 1] = 0.5 * (w_[j] + tmp);
        tmp = dum;
      }
      if (w_.size() < n_ + 1) w_.push_back(0.0);
      w_[n_] = 0.5 * (w_[n_ - 1] + tmp);
      if (std::fabs(w_[n_]) <= std::fabs(w_[n_ - 1])) {
        delta = 0.5 * w_[n_];
        ++n_;
      } else {
        delta = w_[n_];
      }
      sum_ += delta;
    }
    return std::fabs(delta);
  }
  double sum() const { return sum_; }

 private:
  std::vector<double> w_;
  std::size_t n_ = 0;
  double sum_ = 0;
};

}  // namespace

QuadResult integrate_lobes_left(const Fn& f, double start, const Fn& local_halfperiod,
                                const Options& opt) {
  QuadResult res;
  Options sub = opt;
  sub.tol = std::min(opt.tol, 1e-12);
  EulerAccelerator euler;
  double right = start;
  // sign of f on the current (leftmost processed) lobe
  double probe0 = right - 1e-9 * std::max(1.0, std::fabs(right));
  double sign = f(probe0) >= 0 ? 1.0 : -1.0;
  const int kMaxLobes = 400;
  for (int lobes = 0; lobes < kMaxLobes; ++lobes) {
    // march left until f changes sign
    double x = right;
    double prev = x;
    int guard = 0;
    for (;;) {
      double step = std::max(local_halfperiod(x), 1e-3) / 6.0;
      prev = x;
      x -= step;
      double fx = f(x);
      if (fx == 0.0) x -= step * 1e-3;  // nudge off an exact zero
      if (f(x) * sign < 0) break;
      if (++guard > 4000)
        throw BudgetExceeded("lobe search found no sign change", euler.sum(), 1.0);
    }
    // bisect [x, prev]: f(x) has the flipped sign, f(prev) the current one
    double lo = x, hi = prev;
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      if (hi - lo < 4 * kEps * std::fabs(mid)) break;
      if (f(mid) * sign < 0)
        lo = mid;
      else
        hi = mid;
    }
    double zero = 0.5 * (lo + hi);
    QuadResult lobe = integrate_finite(f, zero, right, sub);
    res.panels_used += lobe.panels_used;
    double delta = euler.add(lobe.value);
    right = zero;
    sign = -sign;
    if (lobes > 8 && delta < std::max(opt.tol, 1e-15) * std::max(std::fabs(euler.sum()), 1.0)) {
      res.converged = true;
      break;
    }
  }
  res.value = euler.sum();
  res.error_estimate = res.converged ? opt.tol * std::max(std::fabs(res.value), 1.0) : 1.0;
  res.truncation_points.push_back(right);
  if (!res.converged)
    throw BudgetExceeded("lobe summation did not settle", res.value, res.error_estimate);
  return res;
}

double airy_tail_moment(int n, double a, bool derivative, const Options& opt) {
  if (!(a >= 1.0)) throw DomainError("airy_tail_moment: requires a >= 1");
  if (n < 0 || n > 40) throw DomainError("airy_tail_moment: moment order out of range");

  // Base integral T_0 = Int_{-inf}^{-a} Ai dx: alternating decaying lobes.
  auto ai = [](double x) { return specfun::airy_ai(x); };
  auto halfperiod = [](double x) { return M_PI / std::sqrt(std::max(std::fabs(x), 1.0)); };
  Options lob = opt;
  lob.tol = std::min(opt.tol, 1e-12);
  double t0 = integrate_lobes_left(ai, -a, halfperiod, lob).value;

  // In the Abel-regularized sense the oscillatory boundary terms at -inf
  // average out; integrating x^n Ai = x^{n-1} Ai'' by parts twice leaves
  // boundary data at -a plus the moment three orders down:
  //   T_n = (-a)^{n-1} Ai'(-a) - (n-1)(-a)^{n-2} Ai(-a) + (n-1)(n-2) T_{n-3}
  double aiv = specfun::airy_ai(-a), aipv = specfun::airy_ai(-a, 1);
  std::vector<double> t(std::max(n + 1, 1), 0.0);
  t[0] = t0;
  for (int m = 1; m <= n; ++m) {
    double v = std::pow(-a, m - 1) * aipv - (m - 1) * std::pow(-a, m - 2) * aiv;
    if (m >= 3) v += static_cast<double>(m - 1) * (m - 2) * t[m - 3];
    t[m] = v;
  }
  if (!derivative) return t[n];
  // S_n = Int x^n Ai' = (-a)^n Ai(-a) - n T_{n-1}
  if (n == 0) return aiv;
  return std::pow(-a, n) * aiv - n * t[n - 1];
}

}  // namespace biortho::quad
