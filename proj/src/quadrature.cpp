#include "thermowire/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace thermowire {

namespace {

// Gauss-Kronrod 7-15 abscissae/weights on [-1, 1] (positive half).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
// Gauss-7 weights, matching kXgk indices 1, 3, 5, 7.
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Interval {
  double a, b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Interval& x, const Interval& y) const {
    return x.error < y.error;
  }
};

Interval gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double result_k = kWgk[7] * fc;
  double result_g = kWg[3] * fc;
  double resabs = std::abs(result_k);
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double f1 = f(c - x);
    const double f2 = f(c + x);
    result_k += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) {
      result_g += kWg[j / 2] * (f1 + f2);
    }
  }
  Interval out{a, b, result_k * h, 0.0};
  const double diff = std::abs(result_k - result_g) * h;
  // QUADPACK-style sharpened estimate, floored by machine noise on |f|.
  const double scale = resabs * h;
  double err = diff;
  if (scale > 0.0 && diff > 0.0) {
    const double r = 200.0 * diff / scale;
    if (r < 1.0) err = scale * std::pow(r, 1.5);
  }
  out.error = std::max(err, scale * 1e-15);
  return out;
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, const std::vector<double>& breakpoints,
                              const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(b > a)) return {0.0, 0.0};

  std::vector<double> pts;
  pts.push_back(a);
  for (double p : breakpoints) {
    if (p > a && p < b) pts.push_back(p);
  }
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::priority_queue<Interval, std::vector<Interval>, ByError> heap;
  double total = 0.0;
  double total_err = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    Interval iv = gk15(f, pts[i], pts[i + 1]);
    total += iv.value;
    total_err += iv.error;
    heap.push(iv);
  }

  int splits = static_cast<int>(pts.size()) - 1;
  while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
    if (splits >= cfg.max_subdivisions) {
      throw ConvergenceError("quadrature did not converge within " +
                                 std::to_string(cfg.max_subdivisions) +
                                 " subdivisions",
                             QuadResult{total, total_err});
    }
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at floating-point resolution; accept its error
      break;
    }
    Interval left = gk15(f, worst.a, mid);
    Interval right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++splits;
  }
  return {total, total_err};
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double omega_max,
                                   const std::vector<double>& breakpoints,
                                   const QuadratureConfig& cfg) {
  QuadResult finite = integrate_adaptive(f, 0.0, omega_max, breakpoints, cfg);
  auto tail = [&f, omega_max](double u) {
    const double w = omega_max / u;
    return f(w) * omega_max / (u * u);
  };
  QuadResult tail_part = integrate_adaptive(tail, 0.0, 1.0, {}, cfg);
  return {finite.value + tail_part.value,
          finite.abs_error + tail_part.abs_error};
}

}  // namespace thermowire
