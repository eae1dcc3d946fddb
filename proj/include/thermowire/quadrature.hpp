#pragma once

// Adaptive Gauss-Kronrod (7-15) quadrature with user breakpoints and a mapped
// tail for semi-infinite integrals.  Deterministic: identical inputs produce
// identical subdivision sequences and sums.

#include <functional>
#include <stdexcept>
#include <vector>

namespace thermowire {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_subdivisions = 10000;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
      throw std::invalid_argument("quadrature tolerances must be positive");
    }
    if (max_subdivisions < 100) {
      throw std::invalid_argument("max_subdivisions must be >= 100");
    }
  }
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
};

// Thrown when the subdivision budget is exhausted; carries the partial result.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadResult& partial() const { return partial_; }

 private:
  QuadResult partial_;
};

// Integral over [a, b], subdividing adaptively.  breakpoints inside (a, b)
// seed the initial interval list.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, const std::vector<double>& breakpoints,
                              const QuadratureConfig& cfg);

// Integral over [0, inf).  The finite part [0, omega_max] uses the given
// breakpoints; the tail beyond omega_max is folded through omega = omega_max/u
// onto u in (0, 1].
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double omega_max,
                                   const std::vector<double>& breakpoints,
                                   const QuadratureConfig& cfg);

}  // namespace thermowire
