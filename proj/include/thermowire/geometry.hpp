#pragma once

// Mutual inductance of two filamentary wire curves via the Neumann double
// line integral
//   M = (mu0 / 4 pi) Int Int (dl1 . dl2) / |r1 - r2|
// and its use in converting the reduced force formula to newtons.  Curves
// are polylines; the displacement a is a rigid translation of the second
// curve.  Self-inductance L is caller-supplied: a filament has no finite
// self-inductance without a wire-radius model.

#include <array>
#include <optional>
#include <vector>

#include "thermowire/model.hpp"
#include "thermowire/quadrature.hpp"
#include "thermowire/spectral.hpp"

namespace thermowire {

using Vec3 = std::array<double, 3>;

struct Polyline3 {
  std::vector<Vec3> points;  // meters, >= 2, consecutive points distinct
  bool closed = false;

  void validate() const;
  double length() const;
};

struct InductanceResult {
  double mutual = 0.0;           // henry
  double quadrature_error = 0.0; // henry
};

// Thrown when the curves approach within the contact cutoff.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct NeumannConfig {
  double contact_cutoff = 1e-6;  // meters; closer pairs raise SingularityError
  // near-singular segment pairs are subdivided until the kernel variation per
  // panel falls below this relative bound
  double panel_variation = 1e-3;
};

// M(a) for curve c2 displaced rigidly by a.  Symmetric in (c1, c2).
InductanceResult neumann_mutual_inductance(const Polyline3& c1,
                                           const Polyline3& c2, const Vec3& a,
                                           const NeumannConfig& cfg = {});

// Central-difference gradient of m^2 = (M(a)/L)^2 with one step-halving
// convergence check.
Vec3 grad_m2(const Polyline3& c1, const Polyline3& c2, const Vec3& a,
             double inductance, const NeumannConfig& cfg = {});

// Physical thermal force on wire 2, F = -k_B T * H * grad(m^2), newtons.
Vec3 physical_force(const Polyline3& c1, const Polyline3& c2, const Vec3& a,
                    double inductance, double resistance,
                    std::optional<double> capacitance, double temperature,
                    const QuadratureConfig& q = {},
                    const NeumannConfig& cfg = {});

}  // namespace thermowire
