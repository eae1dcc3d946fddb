#pragma once

// Spectral integrals of the coupled-wire model: force coefficient H,
// interaction free energy, self free energy, and entropies by temperature
// differentiation.  All frequencies in units of omega_ref; free energies in
// units of hbar*omega_ref; entropies in units of k_B.

#include <cmath>

#include "thermowire/model.hpp"
#include "thermowire/quadrature.hpp"

namespace thermowire {

// Temperature dependence of the reduced relaxation frequency, used when
// differentiating along a physical trajectory.  The power law
// omega_r(t) = c * t^p with c = 5, p = 2 models a clean metal whose
// resistance falls as T^2.
struct ResistanceModel {
  enum class Kind { kFixed, kPowerLaw };
  Kind kind = Kind::kFixed;
  double coefficient = 0.0;  // c >= 0 (power law)
  double exponent = 0.0;     // p >= 0 (power law)

  static ResistanceModel fixed() { return {}; }
  static ResistanceModel power_law(double c, double p) {
    return {Kind::kPowerLaw, c, p};
  }

  // omega_r at reduced temperature t; fallback is the fixed value carried by
  // the parameter set.
  double omega_r_at(double t, double fixed_value) const {
    if (kind == Kind::kFixed) return fixed_value;
    double v = coefficient;
    if (exponent != 0.0) {
      double acc = 1.0;
      // exact small integer powers keep sweep output bit-stable
      if (exponent == 2.0) {
        acc = t * t;
      } else {
        acc = std::pow(t, exponent);
      }
      v *= acc;
    }
    return v;
  }
};

enum class SpectralDensityKind { kHIntegrand, kFreeEnergyIntegrand };

// Pointwise integrand of h_factor / interaction_free_energy at frequency
// omega (units omega_ref).  Diagnostic surface; integrating it reproduces the
// corresponding operation.
double spectral_density(double omega, const ReducedParams& p,
                        SpectralDensityKind which);

// Force coefficient H (Eq.-(8)-type spectral integral):
//   H = (1/pi) Int_0^inf dw w E(w/t) Im[1/D(w)].
// Exactly 0 when t = 0 or omega_r = 0.
ThermoResult h_factor(const ReducedParams& p, const QuadratureConfig& q = {});

// Reduced force along a displacement axis: F = -H * d(m^2)/da, in units of
// k_B*T per unit length.  Positive (repulsive) when d(m^2)/da < 0.
ThermoResult force_reduced(const ReducedParams& p, double dm2_da,
                           const QuadratureConfig& q = {});

// Interaction free energy in units hbar*omega_ref:
//   F = (t/pi) Int_0^inf (dw/w) E(w/t) Im log[1 + (w m / chi(w))^2].
ThermoResult interaction_free_energy(const ReducedParams& p,
                                     const QuadratureConfig& q = {});

// Free energy of a single RLC wire, t*log(1 - exp(-1/t)), units hbar*omega_C.
double self_free_energy(double t);

// Entropy of a single RLC wire, -dF_self/dT, units k_B (analytic derivative).
double self_entropy(double t);

// S = -dF/dT by Richardson-extrapolated central differences in t, with
// omega_r(t) chained through the resistance model.  Units k_B.
ThermoResult interaction_entropy(const ReducedParams& p,
                                 const ResistanceModel& rm,
                                 const QuadratureConfig& q = {});

// S_total = S_interaction + 2 * S_self; requires the capacitive model.
ThermoResult total_entropy(const ReducedParams& p, const ResistanceModel& rm,
                           const QuadratureConfig& q = {});

}  // namespace thermowire
