#pragma once

// Circuit parameter model for two inductively coupled noisy wires.
//
// Two identical wires (self-inductance L, resistance R, optional end-point
// capacitance C) couple through a mutual inductance M.  All spectral
// computations run in reduced units: frequencies are measured against a
// reference frequency omega_ref, which is 1/sqrt(L*C) when a capacitance is
// present and R/L otherwise.  Temperature enters as t = k_B*T/(hbar*omega_ref).
//
// Validity caveat: L, M and R are treated as frequency independent.  This is
// the thin-wire, low-frequency regime; checking that the regime applies is
// the caller's responsibility.

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace thermowire {

namespace constants {
inline constexpr double k_boltzmann = 1.380649e-23;     // J/K
inline constexpr double hbar = 1.054571817e-34;         // J*s
inline constexpr double mu0 = 1.25663706212e-6;         // H/m
}  // namespace constants

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CouplingBoundError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Dimensionless state consumed by every thermodynamic operation.
struct ReducedParams {
  double m = 0.0;        // coupling M/L, m^2 in [0, 1)
  double omega_r = 0.0;  // relaxation frequency R/L in units of omega_ref
  std::optional<double> omega_c;  // resonance 1/sqrt(LC), absent without C
  double t = 0.0;        // reduced temperature k_B*T/(hbar*omega_ref)

  void validate() const;
  bool has_capacitance() const { return omega_c.has_value(); }
};

// SI-unit circuit description.
struct PhysicalParams {
  double inductance = 0.0;          // L, henry, > 0
  double mutual_inductance = 0.0;   // M, henry, |M| < L
  double resistance = 0.0;          // R, ohm, >= 0
  std::optional<double> capacitance;  // C, farad, > 0 when present
  double temperature = 0.0;         // T, kelvin, >= 0

  void validate() const;
};

struct ThermoResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
};

// Thermal occupation factor E(y) = y/(e^y - 1); E(0) = 1.
double bose_factor(double y);

// Denominator D(omega) of the coupled-circuit response,
//   D = (omega_r - i*omega)^2 + omega^2 m^2,
// with omega_r - i*omega replaced by omega_r - i*omega + i*omega_c^2/omega
// when the capacitance is present.  omega in units of omega_ref.
std::complex<double> response_denominator(double omega, const ReducedParams& p);

// Unit reduction.  Returns the reduced parameters together with the reference
// frequency used (rad/s).  omega_ref_override covers the R = 0, no-C corner
// where no intrinsic scale exists.
struct ReducedWithRef {
  ReducedParams reduced;
  double omega_ref = 0.0;  // rad/s
};
ReducedWithRef to_reduced(const PhysicalParams& p,
                          std::optional<double> omega_ref_override = {});

// Inverse of to_reduced given the reference frequency and L.
PhysicalParams from_reduced(const ReducedParams& p, double omega_ref,
                            double inductance);

}  // namespace thermowire
