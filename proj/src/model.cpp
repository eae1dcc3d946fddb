#include "thermowire/model.hpp"

#include <cmath>

namespace thermowire {

void ReducedParams::validate() const {
  if (!std::isfinite(m) || m * m >= 1.0) {
    throw CouplingBoundError("coupling m^2 must satisfy 0 <= m^2 < 1, got m = " +
                             std::to_string(m));
  }
  if (!std::isfinite(omega_r) || omega_r < 0.0) {
    throw DomainError("omega_r must be finite and >= 0");
  }
  if (omega_c && (!std::isfinite(*omega_c) || *omega_c <= 0.0)) {
    throw DomainError("omega_c must be finite and > 0 when present");
  }
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError("reduced temperature t must be finite and >= 0");
  }
}

void PhysicalParams::validate() const {
  if (!(inductance > 0.0) || !std::isfinite(inductance)) {
    throw DomainError("inductance L must be > 0");
  }
  if (std::abs(mutual_inductance) >= inductance) {
    throw CouplingBoundError("|M| must be strictly less than L");
  }
  if (resistance < 0.0 || !std::isfinite(resistance)) {
    throw DomainError("resistance R must be >= 0");
  }
  if (capacitance && !(*capacitance > 0.0)) {
    throw DomainError("capacitance C must be > 0 when present");
  }
  if (temperature < 0.0 || !std::isfinite(temperature)) {
    throw DomainError("temperature T must be >= 0");
  }
}

double bose_factor(double y) {
  if (!std::isfinite(y) || y < 0.0) {
    throw DomainError("bose_factor requires finite y >= 0");
  }
  // Series and closed form agree to ~1e-12 at the switchover.
  if (y < 1e-4) {
    return 1.0 - y / 2.0 + y * y / 12.0;
  }
  if (y > 700.0) {
    return y * std::exp(-y);  // expm1 would overflow
  }
  return y / std::expm1(y);
}

std::complex<double> response_denominator(double omega, const ReducedParams& p) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("response_denominator requires omega > 0");
  }
  std::complex<double> chi(p.omega_r, -omega);
  if (p.omega_c) {
    chi += std::complex<double>(0.0, *p.omega_c * *p.omega_c / omega);
  }
  return chi * chi + omega * omega * p.m * p.m;
}

ReducedWithRef to_reduced(const PhysicalParams& p,
                          std::optional<double> omega_ref_override) {
  p.validate();
  double omega_ref;
  if (p.capacitance) {
    omega_ref = 1.0 / std::sqrt(p.inductance * *p.capacitance);
  } else if (p.resistance > 0.0) {
    omega_ref = p.resistance / p.inductance;
  } else if (omega_ref_override) {
    omega_ref = *omega_ref_override;
  } else {
    throw DomainError(
        "no reference frequency: R = 0 and C absent; supply omega_ref "
        "explicitly");
  }
  if (omega_ref_override) {
    omega_ref = *omega_ref_override;
  }
  if (!(omega_ref > 0.0)) {
    throw DomainError("reference frequency must be > 0");
  }

  ReducedWithRef out;
  out.omega_ref = omega_ref;
  out.reduced.m = p.mutual_inductance / p.inductance;
  out.reduced.omega_r = p.resistance / p.inductance / omega_ref;
  if (p.capacitance) {
    out.reduced.omega_c =
        1.0 / std::sqrt(p.inductance * *p.capacitance) / omega_ref;
  }
  out.reduced.t = constants::k_boltzmann * p.temperature /
                  (constants::hbar * omega_ref);
  out.reduced.validate();
  return out;
}

PhysicalParams from_reduced(const ReducedParams& p, double omega_ref,
                            double inductance) {
  p.validate();
  if (!(omega_ref > 0.0) || !(inductance > 0.0)) {
    throw DomainError("from_reduced requires omega_ref > 0 and L > 0");
  }
  PhysicalParams out;
  out.inductance = inductance;
  out.mutual_inductance = p.m * inductance;
  out.resistance = p.omega_r * omega_ref * inductance;
  if (p.omega_c) {
    const double wc = *p.omega_c * omega_ref;
    out.capacitance = 1.0 / (inductance * wc * wc);
  }
  out.temperature =
      p.t * constants::hbar * omega_ref / constants::k_boltzmann;
  return out;
}

}  // namespace thermowire
