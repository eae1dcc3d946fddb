#pragma once

// Closed-form limits of the wire-wire thermal interaction, used as oracles by
// the spectral routines and the acceptance suite.
//
// In the classical regime (omega_R << omega_T) the force coefficient depends
// on m^2 only, H = f(m^2) with f(z) = 1/(2(1-z)).  This follows from the
// equipartition current covariance <i i^T> = kT * Linv for the coupled
// inductor energy form: <i1 i2> = -kT*M/(L^2-M^2), inserted into
// F = <i1 i2> grad M and matched against F = -kT*H*grad(m^2).  Integrating f
// over m^2 with g(0) = 0 gives the free-energy coefficient
// g(z) = -ln(1-z)/2.

namespace thermowire {
namespace asymptotics {

// f(m^2) = 1/(2(1 - m^2)); classical limit of the force coefficient H.
double h_classical(double m);

// g(m^2) = -ln(1 - m^2)/2; classical interaction free energy per k_B*T.
double g_classical(double m);

// Zero-temperature entropy limit of the no-capacitance model, -g(m^2), in
// units of k_B.  Strictly negative for 0 < |m| < 1.
double nernst_entropy_limit(double m);

// Leading low-temperature free energy with the capacitive cutoff,
//   F = -(16 pi^5/63) m^2 t^6 omega_r   (units hbar*omega_C; omega_r in
// units of omega_C).  Valid for omega_r << t << 1.
double low_t_capacitive_free_energy(double t, double m, double omega_r);

}  // namespace asymptotics
}  // namespace thermowire
