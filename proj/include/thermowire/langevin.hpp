#pragma once

// Time-domain oracle for the coupled-wire model: integrates the linear
// circuit equations
//   Lmat * di/dt = -R * i + emf(t),   Lmat = [[L, M], [M, L]]
// with independent white-noise e.m.f.s in each wire and estimates the
// stationary current correlator <i1 i2>.
//
// Noise normalization: the Johnson spectrum with Fourier kernel e^{i w t}
// reduces, in the classical limit E -> 1, to
//   <emf_i(t) emf_j(t')> = 2 kT R delta(t - t') delta_ij,
// so each Euler-Maruyama step adds an independent Gaussian of variance
// 2 kT R dt per wire.  The stationary covariance is the equipartition value
// kT * Lmat^-1.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace thermowire {

// Non-finite state encountered while stepping; message carries the step index.
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimConfig {
  double inductance = 1.0;         // L, henry
  double mutual_inductance = 0.0;  // M, henry, |M| < L
  double resistance = 0.1;         // R, ohm, > 0
  double kT = 1.0;                 // joule, > 0
  double dt = 0.02;                // seconds, < 0.1 * L/R
  std::int64_t n_steps = 2'000'000;   // sampled steps per replica
  std::int64_t burn_in = 0;           // 0: auto, 10 relaxation times
  std::uint64_t seed = 1;
  int n_replicas = 8;

  void validate() const;
};

struct LangevinEstimate {
  double corr_12 = 0.0;      // <i1 i2>, ampere^2
  double var_1 = 0.0;        // <i1^2>
  double var_2 = 0.0;        // <i2^2>
  double stderr_corr = 0.0;  // batch-means standard error of corr_12
  double stderr_var = 0.0;   // batch-means standard error of var_1
  std::int64_t n_effective = 0;  // number of batch means pooled
  std::string rng_algorithm = "mt19937_64/splitmix64-streams";
};

// Equilibrium current covariance kT * Lmat^-1:
//   kT/(L^2 - M^2) * [[L, -M], [-M, L]].
std::array<std::array<double, 2>, 2> equipartition_covariance(
    double inductance, double mutual_inductance, double kT);

// Euler-Maruyama estimate of the stationary correlator.  Deterministic for a
// fixed config; replicas use independent streams split from the master seed.
LangevinEstimate simulate_correlator(const SimConfig& c);

// Force on wire 2: F = <i1 i2> * grad_M (newton), grad in henry/meter.
std::array<double, 3> oracle_force(const SimConfig& c,
                                   const std::array<double, 3>& grad_M);

}  // namespace thermowire
