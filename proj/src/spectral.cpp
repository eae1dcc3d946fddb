#include "thermowire/spectral.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>

namespace thermowire {

namespace {

constexpr double kPi = std::numbers::pi;

// Characteristic frequencies of the integrand: thermal and relaxation scales
// plus the resonance band edges omega_c/sqrt(1 -+ m), which sharpen as
// omega_r -> 0.
std::vector<double> split_points(const ReducedParams& p) {
  std::vector<double> pts{p.omega_r, p.t};
  if (p.omega_c) {
    const double wc = *p.omega_c;
    const double am = std::abs(p.m);
    const double lo = wc / std::sqrt(1.0 + am);
    const double hi = wc / std::sqrt(1.0 - am);
    for (double e : {lo, wc, hi}) {
      pts.push_back(e);
      pts.push_back(e - 10.0 * p.omega_r);
      pts.push_back(e + 10.0 * p.omega_r);
      pts.push_back(e - p.omega_r);
      pts.push_back(e + p.omega_r);
    }
  }
  pts.erase(std::remove_if(pts.begin(), pts.end(),
                           [](double x) { return !(x > 0.0); }),
            pts.end());
  std::sort(pts.begin(), pts.end());
  return pts;
}

double omega_cutoff(const ReducedParams& p) {
  return 50.0 * std::max({p.t, p.omega_r, p.omega_c.value_or(0.0)});
}

}  // namespace

double spectral_density(double omega, const ReducedParams& p,
                        SpectralDensityKind which) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("spectral_density requires omega > 0");
  }
  if (p.t <= 0.0) return 0.0;
  const double occupation = bose_factor(omega / p.t);
  if (occupation == 0.0) return 0.0;

  if (which == SpectralDensityKind::kHIntegrand) {
    const std::complex<double> d = response_denominator(omega, p);
    const double n = std::norm(d);
    if (n == 0.0) return 0.0;
    const double im_inv = -d.imag() / n;
    return omega * occupation * im_inv / kPi;
  }

  // free-energy integrand: Im log[1 + (omega*m/chi)^2] as the principal-value
  // argument of the full complex expression
  std::complex<double> chi(p.omega_r, -omega);
  if (p.omega_c) {
    chi += std::complex<double>(0.0, *p.omega_c * *p.omega_c / omega);
  }
  const double nchi = std::norm(chi);
  if (nchi == 0.0) return 0.0;
  const std::complex<double> z =
      (omega * p.m) * (omega * p.m) / (chi * chi);
  const std::complex<double> w = 1.0 + z;
  const double im_log = std::arg(w);
#ifndef NDEBUG
  if (!p.omega_c) {
    assert(w.imag() >= -1e-12);  // positive definite without capacitance
  }
#endif
  return p.t * occupation * im_log / (omega * kPi);
}

ThermoResult h_factor(const ReducedParams& p, const QuadratureConfig& q) {
  p.validate();
  q.validate();
  if (p.t == 0.0 || p.omega_r == 0.0) return {0.0, 0.0};
  auto f = [&p](double w) {
    return spectral_density(w, p, SpectralDensityKind::kHIntegrand);
  };
  QuadResult r = integrate_semi_infinite(f, omega_cutoff(p), split_points(p), q);
  return {r.value, r.abs_error};
}

ThermoResult force_reduced(const ReducedParams& p, double dm2_da,
                           const QuadratureConfig& q) {
  if (dm2_da == 0.0) {
    p.validate();
    return {0.0, 0.0};
  }
  ThermoResult h = h_factor(p, q);
  return {-h.value * dm2_da, std::abs(dm2_da) * h.abs_error_estimate};
}

ThermoResult interaction_free_energy(const ReducedParams& p,
                                     const QuadratureConfig& q) {
  p.validate();
  q.validate();
  if (p.t == 0.0 || p.m == 0.0) return {0.0, 0.0};
  auto f = [&p](double w) {
    return spectral_density(w, p, SpectralDensityKind::kFreeEnergyIntegrand);
  };
  QuadResult r = integrate_semi_infinite(f, omega_cutoff(p), split_points(p), q);
  return {r.value, r.abs_error};
}

double self_free_energy(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError("self_free_energy requires t >= 0");
  }
  if (t == 0.0) return 0.0;
  return t * std::log1p(-std::exp(-1.0 / t));
}

double self_entropy(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError("self_entropy requires t >= 0");
  }
  if (t == 0.0) return 0.0;
  const double x = 1.0 / t;
  double occ = 0.0;
  if (x < 700.0) occ = x / std::expm1(x);
  return -std::log1p(-std::exp(-x)) + occ;
}

namespace {

// free energy along the resistance-model trajectory
double free_energy_on_trajectory(double t, const ReducedParams& base,
                                 const ResistanceModel& rm,
                                 const QuadratureConfig& q,
                                 double* quad_err) {
  ReducedParams p = base;
  p.t = t;
  p.omega_r = rm.omega_r_at(t, base.omega_r);
  ThermoResult f = interaction_free_energy(p, q);
  if (quad_err) *quad_err = std::max(*quad_err, f.abs_error_estimate);
  return f.value;
}

// 5-point central first derivative
double stencil5(const std::function<double(double)>& f, double t, double h) {
  return (-f(t + 2.0 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2.0 * h)) /
         (12.0 * h);
}

}  // namespace

ThermoResult interaction_entropy(const ReducedParams& p,
                                 const ResistanceModel& rm,
                                 const QuadratureConfig& q) {
  p.validate();
  if (!(p.t > 0.0)) {
    throw DomainError("interaction_entropy requires t > 0");
  }
  if (p.m == 0.0) return {0.0, 0.0};

  double h = std::max(1e-3 * p.t, 1e-6);
  if (2.0 * h >= p.t) h = p.t / 4.0;  // keep the stencil inside t > 0

  double quad_err = 0.0;
  auto phi = [&](double t) {
    return free_energy_on_trajectory(t, p, rm, q, &quad_err);
  };
  const double d_h = stencil5(phi, p.t, h);
  const double d_h2 = stencil5(phi, p.t, 0.5 * h);
  const double d = (16.0 * d_h2 - d_h) / 15.0;  // one Richardson step

  double err = std::abs(d_h2 - d_h) + quad_err / h;
  if (h < 64.0 * std::numeric_limits<double>::epsilon() * p.t) {
    err += std::abs(d);  // step underflow: widen rather than report garbage
  }
  return {-d, err};
}

ThermoResult total_entropy(const ReducedParams& p, const ResistanceModel& rm,
                           const QuadratureConfig& q) {
  p.validate();
  if (!p.omega_c) {
    throw DomainError("total_entropy requires the capacitive model");
  }
  ThermoResult s_int = interaction_entropy(p, rm, q);
  // self entropy uses the temperature in omega_C units
  const double s_self = self_entropy(p.t / *p.omega_c);
  return {s_int.value + 2.0 * s_self, s_int.abs_error_estimate};
}

}  // namespace thermowire
