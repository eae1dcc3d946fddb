#include "thermowire/validation.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "thermowire/asymptotics.hpp"
#include "thermowire/geometry.hpp"
#include "thermowire/langevin.hpp"
#include "thermowire/model.hpp"
#include "thermowire/spectral.hpp"
#include "thermowire/sweep.hpp"

namespace thermowire {

namespace {

struct Check {
  std::ostringstream detail;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

ReducedParams classical_point(double m, double ratio) {
  ReducedParams p;
  p.m = m;
  p.omega_r = 1.0;
  p.t = 1.0 / ratio;  // omega_R/omega_T = ratio
  return p;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Maxwell's elliptic-integral closed form for two coaxial circular loops,
// independent of the Neumann path.
double coaxial_loops_mutual(double r1, double r2, double d) {
  const double k =
      std::sqrt(4.0 * r1 * r2 / ((r1 + r2) * (r1 + r2) + d * d));
  const double kk = std::comp_ellint_1(k);
  const double ee = std::comp_ellint_2(k);
  return constants::mu0 * std::sqrt(r1 * r2) *
         ((2.0 / k - k) * kk - (2.0 / k) * ee);
}

Polyline3 circle_loop(double radius, double z, int n) {
  Polyline3 c;
  c.closed = true;
  for (int i = 0; i < n; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / n;
    c.points.push_back({radius * std::cos(phi), radius * std::sin(phi), z});
  }
  return c;
}

CriterionResult criterion_classical_h(double tighten) {
  Check c;
  const double tol = 1e-3 / tighten;
  for (double m : {0.1, 0.3, 0.5, 0.8, 0.9}) {
    const ThermoResult h = h_factor(classical_point(m, 1e-5));
    const double ref = asymptotics::h_classical(m);
    const double dev = std::abs(h.value / ref - 1.0);
    c.detail << "m=" << m << " dev=" << num(dev) << "; ";
    c.expect(dev < tol, "m=" + num(m) + " rel dev " + num(dev));
  }
  // m = 0 against the fully analytic value 1/2; the genuine quantum
  // correction is ~1.07e-6 at ratio 1e-7 and ~1.2e-7 at ratio 1e-8, so the
  // 1e-6 comparison needs the deeper ratio
  const ThermoResult h0 = h_factor(classical_point(0.0, 1e-8));
  const double dev0 = std::abs(h0.value - 0.5) / 0.5;
  c.detail << "m=0 dev=" << num(dev0);
  c.expect(dev0 < 1e-6 / tighten, "m=0 dev " + num(dev0));
  return {"classical-h-closed-form", c.ok, c.detail.str()};
}

CriterionResult criterion_classical_free_energy(double tighten) {
  Check c;
  const double tol = 1e-3 / tighten;
  for (double m : {0.1, 0.3, 0.5, 0.8, 0.9}) {
    const ReducedParams p = classical_point(m, 1e-5);
    const ThermoResult f = interaction_free_energy(p);
    const double ref = asymptotics::g_classical(m);
    const double dev = std::abs(f.value / p.t / ref - 1.0);
    c.detail << "m=" << m << " dev=" << num(dev) << "; ";
    c.expect(dev < tol, "m=" + num(m) + " rel dev " + num(dev));
  }
  return {"classical-free-energy", c.ok, c.detail.str()};
}

CriterionResult criterion_nernst_violation(double tighten) {
  Check c;
  const double limit = -asymptotics::g_classical(0.8);  // -0.51083 k_B
  double dev = 0.0;
  for (double t : {1e3, 1e4, 1e5}) {
    ReducedParams p;
    p.m = 0.8;
    p.omega_r = 1.0;
    p.t = t;
    const ThermoResult s = interaction_entropy(p, ResistanceModel::fixed());
    dev = std::abs(s.value / limit - 1.0);
    c.detail << "t=" << t << " S=" << num(s.value) << " dev=" << num(dev)
             << "; ";
  }
  c.expect(dev < 0.01 / tighten,
           "S limit dev " + num(dev) + " vs " + num(limit));
  return {"nernst-violation-no-capacitance", c.ok, c.detail.str()};
}

CriterionResult criterion_zero_dissipation_discontinuity(double tighten) {
  Check c;
  // m = 0.5: at ratio 1e-4 the genuine quantum correction for m = 0.8
  // already exceeds 1e-3, so the check uses a moderate coupling
  const double ref = asymptotics::h_classical(0.5);
  for (double ratio : {1e-4, 1e-5, 1e-6}) {
    const ThermoResult h = h_factor(classical_point(0.5, ratio));
    const double dev = std::abs(h.value / ref - 1.0);
    c.detail << "ratio=" << ratio << " dev=" << num(dev) << "; ";
    c.expect(dev < 1e-3 / tighten, "ratio " + num(ratio) + " dev " + num(dev));
  }
  ReducedParams lossless;
  lossless.m = 0.8;
  lossless.omega_r = 0.0;
  lossless.t = 1.0;
  const ThermoResult h0 = h_factor(lossless);
  c.detail << "H(omega_r=0)=" << h0.value;
  c.expect(h0.value == 0.0, "H at omega_r = 0 not exactly zero");
  return {"zero-dissipation-discontinuity", c.ok, c.detail.str()};
}

CriterionResult criterion_capacitive_restoration(double tighten) {
  Check c;
  ReducedParams p;
  p.m = 0.8;
  p.omega_r = 1e-6;
  p.omega_c = 1.0;
  p.t = 0.1;
  const ThermoResult h = h_factor(p);
  const ThermoResult f = interaction_free_energy(p);
  // The omega_r -> 0 limit at fixed t is the lossless resonant circuit, whose
  // thermal interaction is nonzero: independent 40-digit quadrature gives
  // H -> -7.50152e-4 and F -> -4.89716e-5 at t = 0.1, m = 0.8, so the pinned
  // bounds below cannot be met by a faithful evaluation. The bounds are kept
  // pinned; the measured values document the actual limit.
  c.detail << "H=" << h.value << " (limit -7.50152e-4), F=" << f.value
           << " (limit -4.89716e-5); ";
  c.expect(std::abs(h.value) < 1e-4 / tighten, "|H| = " + num(h.value));
  c.expect(std::abs(f.value) < 1e-6 / tighten, "|F| = " + num(f.value));
  return {"capacitive-ideal-limit-restoration", c.ok, c.detail.str()};
}

CriterionResult criterion_low_t_law(double tighten) {
  Check c;
  // |F| drops below 1e-15 at the smallest t; the default abs_tol (1e-14)
  // would let the quadrature stop before resolving it
  QuadratureConfig tiny;
  tiny.abs_tol = 1e-22;
  double prev_dev = std::numeric_limits<double>::infinity();
  double dev = prev_dev;
  for (double t : {0.05, 0.02, 0.01, 0.005}) {
    ReducedParams p;
    p.m = 0.8;
    p.omega_r = 1e-3;
    p.omega_c = 1.0;
    p.t = t;
    const ThermoResult f = interaction_free_energy(p, tiny);
    const double law =
        asymptotics::low_t_capacitive_free_energy(t, 0.8, 1e-3);
    dev = std::abs(f.value / law - 1.0);
    c.detail << "t=" << t << " ratio=" << num(f.value / law) << "; ";
    c.expect(dev < prev_dev, "non-monotone approach at t = " + num(t));
    prev_dev = dev;
  }
  c.expect(dev < 0.01 / tighten, "final dev " + num(dev));
  return {"low-temperature-t6-law", c.ok, c.detail.str()};
}

CriterionResult criterion_fig1(double tighten) {
  Check c;
  const SweepSpec spec = fig1_spec();
  const std::vector<Quantity> qty{Quantity::kFInt, Quantity::kFSelf,
                                  Quantity::kSInt, Quantity::kSTotal};
  const std::vector<SweepRow> rows = run_sweep(spec, qty, 0.0, {});
  bool positive_slope = false;
  bool negative_s_int = false;
  double min_s_total = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < rows.size(); ++i) {
    c.expect(rows[i].failure.empty(), "point failure: " + rows[i].failure);
    if (!rows[i].failure.empty()) continue;
    if (i > 0 && rows[i].values[0].value > rows[i - 1].values[0].value) {
      positive_slope = true;
    }
    if (rows[i].values[2].value < 0.0) negative_s_int = true;
    min_s_total = std::min(min_s_total, rows[i].values[3].value);
  }
  c.detail << "min S_total=" << num(min_s_total)
           << " S_total(t_min)=" << num(rows.front().values[3].value);
  c.expect(positive_slope, "no positive-slope window in F_int(t)");
  c.expect(negative_s_int, "S_int never negative");
  c.expect(min_s_total >= -1e-6 / tighten,
           "min S_total = " + num(min_s_total));
  c.expect(std::abs(rows.front().values[3].value) < 1e-6 / tighten,
           "S_total does not vanish at the smallest t");
  return {"fig1-entropy-scan", c.ok, c.detail.str()};
}

CriterionResult criterion_langevin(double tighten) {
  Check c;
  SimConfig cfg;
  cfg.inductance = 1.0;
  cfg.mutual_inductance = 0.8;
  cfg.resistance = 0.1;
  cfg.kT = 1.0;
  cfg.dt = 0.01;
  cfg.n_steps = 8'000'000;
  cfg.n_replicas = 16;
  cfg.seed = 20260826;
  const LangevinEstimate est = simulate_correlator(cfg);
  const double target = -0.8 / (1.0 - 0.64);  // -2.2222
  c.detail << "corr=" << num(est.corr_12) << "+-" << num(est.stderr_corr)
           << "; ";
  c.expect(std::abs(est.corr_12 - target) < 3.0 * est.stderr_corr,
           "corr outside 3 sigma");
  c.expect(std::abs(est.corr_12 / target - 1.0) < 0.02 / tighten,
           "corr rel dev " + num(std::abs(est.corr_12 / target - 1.0)));

  // entrywise covariance check on 5 fixed pseudo-random configurations
  std::uint64_t mix = 7;
  auto next_u = [&mix]() {
    mix ^= mix << 13;
    mix ^= mix >> 7;
    mix ^= mix << 17;
    return (mix >> 11) * 0x1.0p-53;
  };
  for (int k = 0; k < 5; ++k) {
    SimConfig rc;
    rc.inductance = 0.5 + next_u();
    rc.mutual_inductance = (2.0 * next_u() - 1.0) * 0.8 * rc.inductance;
    rc.resistance = 0.05 + 0.2 * next_u();
    rc.kT = 0.5 + next_u();
    // dt scaled to the fast relaxation time (L - |M|)/R so the Euler
    // discretization bias stays well below the Monte-Carlo 3-sigma band
    rc.dt = 0.005 * (rc.inductance - std::abs(rc.mutual_inductance)) /
            rc.resistance;
    rc.n_steps = 1'000'000;
    rc.n_replicas = 8;
    rc.seed = 1000 + k;
    const LangevinEstimate e = simulate_correlator(rc);
    const auto cov = equipartition_covariance(rc.inductance,
                                              rc.mutual_inductance, rc.kT);
    const bool diag_ok =
        std::abs(e.var_1 - cov[0][0]) < 3.0 * e.stderr_var &&
        std::abs(e.var_2 - cov[1][1]) < 3.0 * e.stderr_var;
    const bool off_ok =
        std::abs(e.corr_12 - cov[0][1]) < 3.0 * e.stderr_corr;
    c.expect(diag_ok && off_ok, "config " + std::to_string(k) +
                                    " covariance outside 3 sigma");
  }
  return {"langevin-equipartition", c.ok, c.detail.str()};
}

CriterionResult criterion_cross_consistency(double tighten) {
  Check c;
  // dF/d(m^2) vs H, classical regime, 5-point stencil in m^2
  QuadratureConfig tight;
  tight.rel_tol = 1e-12;
  tight.abs_tol = 1e-16;
  tight.max_subdivisions = 50000;
  const double z0 = 0.64;
  const double t = 1e5;
  auto phi = [&](double z) {
    ReducedParams p;
    p.m = std::sqrt(z);
    p.omega_r = 1.0;
    p.t = t;
    return interaction_free_energy(p, tight).value / t;  // units k_B T
  };
  const double h = 1e-3;
  const double dfd =
      (-phi(z0 + 2 * h) + 8 * phi(z0 + h) - 8 * phi(z0 - h) + phi(z0 - 2 * h)) /
      (12 * h);
  ReducedParams p0;
  p0.m = 0.8;
  p0.omega_r = 1.0;
  p0.t = t;
  const ThermoResult hh = h_factor(p0, tight);
  const double dev = std::abs(dfd / hh.value - 1.0);
  c.detail << "dF/dm2=" << num(dfd) << " H=" << num(hh.value)
           << " dev=" << num(dev) << "; ";
  c.expect(dev < 1e-6 / tighten, "gradient consistency dev " + num(dev));

  // spectral force vs Langevin oracle force along x
  SimConfig sc;
  sc.inductance = 1.0;
  sc.mutual_inductance = 0.8;
  sc.resistance = 0.1;
  sc.kT = 1.0;
  sc.dt = 0.01;
  sc.n_steps = 4'000'000;
  sc.n_replicas = 16;
  sc.seed = 99;
  const double grad_m_x = -0.01;  // henry/meter, |M| decreasing along +x
  const LangevinEstimate est = simulate_correlator(sc);
  const double f_oracle = est.corr_12 * grad_m_x;
  // spectral: F = -kT * H * d(m^2)/da with d(m^2)/da = 2 M gradM / L^2
  const double dm2 = 2.0 * sc.mutual_inductance * grad_m_x /
                     (sc.inductance * sc.inductance);
  const double f_spectral = -sc.kT * asymptotics::h_classical(0.8) * dm2;
  const double sigma_f = 3.0 * est.stderr_corr * std::abs(grad_m_x);
  c.detail << "F_oracle=" << num(f_oracle) << " F_spectral=" << num(f_spectral);
  c.expect(std::abs(f_oracle - f_spectral) < sigma_f / tighten,
           "force mismatch beyond Monte-Carlo error");
  return {"cross-formula-consistency", c.ok, c.detail.str()};
}

CriterionResult criterion_geometry(double tighten) {
  Check c;
  const double r = 1.0;
  const Polyline3 loop1 = circle_loop(r, 0.0, 256);
  for (double d : {2.0, 5.0, 10.0}) {
    const Polyline3 loop2 = circle_loop(r, 0.0, 256);
    const InductanceResult mi =
        neumann_mutual_inductance(loop1, loop2, {0.0, 0.0, d});
    const double ref = coaxial_loops_mutual(r, r, d);
    const double dev = std::abs(mi.mutual / ref - 1.0);
    c.detail << "d=" << d << " dev=" << num(dev) << "; ";
    c.expect(dev < 0.005 / tighten, "d=" + num(d) + " dev " + num(dev));
  }
  // perpendicular straight segments: tangents orthogonal everywhere
  Polyline3 sx{{{-0.5, 0.0, 0.0}, {0.5, 0.0, 0.0}}, false};
  Polyline3 sy{{{0.0, -0.5, 0.0}, {0.0, 0.5, 0.0}}, false};
  const InductanceResult mp =
      neumann_mutual_inductance(sx, sy, {0.0, 0.0, 0.3});
  const double bound = 1e-12 * constants::mu0 * (sx.length() + sy.length());
  c.detail << "perp |M|=" << mp.mutual;
  c.expect(std::abs(mp.mutual) < bound / tighten, "perpendicular M nonzero");
  return {"geometry-neumann-oracle", c.ok, c.detail.str()};
}

}  // namespace

std::vector<CriterionResult> run_validation(const ValidationOptions& opts) {
  using Fn = std::function<CriterionResult(double)>;
  const std::vector<std::pair<std::string, Fn>> criteria{
      {"classical-h-closed-form", criterion_classical_h},
      {"classical-free-energy", criterion_classical_free_energy},
      {"nernst-violation-no-capacitance", criterion_nernst_violation},
      {"zero-dissipation-discontinuity",
       criterion_zero_dissipation_discontinuity},
      {"capacitive-ideal-limit-restoration", criterion_capacitive_restoration},
      {"low-temperature-t6-law", criterion_low_t_law},
      {"fig1-entropy-scan", criterion_fig1},
      {"langevin-equipartition", criterion_langevin},
      {"cross-formula-consistency", criterion_cross_consistency},
      {"geometry-neumann-oracle", criterion_geometry},
  };
  std::vector<CriterionResult> results;
  for (const auto& [name, fn] : criteria) {
    if (!opts.filter.empty() && name.find(opts.filter) == std::string::npos) {
      continue;
    }
    results.push_back(fn(opts.tighten));
  }
  return results;
}

}  // namespace thermowire
