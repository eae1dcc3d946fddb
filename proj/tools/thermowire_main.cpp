// thermowire command line: single-point evaluation, parameter sweeps, the
// Fig.-1 style entropy scan, the time-domain noise oracle, mutual-inductance
// evaluation for wire curves, and the self-validation suite.
//
// Exit codes: 0 success, 1 validation failure, 2 usage error, 3 numerical
// failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thermowire/geometry.hpp"
#include "thermowire/langevin.hpp"
#include "thermowire/model.hpp"
#include "thermowire/spectral.hpp"
#include "thermowire/sweep.hpp"
#include "thermowire/validation.hpp"

namespace tw = thermowire;
using nlohmann::json;

namespace {

struct ReducedFlags {
  double m = 0.0;
  double omega_r = 0.0;
  double omega_c = -1.0;  // < 0: absent
  double t = 0.0;
  // SI alternative
  bool si = false;
  double l = 0.0, m_henry = 0.0, r = 0.0, c = -1.0, temp = 0.0;

  tw::ReducedParams resolve() const {
    if (si) {
      tw::PhysicalParams phys;
      phys.inductance = l;
      phys.mutual_inductance = m_henry;
      phys.resistance = r;
      if (c > 0.0) phys.capacitance = c;
      phys.temperature = temp;
      return tw::to_reduced(phys).reduced;
    }
    tw::ReducedParams p;
    p.m = m;
    p.omega_r = omega_r;
    if (omega_c > 0.0) p.omega_c = omega_c;
    p.t = t;
    p.validate();
    return p;
  }
};

void add_reduced_flags(CLI::App* cmd, ReducedFlags& f) {
  cmd->add_option("--m", f.m, "coupling m = M/L");
  cmd->add_option("--omega-r", f.omega_r, "reduced relaxation frequency R/L");
  cmd->add_option("--omega-c", f.omega_c,
                  "reduced resonance frequency 1/sqrt(LC); omit for the "
                  "no-capacitance model");
  cmd->add_option("--t", f.t, "reduced temperature k_B T/(hbar omega_ref)");
  cmd->add_flag("--si", f.si, "interpret parameters as SI units");
  cmd->add_option("--l", f.l, "self-inductance L (henry, with --si)");
  cmd->add_option("--m-henry", f.m_henry, "mutual inductance M (henry)");
  cmd->add_option("--r", f.r, "resistance R (ohm, with --si)");
  cmd->add_option("--c", f.c, "capacitance C (farad, with --si)");
  cmd->add_option("--temp", f.temp, "temperature T (kelvin, with --si)");
}

tw::Quantity parse_quantity(const std::string& name) {
  if (name == "H") return tw::Quantity::kH;
  if (name == "F" || name == "F_int") return tw::Quantity::kFInt;
  if (name == "F_self") return tw::Quantity::kFSelf;
  if (name == "S" || name == "S_int") return tw::Quantity::kSInt;
  if (name == "S_total") return tw::Quantity::kSTotal;
  if (name == "force") return tw::Quantity::kForce;
  throw CLI::ValidationError("unknown quantity: " + name);
}

tw::Polyline3 load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file " + path);
  json doc = json::parse(in);
  if (doc.value("schema_version", 1) != 1) {
    throw std::runtime_error("unsupported curve schema_version in " + path);
  }
  tw::Polyline3 c;
  c.closed = doc.at("closed").get<bool>();
  for (const auto& p : doc.at("points")) {
    c.points.push_back({p.at(0).get<double>(), p.at(1).get<double>(),
                        p.at(2).get<double>()});
  }
  c.validate();
  return c;
}

json params_json(const tw::ReducedParams& p) {
  json j{{"m", p.m}, {"omega_r", p.omega_r}, {"t", p.t}};
  if (p.omega_c) j["omega_c"] = *p.omega_c;
  return j;
}

int cmd_point(const ReducedFlags& flags, const std::string& quantity,
              double dm2_da, double r_coeff, double r_power) {
  const tw::ReducedParams p = flags.resolve();
  tw::ResistanceModel rm = tw::ResistanceModel::fixed();
  if (r_coeff >= 0.0) rm = tw::ResistanceModel::power_law(r_coeff, r_power);
  const tw::Quantity q = parse_quantity(quantity);
  const tw::SweepRow row =
      tw::evaluate_point(p, rm, {q}, dm2_da, tw::QuadratureConfig{});
  if (!row.failure.empty()) {
    std::cerr << "numerical failure: " << row.failure << "\n";
    return 3;
  }
  json out{{"params", params_json(p)},
           {"quantity", tw::quantity_name(q)},
           {"value", row.values[0].value}};
  if (tw::quantity_has_error(q)) {
    out["abs_error_estimate"] = row.values[0].error;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int emit_sweep(const tw::SweepSpec& spec, const std::vector<tw::Quantity>& qty,
               double dm2_da, int workers, const std::string& var_name,
               bool include_errors, std::ostream& os) {
  const std::vector<double> grid = tw::sweep_grid(spec);
  const std::vector<tw::SweepRow> rows =
      tw::run_sweep(spec, qty, dm2_da, tw::QuadratureConfig{}, workers);
  tw::write_csv(os, var_name, grid, qty, rows, include_errors);
  for (const auto& row : rows) {
    if (row.failure.empty()) return 0;
  }
  std::cerr << "all sweep points failed\n";
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thermal interaction of two inductively coupled noisy wires"};
  app.require_subcommand(1);

  // point
  auto* point = app.add_subcommand("point", "evaluate one parameter point");
  ReducedFlags point_flags;
  add_reduced_flags(point, point_flags);
  std::string point_quantity = "H";
  double point_dm2 = 0.0;
  double point_rc = -1.0, point_rp = 2.0;
  point->add_option("--quantity", point_quantity,
                    "H, F, F_self, S, S_total or force");
  point->add_option("--dm2-da", point_dm2, "d(m^2)/da for the force quantity");
  point->add_option("--r-coeff", point_rc,
                    "power-law resistance omega_r(t) = c t^p: c");
  point->add_option("--r-power", point_rp, "power-law resistance exponent p");

  // fig1
  auto* fig1 = app.add_subcommand(
      "fig1", "free-energy/entropy scan vs t (CSV: t,F_int,F_self,S_int,S_total)");
  tw::SweepSpec fig1_base = tw::fig1_spec();
  double fig1_m = 0.8, fig1_rc = 5.0, fig1_rp = 2.0;
  int fig1_points = fig1_base.points;
  double fig1_tmin = fig1_base.from, fig1_tmax = fig1_base.to;
  int fig1_workers = 0;
  std::string fig1_out;
  fig1->add_option("--m", fig1_m, "coupling m");
  fig1->add_option("--r-coeff", fig1_rc, "resistance law coefficient");
  fig1->add_option("--r-power", fig1_rp, "resistance law exponent");
  fig1->add_option("--points", fig1_points, "grid size");
  fig1->add_option("--t-min", fig1_tmin, "lower t bound");
  fig1->add_option("--t-max", fig1_tmax, "upper t bound");
  fig1->add_option("--workers", fig1_workers, "worker threads (0: auto)");
  fig1->add_option("--output", fig1_out, "write CSV here instead of stdout");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "CSV sweep over t, m or omega_r");
  ReducedFlags sweep_flags;
  add_reduced_flags(sweep, sweep_flags);
  std::string sweep_var = "t", sweep_scale = "linear";
  double sweep_from = 0.0, sweep_to = 1.0;
  int sweep_points = 2, sweep_workers = 0;
  std::vector<std::string> sweep_qty{"H"};
  double sweep_dm2 = 0.0, sweep_rc = -1.0, sweep_rp = 2.0;
  std::string sweep_out;
  sweep->add_option("--variable", sweep_var, "t, m or omega_r")
      ->check(CLI::IsMember({"t", "m", "omega_r"}));
  sweep->add_option("--from", sweep_from)->required();
  sweep->add_option("--to", sweep_to)->required();
  sweep->add_option("--points", sweep_points)->required();
  sweep->add_option("--scale", sweep_scale)
      ->check(CLI::IsMember({"linear", "log"}));
  sweep->add_option("--quantity", sweep_qty, "quantities (repeatable)");
  sweep->add_option("--dm2-da", sweep_dm2, "d(m^2)/da for the force quantity");
  sweep->add_option("--r-coeff", sweep_rc, "power-law resistance coefficient");
  sweep->add_option("--r-power", sweep_rp, "power-law resistance exponent");
  sweep->add_option("--workers", sweep_workers, "worker threads (0: auto)");
  sweep->add_option("--output", sweep_out, "write CSV here instead of stdout");

  // oracle
  auto* oracle =
      app.add_subcommand("oracle", "time-domain Johnson-noise correlator");
  tw::SimConfig sim;
  double oracle_steps = static_cast<double>(sim.n_steps);
  double oracle_burn = 0.0;
  oracle->add_option("--l", sim.inductance, "self-inductance (henry)");
  oracle->add_option("--m-henry", sim.mutual_inductance,
                     "mutual inductance (henry)");
  oracle->add_option("--r", sim.resistance, "resistance (ohm)");
  oracle->add_option("--kt", sim.kT, "thermal energy k_B T (joule)");
  oracle->add_option("--dt", sim.dt, "time step (s)");
  oracle->add_option("--steps", oracle_steps, "sampled steps per replica");
  oracle->add_option("--burn-in", oracle_burn, "burn-in steps (0: auto)");
  oracle->add_option("--seed", sim.seed, "master RNG seed");
  oracle->add_option("--replicas", sim.n_replicas, "independent replicas");

  // mutual
  auto* mutual = app.add_subcommand(
      "mutual", "Neumann mutual inductance of two wire curves");
  std::string c1_path, c2_path;
  std::vector<double> disp{0.0, 0.0, 0.0};
  double mutual_l = -1.0;
  bool want_grad = false;
  mutual->add_option("--c1", c1_path, "curve JSON for wire 1")->required();
  mutual->add_option("--c2", c2_path, "curve JSON for wire 2")->required();
  mutual->add_option("--a", disp, "displacement of wire 2 (meters, 3 values)")
      ->expected(3);
  mutual->add_option("--l", mutual_l, "self-inductance for grad(m^2) (henry)");
  mutual->add_flag("--grad", want_grad, "also compute grad(m^2) (needs --l)");

  // validate
  auto* validate =
      app.add_subcommand("validate", "run the self-validation suite");
  tw::ValidationOptions vopts;
  bool validate_json = false;
  validate->add_option("--filter", vopts.filter,
                       "run only criteria whose name contains this");
  validate->add_option("--tighten", vopts.tighten,
                       "divide every tolerance by this factor");
  validate->add_flag("--json", validate_json, "emit the JSON report only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*point) {
      return cmd_point(point_flags, point_quantity, point_dm2, point_rc,
                       point_rp);
    }
    if (*fig1) {
      tw::SweepSpec spec = fig1_base;
      spec.base.m = fig1_m;
      spec.points = fig1_points;
      spec.from = fig1_tmin;
      spec.to = fig1_tmax;
      spec.resistance = tw::ResistanceModel::power_law(fig1_rc, fig1_rp);
      const std::vector<tw::Quantity> qty{
          tw::Quantity::kFInt, tw::Quantity::kFSelf, tw::Quantity::kSInt,
          tw::Quantity::kSTotal};
      std::ofstream file;
      if (!fig1_out.empty()) file.open(fig1_out);
      return emit_sweep(spec, qty, 0.0, fig1_workers, "t", false,
                        fig1_out.empty() ? std::cout : file);
    }
    if (*sweep) {
      tw::SweepSpec spec;
      spec.base = sweep_flags.resolve();
      spec.variable = sweep_var == "t" ? tw::SweepSpec::Variable::kT
                      : sweep_var == "m" ? tw::SweepSpec::Variable::kM
                                         : tw::SweepSpec::Variable::kOmegaR;
      spec.from = sweep_from;
      spec.to = sweep_to;
      spec.points = sweep_points;
      spec.log_scale = sweep_scale == "log";
      if (sweep_rc >= 0.0) {
        spec.resistance = tw::ResistanceModel::power_law(sweep_rc, sweep_rp);
      }
      std::vector<tw::Quantity> qty;
      for (const auto& name : sweep_qty) qty.push_back(parse_quantity(name));
      std::ofstream file;
      if (!sweep_out.empty()) file.open(sweep_out);
      return emit_sweep(spec, qty, sweep_dm2, sweep_workers, sweep_var, true,
                        sweep_out.empty() ? std::cout : file);
    }
    if (*oracle) {
      sim.n_steps = static_cast<std::int64_t>(oracle_steps);
      sim.burn_in = static_cast<std::int64_t>(oracle_burn);
      const tw::LangevinEstimate est = tw::simulate_correlator(sim);
      json out{{"config",
                {{"l", sim.inductance},
                 {"m_henry", sim.mutual_inductance},
                 {"r", sim.resistance},
                 {"kt", sim.kT},
                 {"dt", sim.dt},
                 {"steps", sim.n_steps},
                 {"burn_in", sim.burn_in},
                 {"seed", sim.seed},
                 {"replicas", sim.n_replicas}}},
               {"corr_12", est.corr_12},
               {"var_1", est.var_1},
               {"var_2", est.var_2},
               {"stderr_corr", est.stderr_corr},
               {"stderr_var", est.stderr_var},
               {"n_effective", est.n_effective},
               {"rng_algorithm", est.rng_algorithm}};
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*mutual) {
      const tw::Polyline3 c1 = load_curve(c1_path);
      const tw::Polyline3 c2 = load_curve(c2_path);
      const tw::Vec3 a{disp[0], disp[1], disp[2]};
      const tw::InductanceResult mi = tw::neumann_mutual_inductance(c1, c2, a);
      json out{{"mutual_henry", mi.mutual},
               {"quadrature_error_henry", mi.quadrature_error}};
      if (want_grad) {
        if (!(mutual_l > 0.0)) {
          std::cerr << "--grad requires --l > 0\n";
          return 2;
        }
        const tw::Vec3 g = tw::grad_m2(c1, c2, a, mutual_l);
        out["grad_m2_per_meter"] = {g[0], g[1], g[2]};
      }
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*validate) {
      const std::vector<tw::CriterionResult> results = tw::run_validation(vopts);
      bool all_ok = true;
      json report = json::array();
      for (const auto& r : results) {
        all_ok = all_ok && r.passed;
        report.push_back(
            {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        if (!validate_json) {
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": "
                    << r.detail << "\n";
        }
      }
      if (validate_json) {
        std::cout << json{{"criteria", report}, {"all_passed", all_ok}}.dump()
                  << "\n";
      } else {
        std::cout << (all_ok ? "all criteria passed" : "FAILURES present")
                  << "\n";
      }
      return all_ok ? 0 : 1;
    }
  } catch (const tw::DomainError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
