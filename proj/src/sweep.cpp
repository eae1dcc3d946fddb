#include "thermowire/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace thermowire {

std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kH: return "H";
    case Quantity::kFInt: return "F_int";
    case Quantity::kFSelf: return "F_self";
    case Quantity::kSInt: return "S_int";
    case Quantity::kSTotal: return "S_total";
    case Quantity::kForce: return "force";
  }
  return "?";
}

bool quantity_has_error(Quantity q) { return q != Quantity::kFSelf; }

void SweepSpec::validate() const {
  if (!(from < to)) throw DomainError("sweep requires from < to");
  if (points < 2) throw DomainError("sweep requires points >= 2");
  if (log_scale && !(from > 0.0)) {
    throw DomainError("log-scale sweep requires from > 0");
  }
  base.validate();
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  spec.validate();
  std::vector<double> grid(spec.points);
  if (spec.log_scale) {
    const double la = std::log(spec.from);
    const double lb = std::log(spec.to);
    for (int i = 0; i < spec.points; ++i) {
      grid[i] = std::exp(la + (lb - la) * i / (spec.points - 1));
    }
    grid.back() = spec.to;
  } else {
    for (int i = 0; i < spec.points; ++i) {
      grid[i] = spec.from + (spec.to - spec.from) * i / (spec.points - 1);
    }
    grid.back() = spec.to;
  }
  return grid;
}

SweepRow evaluate_point(const ReducedParams& p, const ResistanceModel& rm,
                        const std::vector<Quantity>& quantities, double dm2_da,
                        const QuadratureConfig& q) {
  SweepRow row;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    ReducedParams eff = p;
    eff.omega_r = rm.omega_r_at(p.t, p.omega_r);
    for (Quantity qty : quantities) {
      switch (qty) {
        case Quantity::kH: {
          ThermoResult r = h_factor(eff, q);
          row.values.push_back({r.value, r.abs_error_estimate});
          break;
        }
        case Quantity::kFInt: {
          ThermoResult r = interaction_free_energy(eff, q);
          row.values.push_back({r.value, r.abs_error_estimate});
          break;
        }
        case Quantity::kFSelf: {
          if (!p.omega_c) {
            throw DomainError("F_self requires the capacitive model");
          }
          const double wc = *p.omega_c;
          row.values.push_back({wc * self_free_energy(p.t / wc), 0.0});
          break;
        }
        case Quantity::kSInt: {
          ThermoResult r = interaction_entropy(eff, rm, q);
          row.values.push_back({r.value, r.abs_error_estimate});
          break;
        }
        case Quantity::kSTotal: {
          ThermoResult r = total_entropy(eff, rm, q);
          row.values.push_back({r.value, r.abs_error_estimate});
          break;
        }
        case Quantity::kForce: {
          ThermoResult r = force_reduced(eff, dm2_da, q);
          row.values.push_back({r.value, r.abs_error_estimate});
          break;
        }
      }
    }
  } catch (const std::exception& e) {
    row.failure = e.what();
    row.values.assign(quantities.size(), {nan, nan});
  }
  return row;
}

int default_worker_count() {
  if (const char* env = std::getenv("THERMOWIRE_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                const std::vector<Quantity>& quantities,
                                double dm2_da, const QuadratureConfig& q,
                                int workers) {
  const std::vector<double> grid = sweep_grid(spec);
  if (workers <= 0) workers = default_worker_count();
  workers = std::min<int>(workers, spec.points);

  std::vector<SweepRow> rows(grid.size());
  auto point_params = [&spec](double x) {
    ReducedParams p = spec.base;
    switch (spec.variable) {
      case SweepSpec::Variable::kT: p.t = x; break;
      case SweepSpec::Variable::kM: p.m = x; break;
      case SweepSpec::Variable::kOmegaR: p.omega_r = x; break;
    }
    return p;
  };

  auto work = [&](int offset) {
    for (size_t i = offset; i < grid.size(); i += workers) {
      rows[i] = evaluate_point(point_params(grid[i]), spec.resistance,
                               quantities, dm2_da, q);
      rows[i].x = grid[i];
    }
  };
  std::vector<std::future<void>> jobs;
  for (int k = 1; k < workers; ++k) {
    jobs.push_back(std::async(std::launch::async, work, k));
  }
  work(0);
  for (auto& j : jobs) j.get();
  return rows;
}

namespace {
std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace

void write_csv(std::ostream& os, const std::string& variable_name,
               const std::vector<double>& grid,
               const std::vector<Quantity>& quantities,
               const std::vector<SweepRow>& rows, bool include_errors) {
  os << variable_name;
  for (Quantity q : quantities) {
    os << ',' << quantity_name(q);
    if (include_errors && quantity_has_error(q)) {
      os << ',' << quantity_name(q) << "_err";
    }
  }
  if (include_errors) os << ",error";
  os << '\n';
  for (size_t i = 0; i < rows.size(); ++i) {
    os << fmt17(grid[i]);
    for (size_t k = 0; k < quantities.size(); ++k) {
      os << ',' << fmt17(rows[i].values[k].value);
      if (include_errors && quantity_has_error(quantities[k])) {
        os << ',' << fmt17(rows[i].values[k].error);
      }
    }
    if (include_errors) os << ',' << rows[i].failure;
    os << '\n';
  }
}

SweepSpec fig1_spec() {
  SweepSpec spec;
  spec.variable = SweepSpec::Variable::kT;
  spec.from = 0.005;
  spec.to = 2.0;
  spec.points = 400;
  spec.log_scale = true;
  spec.base.m = 0.8;
  spec.base.omega_c = 1.0;
  spec.base.omega_r = 0.0;
  spec.resistance = ResistanceModel::power_law(5.0, 2.0);
  return spec;
}

}  // namespace thermowire
