#pragma once

// Parameter-sweep machinery behind the CLI: grid generation, concurrent
// point evaluation with per-point error capture, and deterministic CSV
// emission (17 significant digits, LF line endings).

#include <iosfwd>
#include <string>
#include <vector>

#include "thermowire/model.hpp"
#include "thermowire/spectral.hpp"

namespace thermowire {

enum class Quantity { kH, kFInt, kFSelf, kSInt, kSTotal, kForce };

std::string quantity_name(Quantity q);
// true when the quantity carries a quadrature/differentiation error estimate
bool quantity_has_error(Quantity q);

struct SweepSpec {
  enum class Variable { kT, kM, kOmegaR };
  Variable variable = Variable::kT;
  double from = 0.0;
  double to = 1.0;
  int points = 2;
  bool log_scale = false;
  ReducedParams base;           // fixed parameters
  ResistanceModel resistance;   // omega_r(t) trajectory

  void validate() const;
};

struct RowValue {
  double value = 0.0;
  double error = 0.0;
};

struct SweepRow {
  double x = 0.0;               // swept variable value
  std::vector<RowValue> values; // one per requested quantity
  std::string failure;          // non-empty if this point failed
};

std::vector<double> sweep_grid(const SweepSpec& spec);

// Evaluate one parameter point.  dm2_da feeds the force quantity.
SweepRow evaluate_point(const ReducedParams& p, const ResistanceModel& rm,
                        const std::vector<Quantity>& quantities, double dm2_da,
                        const QuadratureConfig& q);

// Concurrent sweep; output order matches the grid regardless of worker count.
// workers <= 0 picks THERMOWIRE_WORKERS or hardware concurrency.
std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                const std::vector<Quantity>& quantities,
                                double dm2_da, const QuadratureConfig& q,
                                int workers = 0);

// include_errors appends an error column per estimated quantity plus a
// trailing per-row failure column; fig1 uses the bare pinned header.
void write_csv(std::ostream& os, const std::string& variable_name,
               const std::vector<double>& grid,
               const std::vector<Quantity>& quantities,
               const std::vector<SweepRow>& rows, bool include_errors = true);

// Fig.-1 configuration: m = 0.8, capacitive model (omega_c = 1),
// omega_r(t) = 5 t^2, t in [0.005, 2] over 400 log-spaced points.
SweepSpec fig1_spec();

int default_worker_count();

}  // namespace thermowire
