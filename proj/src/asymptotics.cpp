#include "thermowire/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "thermowire/model.hpp"

namespace thermowire {
namespace asymptotics {

namespace {
void require_subcritical(double m) {
  if (!(m * m < 1.0)) {
    throw CouplingBoundError("classical limits require m^2 < 1");
  }
}
}  // namespace

double h_classical(double m) {
  require_subcritical(m);
  return 0.5 / (1.0 - m * m);
}

double g_classical(double m) {
  require_subcritical(m);
  return -0.5 * std::log1p(-m * m);
}

double nernst_entropy_limit(double m) { return -g_classical(m); }

double low_t_capacitive_free_energy(double t, double m, double omega_r) {
  constexpr double pi = std::numbers::pi;
  const double coeff = 16.0 * pi * pi * pi * pi * pi / 63.0;  // ~77.7517
  return -coeff * m * m * t * t * t * t * t * t * omega_r;
}

}  // namespace asymptotics
}  // namespace thermowire
