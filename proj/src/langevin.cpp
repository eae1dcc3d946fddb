#include "thermowire/langevin.hpp"

#include <cmath>
#include <future>
#include <random>
#include <vector>

#include "thermowire/model.hpp"

namespace thermowire {

namespace {

constexpr int kBatchesPerReplica = 50;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct ReplicaStats {
  std::vector<double> batch_corr;
  std::vector<double> batch_var1;
  std::vector<double> batch_var2;
};

ReplicaStats run_replica(const SimConfig& c, std::uint64_t stream_seed,
                         std::int64_t burn_in) {
  std::mt19937_64 rng(stream_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const double l = c.inductance;
  const double m = c.mutual_inductance;
  const double det = l * l - m * m;
  // Linv = [[l, -m], [-m, l]] / det
  const double a = l / det;
  const double b = -m / det;
  const double r = c.resistance;
  const double sigma = std::sqrt(2.0 * c.kT * r * c.dt);

  double i1 = 0.0, i2 = 0.0;
  auto step = [&](std::int64_t idx) {
    const double e1 = -r * i1 * c.dt + sigma * gauss(rng);
    const double e2 = -r * i2 * c.dt + sigma * gauss(rng);
    i1 += a * e1 + b * e2;
    i2 += b * e1 + a * e2;
    if (!std::isfinite(i1) || !std::isfinite(i2)) {
      throw SimulationError("non-finite state at step " + std::to_string(idx));
    }
  };

  for (std::int64_t n = 0; n < burn_in; ++n) step(n);

  ReplicaStats stats;
  const std::int64_t batch_len = c.n_steps / kBatchesPerReplica;
  for (int bnum = 0; bnum < kBatchesPerReplica; ++bnum) {
    double s12 = 0.0, s11 = 0.0, s22 = 0.0;
    for (std::int64_t n = 0; n < batch_len; ++n) {
      step(burn_in + bnum * batch_len + n);
      s12 += i1 * i2;
      s11 += i1 * i1;
      s22 += i2 * i2;
    }
    stats.batch_corr.push_back(s12 / static_cast<double>(batch_len));
    stats.batch_var1.push_back(s11 / static_cast<double>(batch_len));
    stats.batch_var2.push_back(s22 / static_cast<double>(batch_len));
  }
  return stats;
}

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
};

MeanStderr pool(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n * (n - 1.0)))};
}

}  // namespace

void SimConfig::validate() const {
  if (!(inductance > 0.0) || std::abs(mutual_inductance) >= inductance) {
    throw CouplingBoundError("SimConfig requires |M| < L and L > 0");
  }
  if (!(resistance > 0.0)) throw DomainError("SimConfig requires R > 0");
  if (!(kT > 0.0)) throw DomainError("SimConfig requires kT > 0");
  const double tau = inductance / resistance;
  if (!(dt > 0.0) || dt >= 0.1 * tau) {
    throw DomainError("dt must satisfy 0 < dt < 0.1 * L/R");
  }
  if (n_steps * dt <= 10.0 * tau) {
    throw DomainError("n_steps must span more than 10 relaxation times");
  }
  if (burn_in > 0 && burn_in * dt < 5.0 * tau) {
    throw DomainError("burn_in must span at least 5 relaxation times");
  }
  if (n_replicas < 1) throw DomainError("n_replicas must be >= 1");
  if (n_steps < kBatchesPerReplica) {
    throw DomainError("n_steps too small for batch-means estimation");
  }
}

std::array<std::array<double, 2>, 2> equipartition_covariance(
    double inductance, double mutual_inductance, double kT) {
  if (!(inductance > 0.0) || std::abs(mutual_inductance) >= inductance) {
    throw CouplingBoundError("singular inductance matrix: need |M| < L");
  }
  const double det =
      inductance * inductance - mutual_inductance * mutual_inductance;
  const double d = kT * inductance / det;
  const double o = -kT * mutual_inductance / det;
  return {{{d, o}, {o, d}}};
}

LangevinEstimate simulate_correlator(const SimConfig& c) {
  c.validate();
  std::int64_t burn_in = c.burn_in;
  if (burn_in == 0) {
    burn_in = static_cast<std::int64_t>(
        std::ceil(10.0 * c.inductance / (c.resistance * c.dt)));
  }

  // replica seeds split deterministically from the master seed
  std::uint64_t state = c.seed;
  std::vector<std::uint64_t> seeds(c.n_replicas);
  for (auto& s : seeds) s = splitmix64(state);

  std::vector<std::future<ReplicaStats>> jobs;
  jobs.reserve(c.n_replicas);
  for (int k = 0; k < c.n_replicas; ++k) {
    jobs.push_back(std::async(std::launch::async, run_replica, c, seeds[k],
                              burn_in));
  }

  std::vector<double> corr, var1, var2;
  for (auto& j : jobs) {
    ReplicaStats s = j.get();
    corr.insert(corr.end(), s.batch_corr.begin(), s.batch_corr.end());
    var1.insert(var1.end(), s.batch_var1.begin(), s.batch_var1.end());
    var2.insert(var2.end(), s.batch_var2.begin(), s.batch_var2.end());
  }

  const MeanStderr mc = pool(corr);
  const MeanStderr m1 = pool(var1);
  const MeanStderr m2 = pool(var2);

  LangevinEstimate est;
  est.corr_12 = mc.mean;
  est.stderr_corr = mc.stderr_;
  est.var_1 = m1.mean;
  est.var_2 = m2.mean;
  est.stderr_var = m1.stderr_;
  est.n_effective = static_cast<std::int64_t>(corr.size());
  return est;
}

std::array<double, 3> oracle_force(const SimConfig& c,
                                   const std::array<double, 3>& grad_M) {
  const LangevinEstimate est = simulate_correlator(c);
  return {est.corr_12 * grad_M[0], est.corr_12 * grad_M[1],
          est.corr_12 * grad_M[2]};
}

}  // namespace thermowire
