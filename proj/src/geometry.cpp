#include "thermowire/geometry.hpp"

#include <cmath>
#include <numbers>

namespace thermowire {

namespace {

constexpr double kGauss8X[8] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
constexpr double kGauss8W[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};
constexpr double kGauss4X[4] = {-0.8611363115940526, -0.3399810435848563,
                                0.3399810435848563, 0.8611363115940526};
constexpr double kGauss4W[4] = {0.3478548451374538, 0.6521451548625461,
                                0.6521451548625461, 0.3478548451374538};

Vec3 sub(const Vec3& u, const Vec3& v) {
  return {u[0] - v[0], u[1] - v[1], u[2] - v[2]};
}
Vec3 add(const Vec3& u, const Vec3& v) {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}
Vec3 scale(const Vec3& u, double s) { return {u[0] * s, u[1] * s, u[2] * s}; }
double dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}
double norm(const Vec3& u) { return std::sqrt(dot(u, u)); }

struct Segment {
  Vec3 p;  // start
  Vec3 d;  // end - start
};

std::vector<Segment> segments_of(const Polyline3& c, const Vec3& shift) {
  std::vector<Segment> segs;
  const size_t n = c.points.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    Vec3 a = add(c.points[i], shift);
    Vec3 b = add(c.points[i + 1], shift);
    segs.push_back({a, sub(b, a)});
  }
  if (c.closed && n > 2) {
    Vec3 a = add(c.points[n - 1], shift);
    Vec3 b = add(c.points[0], shift);
    segs.push_back({a, sub(b, a)});
  }
  return segs;
}

// closest distance between two segments (standard clamped-parameter method)
double segment_distance(const Segment& s1, const Segment& s2) {
  const Vec3 r = sub(s1.p, s2.p);
  const double a = dot(s1.d, s1.d);
  const double e = dot(s2.d, s2.d);
  const double f = dot(s2.d, r);
  const double c = dot(s1.d, r);
  const double b = dot(s1.d, s2.d);
  const double denom = a * e - b * b;
  double s = 0.0;
  if (denom > 1e-30 * a * e) {
    s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
  }
  double t = (e > 0.0) ? std::clamp((b * s + f) / e, 0.0, 1.0) : 0.0;
  s = (a > 0.0) ? std::clamp((b * t - c) / a, 0.0, 1.0) : 0.0;
  const Vec3 diff = sub(add(s1.p, scale(s1.d, s)), add(s2.p, scale(s2.d, t)));
  return norm(diff);
}

// fixed-order Neumann contribution of one segment pair
template <int N>
double pair_integral(const Segment& s1, const Segment& s2, const double* x,
                     const double* w) {
  const double dldl = dot(s1.d, s2.d);
  if (dldl == 0.0) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < N; ++i) {
    const Vec3 r1 = add(s1.p, scale(s1.d, 0.5 * (1.0 + x[i])));
    for (int j = 0; j < N; ++j) {
      const Vec3 r2 = add(s2.p, scale(s2.d, 0.5 * (1.0 + x[j])));
      sum += w[i] * w[j] / norm(sub(r1, r2));
    }
  }
  return 0.25 * dldl * sum;
}

void split(const Segment& s, Segment& lo, Segment& hi) {
  const Vec3 half = scale(s.d, 0.5);
  lo = {s.p, half};
  hi = {add(s.p, half), half};
}

// recursive subdivision until each panel pair sees a slowly varying kernel
void accumulate_pair(const Segment& s1, const Segment& s2,
                     const NeumannConfig& cfg, int depth, double& value,
                     double& error) {
  const double dist = segment_distance(s1, s2);
  if (dist < cfg.contact_cutoff) {
    throw SingularityError("wire curves closer than the contact cutoff");
  }
  const double len1 = norm(s1.d);
  const double len2 = norm(s2.d);
  const double longest = std::max(len1, len2);
  // kernel variation across a panel ~ len/dist; default bound subdivides
  // until panels are shorter than their distance
  const double bound = dist * std::min(1.0, 1e3 * cfg.panel_variation);
  if (longest > bound && depth < 40) {
    Segment lo, hi;
    if (len1 >= len2) {
      split(s1, lo, hi);
      accumulate_pair(lo, s2, cfg, depth + 1, value, error);
      accumulate_pair(hi, s2, cfg, depth + 1, value, error);
    } else {
      split(s2, lo, hi);
      accumulate_pair(s1, lo, cfg, depth + 1, value, error);
      accumulate_pair(s1, hi, cfg, depth + 1, value, error);
    }
    return;
  }
  const double fine = pair_integral<8>(s1, s2, kGauss8X, kGauss8W);
  const double coarse = pair_integral<4>(s1, s2, kGauss4X, kGauss4W);
  value += fine;
  error += std::abs(fine - coarse);
}

}  // namespace

void Polyline3::validate() const {
  if (points.size() < 2) {
    throw DomainError("Polyline3 needs at least 2 points");
  }
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    if (norm(sub(points[i + 1], points[i])) == 0.0) {
      throw DomainError("Polyline3 has coincident consecutive points");
    }
  }
  if (closed && points.size() > 2 &&
      norm(sub(points.front(), points.back())) == 0.0) {
    throw DomainError("closed Polyline3 must not repeat the first point");
  }
}

double Polyline3::length() const {
  double total = 0.0;
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    total += norm(sub(points[i + 1], points[i]));
  }
  if (closed && points.size() > 2) {
    total += norm(sub(points.front(), points.back()));
  }
  return total;
}

InductanceResult neumann_mutual_inductance(const Polyline3& c1,
                                           const Polyline3& c2, const Vec3& a,
                                           const NeumannConfig& cfg) {
  c1.validate();
  c2.validate();
  const auto segs1 = segments_of(c1, {0.0, 0.0, 0.0});
  const auto segs2 = segments_of(c2, a);
  double value = 0.0;
  double error = 0.0;
  for (const Segment& s1 : segs1) {
    for (const Segment& s2 : segs2) {
      accumulate_pair(s1, s2, cfg, 0, value, error);
    }
  }
  const double prefactor = constants::mu0 / (4.0 * std::numbers::pi);
  return {prefactor * value, prefactor * error};
}

namespace {

double m2_at(const Polyline3& c1, const Polyline3& c2, const Vec3& a,
             double inductance, const NeumannConfig& cfg) {
  const InductanceResult r = neumann_mutual_inductance(c1, c2, a, cfg);
  if (std::abs(r.mutual) >= inductance) {
    throw CouplingBoundError("computed |M| >= supplied L");
  }
  const double m = r.mutual / inductance;
  return m * m;
}

Vec3 grad_m2_step(const Polyline3& c1, const Polyline3& c2, const Vec3& a,
                  double inductance, double h, const NeumannConfig& cfg) {
  Vec3 g{};
  for (int k = 0; k < 3; ++k) {
    Vec3 ap = a, am = a;
    ap[k] += h;
    am[k] -= h;
    g[k] = (m2_at(c1, c2, ap, inductance, cfg) -
            m2_at(c1, c2, am, inductance, cfg)) /
           (2.0 * h);
  }
  return g;
}

}  // namespace

Vec3 grad_m2(const Polyline3& c1, const Polyline3& c2, const Vec3& a,
             double inductance, const NeumannConfig& cfg) {
  if (!(inductance > 0.0)) throw DomainError("grad_m2 requires L > 0");
  const double h = std::max(1e-4 * norm(a), 1e-7);
  const Vec3 coarse = grad_m2_step(c1, c2, a, inductance, h, cfg);
  const Vec3 fine = grad_m2_step(c1, c2, a, inductance, 0.5 * h, cfg);
  // one Richardson step from the halved stencil
  Vec3 g{};
  for (int k = 0; k < 3; ++k) {
    g[k] = (4.0 * fine[k] - coarse[k]) / 3.0;
  }
  return g;
}

Vec3 physical_force(const Polyline3& c1, const Polyline3& c2, const Vec3& a,
                    double inductance, double resistance,
                    std::optional<double> capacitance, double temperature,
                    const QuadratureConfig& q, const NeumannConfig& cfg) {
  const InductanceResult mi = neumann_mutual_inductance(c1, c2, a, cfg);
  PhysicalParams phys;
  phys.inductance = inductance;
  phys.mutual_inductance = mi.mutual;
  phys.resistance = resistance;
  phys.capacitance = capacitance;
  phys.temperature = temperature;
  phys.validate();
  if (temperature == 0.0 || (resistance == 0.0 && !capacitance)) {
    return {0.0, 0.0, 0.0};  // no thermal noise / H vanishes identically
  }
  const ReducedWithRef red = to_reduced(phys);
  const ThermoResult h = h_factor(red.reduced, q);
  const Vec3 g = grad_m2(c1, c2, a, inductance, cfg);
  const double prefactor = -constants::k_boltzmann * temperature * h.value;
  return {prefactor * g[0], prefactor * g[1], prefactor * g[2]};
}

}  // namespace thermowire
