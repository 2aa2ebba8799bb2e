#include "adss/sampling.hpp"

#include <cmath>
#include <numbers>

#include "adss/bridge.hpp"

namespace adss {

int PortableRng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

UnitTimelikeVector random_timelike(PortableRng& rng, double lo, double hi) {
  const double psi = rng.uniform(lo, hi);
  return UnitTimelikeVector(psi, rng.uniform(0.0, 2.0 * std::numbers::pi));
}

UnitSphereVector random_sphere(PortableRng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  return UnitSphereVector(std::acos(z), rng.uniform(0.0, 2.0 * std::numbers::pi));
}

SimpleFamilyPoint random_family_point(PortableRng& rng) {
  SimpleFamilyPoint p;
  p.b = rng.uniform(1.05, 2.0);
  p.f = rng.uniform(p.b, f_max(p.b));
  p.n = rng.integer(1, 3);
  return p;
}

ParticleChartPoint random_particle_point(PortableRng& rng) {
  const UnitTimelikeVector l = random_timelike(rng);
  const UnitTimelikeVector r = random_timelike(rng);
  const UnitSphereVector ls = random_sphere(rng);
  const UnitSphereVector rs = random_sphere(rng);
  const double m_s = rng.uniform(0.5, 2.0);
  const double chi = rng.uniform(-std::numbers::pi, std::numbers::pi);
  const double M = rng.uniform(0.5, 2.0);
  return make_particle_point(l, r, ls, rs, m_s, chi, M);
}

StringChartPoint random_string_point(PortableRng& rng, double margin) {
  const UnitTimelikeVector l = random_timelike(rng, 0.1, 1.0);
  const UnitTimelikeVector r = random_timelike(rng, 0.1, 1.0);
  UnitSphereVector ls = random_sphere(rng), rs = random_sphere(rng);
  while (std::abs(inner(ls.element(), rs.element())) > 0.95) rs = random_sphere(rng);
  const double b = rng.uniform(1.0 + margin, 2.0);
  const double f = rng.uniform(b + margin, f_max(b) - margin);
  const double phi1 = rng.uniform(-std::numbers::pi, std::numbers::pi);
  const double phi2 = rng.uniform(-std::numbers::pi, std::numbers::pi);
  const int n = rng.integer(1, 3);
  return make_string_point(l, r, ls, rs, f, b, phi1, phi2, n);
}

}  // namespace adss
