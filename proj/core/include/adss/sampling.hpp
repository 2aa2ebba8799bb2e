#pragma once

// Reproducible random points for property checks and the CLI.
// Uniform doubles are built from the raw 64-bit engine output so the streams
// agree across standard libraries.

#include <cstdint>
#include <random>

#include "adss/algebra.hpp"
#include "adss/solutions.hpp"
#include "adss/symplectic.hpp"

namespace adss {

class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
  /// [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// {lo, ..., hi}
  int integer(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

/// rapidity in [lo, hi], angle uniform.
UnitTimelikeVector random_timelike(PortableRng& rng, double lo = 0.0, double hi = 1.0);
/// Uniform on the sphere.
UnitSphereVector random_sphere(PortableRng& rng);

/// b in [1.05, 2], f in [b, f_max(b)], n in {1, 2, 3}.
SimpleFamilyPoint random_family_point(PortableRng& rng);

/// m_s, M in [0.5, 2], chi in [-pi, pi].
ParticleChartPoint random_particle_point(PortableRng& rng);

/// Interior point: (f, b) at least `margin` away from the region boundary,
/// |<l_s, r_s>| <= 0.95, n in {1, 2, 3}.
StringChartPoint random_string_point(PortableRng& rng, double margin = 0.05);

}  // namespace adss
