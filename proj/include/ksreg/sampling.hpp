#pragma once

// Seeded random numbers and samplers for phase-space points.
//
// The generator is std::mt19937_64; uniforms take the top 53 bits and
// normals use the basic Box-Muller transform. Both are spelled out here
// instead of using the <random> distributions, whose output is
// implementation-defined, so sample sets can be reproduced elsewhere.

#include <cstdint>
#include <random>
#include <string_view>

#include "ksreg/rational.hpp"
#include "ksreg/types.hpp"

namespace ksreg {

class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64+u53+box-muller";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// n/d with |n| <= max_num and 1 <= d <= max_den.
  Rational rational(long max_num, long max_den) {
    const long n = integer(-max_num, max_num);
    const long d = integer(1, max_den);
    return Rational(n, d);
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Independent standard-normal coordinates.
Point8 random_point(Rng& rng);
/// Coordinates n/d with |n| <= max_num, 1 <= d <= max_den.
PhasePoint8<Rational> random_rational_point(Rng& rng, long max_num = 50, long max_den = 12);
/// Exact rational point with Xi = 0 (p projected off the gradient of Xi in p).
PhasePoint8<Rational> random_rational_xi_zero_point(Rng& rng, long max_num = 50, long max_den = 12);

/// Point on the momentum level set J^{-1}(h, xi), |xi| <= h, h > 0.
///
/// q is uniform on the unit sphere; p is split into a part orthogonal to
/// grad_p Xi = (-q2, q1, -q4, q3) and a multiple of it chosen so that
/// Xi / H2 = xi / h; finally (q, p) is rescaled jointly onto H2 = h. Since
/// both H2 and Xi are quadratic, the rescaling keeps the ratio.
Point8 sample_level_set(Rng& rng, double h, double xi);

/// Point of J^{-1}(1, 0) in the collision set: p = mu q with mu standard
/// normal, rescaled onto H2 = 1.
Point8 sample_collision_point(Rng& rng);

/// Point of J^{-1}(1, 0) with |L| = ell exactly (0 < ell <= 1), placed at an
/// apoapsis of its Kepler image: q = (a, 0, 0, 0), p = (0, 0, c, 0) with
/// a^2 + c^2 = 2, a c = ell, a >= c.
Point8 apoapsis_seed(double ell);

}  // namespace ksreg
