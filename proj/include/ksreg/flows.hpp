#pragma once

// The harmonic-oscillator flow on R^8, its image on the orbit space, the
// collision set, and the comparison of the oscillator flow with the
// preregularized Kepler flow through ks.

#include <optional>
#include <string>
#include <vector>

#include "ksreg/integrator.hpp"
#include "ksreg/invariants.hpp"
#include "ksreg/kepler_dynamics.hpp"
#include "ksreg/ks_map.hpp"
#include "ksreg/trajectory.hpp"
#include "ksreg/types.hpp"

namespace ksreg {

/// (q, p) -> (c q + s p, -s q + c p). With rational c, s and c^2 + s^2 = 1
/// this is an exact rotation of the oscillator flow.
template <class T>
PhasePoint8<T> rotate_oscillator(const PhasePoint8<T>& z, const T& c, const T& s) {
  PhasePoint8<T> out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.q[i] = c * z.q[i] + s * z.p[i];
    out.p[i] = c * z.p[i] - s * z.q[i];
  }
  return out;
}

/// Time-t map of X_H2, in closed form.
Point8 oscillator_flow(const Point8& z, double t);

/// (K, L, H2, Xi) fixed, (U, V) -> (U cos u + V sin u, -U sin u + V cos u).
/// The image of oscillator_flow(z, t) is this map at u = 2t. Throws
/// std::domain_error if g is off the orbit space by more than tol (scaled by
/// max(1, H2^2)).
GeneratorVector<double> induced_flow_on_orbit_space(const GeneratorVector<double>& g, double u,
                                                   double tol = 1e-9);

/// |q ^ p|, from the six 2x2 minors: zero iff q and p are parallel.
double collinearity_gram(const Point8& z);

/// |L(z)|^2 <= tol^2, for z on J^{-1}(1, 0) within tol (else std::domain_error).
bool collision_set_membership(const Point8& z, double tol = 1e-9);

/// Smallest tau > 0 with q cos(tau) + p sin(tau) = 0, if q and p are parallel
/// (Gram determinant <= tol); solved in closed form. The result lies in (0, pi].
std::optional<double> first_collision_time(const Point8& z, double tol = 1e-9);

/// Kepler time elapsed on the ks image while the oscillator runs from 0 to T:
/// the integral of 2 |q(t)|^2, in closed form.
double physical_time(const Point8& z, double T);

struct HarnessOptions {
  IntegratorOptions integrator;
  std::size_t samples = 256;
  double collision_radius = kCollisionRadius;
  double level_set_tol = 1e-9;
};

struct HarnessReport {
  Point8 seed;
  double t_max = 0.0;
  double max_deviation = 0.0;
  std::optional<double> collision_time;
  IntegratorStats integrator_stats;
  Trajectory6 exact;       // ks of the closed-form oscillator flow
  Trajectory6 integrated;  // numerical solution of dw/dt = 2 X_Kpre
};

/// Compares A(t) = ks(oscillator_flow(z0, t)) with the numerical solution
/// B(t) of dw/dt = 2 X_Kpre(w), B(0) = ks(z0), at `samples` equally spaced
/// times in [0, t_max]; returns the largest phase-space distance. If B comes
/// within collision_radius of x = 0 the comparison stops there and the time
/// is reported. Throws std::domain_error if z0 is off J^{-1}(1, 0) or in the
/// collision set.
HarnessReport ks_relatedness_harness(const Point8& z0, double t_max, const HarnessOptions& opts = {});

std::string to_json(const HarnessReport& r);

// Near-collision benchmark ---------------------------------------------------

struct BenchmarkRow {
  double ell = 0.0;  // |L| of the seed
  std::string method;  // "raw_kepler" or "ks_regularized"
  std::size_t steps = 0;
  double max_energy_drift = 0.0;  // max |K + 1/2| over samples with |x| >= 0.1
  double periapsis_error = 0.0;   // |e(end) - e(start)|, drift of the periapsis direction vector
  bool failed = false;
  std::string failure;  // empty, "collision_guard", "step_budget", "step_underflow", "non_finite", "error"
};

struct BenchmarkOptions {
  IntegratorOptions integrator;  // max_steps is the shared step budget
  double error_threshold = 1e-2;
  double energy_sample_radius = kEnergySampleRadius;
};

/// One Kepler period (physical time 2 pi) from the apoapsis seed with |L| = ell:
/// raw Cartesian integration of the Kepler field with the |x| < 1e-6 guard,
/// and numerical integration of the oscillator over t in [0, pi] read
/// through ks.
std::vector<BenchmarkRow> run_benchmark(const std::vector<double>& ells, const BenchmarkOptions& opts = {});

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows);

}  // namespace ksreg
