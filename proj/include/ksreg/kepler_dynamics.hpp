#pragma once

// Kepler problem at energy -1/2 and its preregularized form
//     Kpre(x, y) = |x| (|y|^2 + 1) / 2,
// conserved quantities, the Sundman time change and radial collision times.

#include <utility>
#include <vector>

#include "ksreg/integrator.hpp"
#include "ksreg/trajectory.hpp"
#include "ksreg/types.hpp"

namespace ksreg {

inline constexpr double kCollisionRadius = 1e-6;
/// Energy drifts are sampled only where |x| >= this: closer in, K = |y|^2/2 - 1/|x|
/// is a difference of two large terms and its rounding error grows like 1/|x|.
inline constexpr double kEnergySampleRadius = 0.1;

/// |y|^2 / 2 - 1 / |x|. Throws std::domain_error for x = 0.
double kepler_energy(const Point6& w);
/// |x| (|y|^2 + 1) / 2; defined everywhere.
double preregularized_hamiltonian(const Point6& w);
/// |x| (|y|^2 + k^2) / (2k), the energy -k^2/2 version. Throws for k <= 0.
double regularized_hamiltonian(const Point6& w, double k);
/// (x, y) -> (k x, y / k). Symplectic, and carries the energy -k^2/2
/// Hamiltonian onto the k = 1 one: regularized_hamiltonian(w, k) ==
/// preregularized_hamiltonian(symplectic_scaling(w, k)).
Point6 symplectic_scaling(const Point6& w, double k);

using Tangent6 = Vec<double, 6>;

/// X_Kpre from the gradient: dx/ds = |x| y, dy/ds = -(|y|^2 + 1) x / (2|x|).
Tangent6 preregularized_vector_field(const Point6& w);
/// The general reparametrized Kepler field at scale k:
///   dx/ds = (|x|/k) dK/dy,
///   dy/ds = -(|x|/k) dK/dx - (K + k^2/2) d(|x|/k)/dx.
/// For k = 1 it coincides with preregularized_vector_field everywhere.
Tangent6 reparametrized_kepler_field(const Point6& w, double k = 1.0);
/// The same without the energy term; equals the two above only on K = -k^2/2.
Tangent6 level_set_kepler_field(const Point6& w, double k = 1.0);
/// Newtonian Kepler field: dx/dt = y, dy/dt = -x / |x|^3.
Tangent6 kepler_vector_field(const Point6& w);

/// x cross y.
Vec3<double> angular_momentum(const Point6& w);
/// -x/|x| + y cross (x cross y).
Vec3<double> eccentricity(const Point6& w);

/// Samples of `traj_s` (a solution of X_Kpre in s, scaled by k) at physical
/// times t_grid, with t(0) = 0 at the first sample and dt/ds = |x| / k.
/// t(s) is accumulated by a Hermite-corrected trapezoid rule using
/// d|x|/ds = <x, y> along the field; states between samples are cubic
/// Hermite interpolants. Throws std::domain_error if any sample has
/// |x| <= kCollisionRadius, std::invalid_argument if a requested time lies
/// outside the covered range or k <= 0.
Trajectory6 sundman_reparametrize(const Trajectory6& traj_s, const std::vector<double>& t_grid, double k = 1.0);

/// Physical time elapsed along the s-trajectory at each of its samples.
std::vector<double> sundman_times(const Trajectory6& traj_s, double k = 1.0);

struct RadialState {
  double r = 0.0;
  double rdot = 0.0;
};

/// (dr/dt, drdot/dt) = (rdot, -1/r^2). Throws std::domain_error for r <= 0.
std::pair<double, double> radial_ode_rhs(const RadialState& s);

/// Time for a radial energy -1/2 orbit moving inward from r0 to reach r = 0:
/// pi - 2 atan(s0) - 2 s0 / (1 + s0^2), s0 = sqrt(2/r0 - 1). Throws
/// std::domain_error unless 0 < r0 <= 2.
double radial_collision_time(double r0);
/// The integral of dr / sqrt(2/r - 1) over [0, r0] by Gauss-Kronrod
/// quadrature after r = r0 sin^2(theta).
double radial_collision_time_quadrature(double r0);

struct RadialFall {
  double time = 0.0;     // first time with r <= kCollisionRadius
  double energy_drift = 0.0;  // max |rdot^2 / 2 - 1/r + 1/2| over steps with r >= kEnergySampleRadius
  IntegratorStats stats;
};
/// Integrates radial_ode_rhs from r0 with rdot = -sqrt(2/r0 - 1) until the
/// event r^2 <= kCollisionRadius^2.
RadialFall radial_collision_time_ode(double r0, const IntegratorOptions& opts = {});

/// Time from state w to collision on a radial orbit (J = 0) of energy -1/2,
/// chaining the inward fall time. Throws std::domain_error if J != 0 within
/// tol or the energy is not -1/2 within tol.
double radial_time_to_collision(const Point6& w, double tol = 1e-9);

}  // namespace ksreg
