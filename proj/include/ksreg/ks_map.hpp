#pragma once

// The map ks: T_* R^4 -> T_0 R^3 and its pullback identities.

#include <array>
#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "ksreg/invariants.hpp"
#include "ksreg/rational.hpp"
#include "ksreg/types.hpp"

namespace ksreg {

inline constexpr double kLevelSetTolerance = 1e-9;

/// ks written through the generators: x = (U2-K1, U3-K2, U4-K3),
/// y = (V2, V3, V4) / (H2 + V1).
template <class T>
PhasePoint6<T> ks_generator_form(const PhasePoint8<T>& z) {
  const GeneratorVector<T> g = eval_generators(z);
  const T r = g.H2 + g.V[0];
  if (r == T(0)) throw std::domain_error("ks: q = 0 is outside the domain");
  PhasePoint6<T> w;
  for (std::size_t i = 0; i < 3; ++i) {
    w.x[i] = g.U[i + 1] - g.K[i];
    w.y[i] = g.V[i + 1] / r;
  }
  return w;
}

/// ks in (q, p). Throws std::domain_error for q = 0. In exact arithmetic the
/// result is also checked against the generator form and a mismatch throws
/// std::logic_error; the floating-point gap is available from
/// ks_consistency_gap().
template <class T>
PhasePoint6<T> ks(const PhasePoint8<T>& z) {
  const auto& [q1, q2, q3, q4] = z.q;
  const auto& [p1, p2, p3, p4] = z.p;
  const T r = dot(z.q, z.q);
  if (r == T(0)) throw std::domain_error("ks: q = 0 is outside the domain");
  const T two(2);
  PhasePoint6<T> w;
  w.x = {two * (q1 * q3 + q2 * q4), two * (q1 * q4 - q2 * q3), q1 * q1 + q2 * q2 - q3 * q3 - q4 * q4};
  w.y = {(q1 * p3 + q2 * p4 + q3 * p1 + q4 * p2) / r, (q1 * p4 - q2 * p3 - q3 * p2 + q4 * p1) / r,
         (q1 * p1 + q2 * p2 - q3 * p3 - q4 * p4) / r};
  if constexpr (!std::is_floating_point_v<T>) {
    if (!(w == ks_generator_form(z))) throw std::logic_error("ks: polynomial and generator forms disagree");
  }
  return w;
}

/// Max coordinate gap between the two forms of ks in floating point.
double ks_consistency_gap(const Point8& z);

/// ks restricted to Xi^{-1}(0): the same formula with the guard |Xi| <= tol.
Point6 KS(const Point8& z, double tol = kLevelSetTolerance);

/// The flow of X_Xi: rotation by s in the (q1,q2), (q3,q4), (p1,p2), (p3,p4)
/// planes, (a, b) -> (a cos s - b sin s, a sin s + b cos s). ks is constant
/// along it.
Point8 ks_fiber_action(const Point8& z, double s);

/// Throws std::domain_error unless |H2 - 1| <= tol and |Xi| <= tol.
void require_unit_level_set(const Point8& z, double tol, const char* who);

/// Kepler-side quantities at ks(z) against their generator expressions.
/// The first three require z in J^{-1}(1, 0) within tol.
std::pair<double, double> pullback_kepler_hamiltonian(const Point8& z);
std::pair<Vec3<double>, Vec3<double>> pullback_angular_momentum(const Point8& z, double tol = kLevelSetTolerance);
std::pair<Vec3<double>, Vec3<double>> pullback_eccentricity(const Point8& z, double tol = kLevelSetTolerance);
std::pair<double, double> pullback_inner_product(const Point8& z, double tol = kLevelSetTolerance);

/// Rows: x1, x2, x3, y1, y2, y3; columns: q1..q4, p1..p4.
using Jacobian68 = std::array<std::array<double, 8>, 6>;
Jacobian68 ks_jacobian(const Point8& z);

using Matrix6 = std::array<std::array<double, 6>, 6>;

struct PoissonResidual {
  Matrix6 brackets{};  // {ks* w_i, ks* w_j} at z
  Matrix6 residual{};  // brackets minus [[0, 2I], [-2I, 0]]
  double max_xx = 0.0;
  double max_xy = 0.0;
  double max_yy = 0.0;
  [[nodiscard]] double max_abs() const { return std::fmax(max_xx, std::fmax(max_xy, max_yy)); }
};

/// Pulled-back structure matrix of ks at z against [[0, 2I3], [-2I3, 0]].
PoissonResidual poisson_property_residual(const Point8& z);

}  // namespace ksreg
