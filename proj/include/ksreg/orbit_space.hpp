#pragma once

// Semialgebraic description of R^8/S^1 in the generator coordinates
// (K, L, H2, Xi; U, V), the reduced momentum map onto the wedge
// W = {0 <= |xi| <= h}, and the fiber reconstructions over W.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "ksreg/invariants.hpp"
#include "ksreg/rational.hpp"
#include "ksreg/types.hpp"

namespace ksreg {

inline constexpr double kMembershipTolerance = 1e-9;

inline double abs_value(double v) { return std::fabs(v); }
inline double abs_value(const Rational& v) { return abs(v).to_double(); }
inline double as_double(double v) { return v; }
inline double as_double(const Rational& v) { return v.to_double(); }

inline constexpr std::size_t kNumRelations = 9;
inline constexpr std::array<std::string_view, kNumRelations> kRelationNames{
    "UU-(H2^2-Xi^2)",       "VV-(H2^2-Xi^2)",       "UV",
    "U2V1-U1V2-(L1Xi-K1H2)", "U3V1-U1V3-(L2Xi-K2H2)", "U4V1-U1V4-(L3Xi-K3H2)",
    "U4V3-U3V4-(K1Xi-L1H2)", "U2V4-U4V2-(K2Xi-L2H2)", "U3V2-U2V3-(K3Xi-L3H2)"};

template <class T>
struct RelationResidual {
  std::array<T, kNumRelations> eq{};
  bool h2_nonnegative = true;
  bool wedge_nonnegative = true;  // H2^2 - Xi^2 >= 0

  [[nodiscard]] double max_abs() const {
    double m = 0.0;
    for (const T& r : eq) m = std::fmax(m, abs_value(r));
    return m;
  }
  [[nodiscard]] bool on_orbit_space(double tol) const {
    return h2_nonnegative && wedge_nonnegative && max_abs() <= tol;
  }
};

/// The bilinears U_a V_b - U_b V_a paired with K (first three) and L (last three).
template <class T>
std::pair<Vec3<T>, Vec3<T>> uv_bilinears(const Vec4<T>& U, const Vec4<T>& V) {
  Vec3<T> b{U[1] * V[0] - U[0] * V[1], U[2] * V[0] - U[0] * V[2], U[3] * V[0] - U[0] * V[3]};
  Vec3<T> c{U[3] * V[2] - U[2] * V[3], U[1] * V[3] - U[3] * V[1], U[2] * V[1] - U[1] * V[2]};
  return {b, c};
}

template <class T>
RelationResidual<T> relation_residuals(const GeneratorVector<T>& g) {
  RelationResidual<T> r;
  const T wedge = g.H2 * g.H2 - g.Xi * g.Xi;
  r.eq[0] = dot(g.U, g.U) - wedge;
  r.eq[1] = dot(g.V, g.V) - wedge;
  r.eq[2] = dot(g.U, g.V);
  const auto [b, c] = uv_bilinears(g.U, g.V);
  for (std::size_t i = 0; i < 3; ++i) {
    r.eq[3 + i] = b[i] - (g.L[i] * g.Xi - g.K[i] * g.H2);
    r.eq[6 + i] = c[i] - (g.K[i] * g.Xi - g.L[i] * g.H2);
  }
  r.h2_nonnegative = !(g.H2 < T(0));
  r.wedge_nonnegative = !(wedge < T(0));
  return r;
}

/// Both sides of the Lagrange identity and of its consequences for (K, L).
template <class T>
struct LagrangeCheck {
  std::pair<T, T> lagrange;     // sum_{i<j} (U_i V_j - U_j V_i)^2 + <U,V>^2  vs  <U,U><V,V>
  std::pair<T, T> norms;        // |K|^2 + |L|^2  vs  H2^2 + Xi^2
  std::pair<T, T> inner;        // <K,L>  vs  Xi H2
  std::pair<T, T> substituted;  // (H2^2 - Xi^2)^2  vs  (|K|^2+|L|^2)(H2^2+Xi^2) - 4<K,L> Xi H2

  [[nodiscard]] double max_abs_gap() const {
    double m = 0.0;
    for (const auto* p : {&lagrange, &norms, &inner, &substituted}) m = std::fmax(m, abs_value(p->first - p->second));
    return m;
  }
};

template <class T>
LagrangeCheck<T> lagrange_identity_check(const GeneratorVector<T>& g) {
  LagrangeCheck<T> c;
  T sum(0);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const T m = g.U[i] * g.V[j] - g.U[j] * g.V[i];
      sum += m * m;
    }
  }
  const T uv = dot(g.U, g.V);
  c.lagrange = {sum + uv * uv, dot(g.U, g.U) * dot(g.V, g.V)};
  const T kl2 = dot(g.K, g.K) + dot(g.L, g.L);
  const T hx2 = g.H2 * g.H2 + g.Xi * g.Xi;
  const T kl = dot(g.K, g.L);
  c.norms = {kl2, hx2};
  c.inner = {kl, g.Xi * g.H2};
  const T w = g.H2 * g.H2 - g.Xi * g.Xi;
  c.substituted = {w * w, kl2 * hx2 - T(4) * kl * g.Xi * g.H2};
  return c;
}

template <class T>
struct WedgePoint {
  T h{};
  T xi{};
};

/// Projection (K, L, H2, Xi; U, V) -> (H2, Xi). Throws std::domain_error if
/// |Xi| > H2 + tol.
template <class T>
WedgePoint<T> reduced_momentum(const GeneratorVector<T>& g, double tol = kMembershipTolerance) {
  if (abs_value(g.Xi) - as_double(g.H2) > tol) throw std::domain_error("reduced_momentum: |Xi| > H2, point is outside the wedge");
  return {g.H2, g.Xi};
}

enum class ReducedSpaceType { ProductOfSpheres, SingleSphere, Point };

struct ReducedSpaceKind {
  ReducedSpaceType type;
  double r_plus = 0.0;   // (h + xi) / 2 for a product; h for a single sphere
  double r_minus = 0.0;  // (h - xi) / 2 for a product
};

/// Interior of W -> S^2 x S^2, boundary minus vertex -> S^2_h, vertex -> point.
/// Points with |h - |xi|| <= tol * max(1, h) count as boundary points.
ReducedSpaceKind classify_reduced_space(const WedgePoint<double>& w, double tol = kMembershipTolerance);

namespace detail {
template <class T>
void check_fiber_precondition(const Vec4<T>& U, const Vec4<T>& V, const T& h, double tol, const char* who) {
  if (!(h > T(0))) throw std::domain_error(std::string(who) + ": h must be positive");
  const double scale = tol * std::fmax(1.0, abs_value(h * h));
  const T h2 = h * h;
  if (abs_value(dot(U, U) - h2) > scale || abs_value(dot(V, V) - h2) > scale || abs_value(dot(U, V)) > scale) {
    throw std::domain_error(std::string(who) + ": (U, V) is not on <U,U> = h^2 = <V,V>, <U,V> = 0");
  }
}
}  // namespace detail

/// (K, L) over the interior fiber J^{-1}(h, 0):
///   K = -(U2V1-U1V2, U3V1-U1V3, U4V1-U1V4) / h,
///   L = -(U4V3-U3V4, U2V4-U4V2, U3V2-U2V3) / h.
template <class T>
std::pair<Vec3<T>, Vec3<T>> reconstruct_fiber_interior(const Vec4<T>& U, const Vec4<T>& V, const T& h,
                                                        double tol = kMembershipTolerance) {
  detail::check_fiber_precondition(U, V, h, tol, "reconstruct_fiber_interior");
  const auto [b, c] = uv_bilinears(U, V);
  Vec3<T> K, L;
  for (std::size_t i = 0; i < 3; ++i) {
    K[i] = -b[i] / h;
    L[i] = -c[i] / h;
  }
  return {K, L};
}

/// eta over the boundary fiber J^{-1}(h, sign h), read off the first
/// bilinear family: eta = -sign (U2V1-U1V2, U3V1-U1V3, U4V1-U1V4) / h.
template <class T>
Vec3<T> boundary_fiber_eta(const Vec4<T>& U, const Vec4<T>& V, const T& h, int sign) {
  const auto [b, c] = uv_bilinears(U, V);
  Vec3<T> eta;
  for (std::size_t i = 0; i < 3; ++i) eta[i] = T(-sign) * b[i] / h;
  return eta;
}

template <class T>
struct BoundaryFiber {
  Vec3<T> eta{};
  /// max_i |h^-1 (first bilinear)_i + sign h^-1 (second bilinear)_i|: the two
  /// expressions that the boundary formulas equate.
  double consistency_residual = 0.0;
  bool consistent = false;
};

/// Boundary reconstruction. Throws std::domain_error only when (U, V, h)
/// violates the shared precondition; an inconsistency between the paired
/// bilinear expressions is reported in the result. On M_{h,0} the Plucker
/// relations force <K,L> = 0, so the pairing generally fails there.
template <class T>
BoundaryFiber<T> reconstruct_fiber_boundary(const Vec4<T>& U, const Vec4<T>& V, const T& h, int sign,
                                            double tol = kMembershipTolerance) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("reconstruct_fiber_boundary: sign must be +1 or -1");
  detail::check_fiber_precondition(U, V, h, tol, "reconstruct_fiber_boundary");
  BoundaryFiber<T> out;
  out.eta = boundary_fiber_eta(U, V, h, sign);
  const auto [b, c] = uv_bilinears(U, V);
  double m = 0.0;
  for (std::size_t i = 0; i < 3; ++i) m = std::fmax(m, abs_value((b[i] + T(sign) * c[i]) / h));
  out.consistency_residual = m;
  out.consistent = m <= tol * std::fmax(1.0, abs_value(h));
  return out;
}

/// M_{h,0} -> T_h S^3_1, (U, V) -> (U / h, V).
template <class T>
std::pair<Vec4<T>, Vec4<T>> to_tangent_sphere_bundle(const Vec4<T>& U, const Vec4<T>& V, const T& h) {
  if (!(h > T(0))) throw std::domain_error("to_tangent_sphere_bundle: h must be positive");
  Vec4<T> u;
  for (std::size_t i = 0; i < 4; ++i) u[i] = U[i] / h;
  return {u, V};
}

}  // namespace ksreg
