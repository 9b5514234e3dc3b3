#include "ksreg/ks_map.hpp"

#include <string>
#include <tuple>

#include "ksreg/kepler_dynamics.hpp"

namespace ksreg {

double ks_consistency_gap(const Point8& z) {
  return max_abs_diff(as_array(ks(z)), as_array(ks_generator_form(z)));
}

Point6 KS(const Point8& z, double tol) {
  const auto [h2, xi] = momentum_map(z);
  if (std::fabs(xi) > tol) throw std::domain_error("KS: Xi(z) is not zero");
  return ks(z);
}

Point8 ks_fiber_action(const Point8& z, double s) {
  const double c = std::cos(s);
  const double sn = std::sin(s);
  auto rot = [&](double a, double b) { return std::pair{a * c - b * sn, a * sn + b * c}; };
  Point8 out;
  std::tie(out.q[0], out.q[1]) = rot(z.q[0], z.q[1]);
  std::tie(out.q[2], out.q[3]) = rot(z.q[2], z.q[3]);
  std::tie(out.p[0], out.p[1]) = rot(z.p[0], z.p[1]);
  std::tie(out.p[2], out.p[3]) = rot(z.p[2], z.p[3]);
  return out;
}

void require_unit_level_set(const Point8& z, double tol, const char* who) {
  const auto [h2, xi] = momentum_map(z);
  if (std::fabs(h2 - 1.0) > tol || std::fabs(xi) > tol) {
    throw std::domain_error(std::string(who) + ": point is not on H2 = 1, Xi = 0");
  }
}

std::pair<double, double> pullback_kepler_hamiltonian(const Point8& z) {
  const Point6 w = ks(z);
  const GeneratorVector<double> g = eval_generators(z);
  return {preregularized_hamiltonian(w), g.H2 - 0.5 * g.Xi * g.Xi / (g.H2 + g.V[0])};
}

std::pair<Vec3<double>, Vec3<double>> pullback_angular_momentum(const Point8& z, double tol) {
  require_unit_level_set(z, tol, "pullback_angular_momentum");
  return {angular_momentum(ks(z)), eval_generators(z).L};
}

std::pair<Vec3<double>, Vec3<double>> pullback_eccentricity(const Point8& z, double tol) {
  require_unit_level_set(z, tol, "pullback_eccentricity");
  return {eccentricity(ks(z)), eval_generators(z).K};
}

std::pair<double, double> pullback_inner_product(const Point8& z, double tol) {
  require_unit_level_set(z, tol, "pullback_inner_product");
  const Point6 w = ks(z);
  return {dot(w.x, w.y), -eval_generators(z).U[0]};
}

Jacobian68 ks_jacobian(const Point8& z) {
  const auto& [q1, q2, q3, q4] = z.q;
  const auto& [p1, p2, p3, p4] = z.p;
  const double r = dot(z.q, z.q);
  if (r == 0.0) throw std::domain_error("ks_jacobian: q = 0 is outside the domain");
  Jacobian68 jac{};
  // x depends on q only.
  const std::array<std::array<double, 4>, 3> dx{{{2 * q3, 2 * q4, 2 * q1, 2 * q2},
                                                  {2 * q4, -2 * q3, -2 * q2, 2 * q1},
                                                  {2 * q1, 2 * q2, -2 * q3, -2 * q4}}};
  // y_j = N_j / <q,q>.
  const std::array<double, 3> num{q1 * p3 + q2 * p4 + q3 * p1 + q4 * p2, q1 * p4 - q2 * p3 - q3 * p2 + q4 * p1,
                                  q1 * p1 + q2 * p2 - q3 * p3 - q4 * p4};
  const std::array<std::array<double, 4>, 3> dn_dq{{{p3, p4, p1, p2}, {p4, -p3, -p2, p1}, {p1, p2, -p3, -p4}}};
  const std::array<std::array<double, 4>, 3> dn_dp{{{q3, q4, q1, q2}, {q4, -q3, -q2, q1}, {q1, q2, -q3, -q4}}};
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 4; ++k) {
      jac[j][k] = dx[j][k];
      jac[3 + j][k] = dn_dq[j][k] / r - 2.0 * num[j] * z.q[k] / (r * r);
      jac[3 + j][4 + k] = dn_dp[j][k] / r;
    }
  }
  return jac;
}

PoissonResidual poisson_property_residual(const Point8& z) {
  const Jacobian68 jac = ks_jacobian(z);
  PoissonResidual out;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 4; ++k) s += jac[i][k] * jac[j][4 + k] - jac[i][4 + k] * jac[j][k];
      out.brackets[i][j] = s;
      double target = 0.0;
      if (i < 3 && j == i + 3) target = 2.0;
      if (i >= 3 && j == i - 3) target = -2.0;
      out.residual[i][j] = s - target;
      const double a = std::fabs(out.residual[i][j]);
      if (i < 3 && j < 3) {
        out.max_xx = std::fmax(out.max_xx, a);
      } else if (i >= 3 && j >= 3) {
        out.max_yy = std::fmax(out.max_yy, a);
      } else {
        out.max_xy = std::fmax(out.max_xy, a);
      }
    }
  }
  return out;
}

}  // namespace ksreg
