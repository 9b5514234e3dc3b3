#include "ksreg/kepler_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace ksreg {

namespace {

double nonzero_radius(const Vec3<double>& x, const char* who) {
  const double r = norm(x);
  if (r == 0.0) throw std::domain_error(std::string(who) + ": x = 0 is outside the domain");
  return r;
}

Point6 hermite_state(const Point6& a, const Tangent6& da, const Point6& b, const Tangent6& db, double h,
                     double u) {
  const double u2 = u * u, u3 = u2 * u;
  const double h00 = 2 * u3 - 3 * u2 + 1, h10 = u3 - 2 * u2 + u, h01 = -2 * u3 + 3 * u2, h11 = u3 - u2;
  Point6 w;
  for (std::size_t i = 0; i < 6; ++i) w[i] = h00 * a[i] + h10 * h * da[i] + h01 * b[i] + h11 * h * db[i];
  return w;
}

}  // namespace

double kepler_energy(const Point6& w) {
  const double r = nonzero_radius(w.x, "kepler_energy");
  return 0.5 * norm_squared(w.y) - 1.0 / r;
}

double preregularized_hamiltonian(const Point6& w) { return 0.5 * norm(w.x) * (norm_squared(w.y) + 1.0); }

double regularized_hamiltonian(const Point6& w, double k) {
  if (!(k > 0.0)) throw std::domain_error("regularized_hamiltonian: k must be positive");
  return norm(w.x) * (norm_squared(w.y) + k * k) / (2.0 * k);
}

Point6 symplectic_scaling(const Point6& w, double k) {
  if (!(k > 0.0)) throw std::domain_error("symplectic_scaling: k must be positive");
  Point6 out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.x[i] = k * w.x[i];
    out.y[i] = w.y[i] / k;
  }
  return out;
}

Tangent6 preregularized_vector_field(const Point6& w) {
  const double r = nonzero_radius(w.x, "preregularized_vector_field");
  const double c = -0.5 * (norm_squared(w.y) + 1.0) / r;
  return {r * w.y[0], r * w.y[1], r * w.y[2], c * w.x[0], c * w.x[1], c * w.x[2]};
}

Tangent6 reparametrized_kepler_field(const Point6& w, double k) {
  if (!(k > 0.0)) throw std::domain_error("reparametrized_kepler_field: k must be positive");
  const double r = nonzero_radius(w.x, "reparametrized_kepler_field");
  const double energy = kepler_energy(w);
  Tangent6 v;
  for (std::size_t i = 0; i < 3; ++i) {
    const double dK_dy = w.y[i];
    const double dK_dx = w.x[i] / (r * r * r);
    const double dr_dx = w.x[i] / r;
    v[i] = r / k * dK_dy;
    v[3 + i] = -r / k * dK_dx - (energy + 0.5 * k * k) * dr_dx / k;
  }
  return v;
}

Tangent6 level_set_kepler_field(const Point6& w, double k) {
  if (!(k > 0.0)) throw std::domain_error("level_set_kepler_field: k must be positive");
  const double r = nonzero_radius(w.x, "level_set_kepler_field");
  Tangent6 v;
  for (std::size_t i = 0; i < 3; ++i) {
    v[i] = r / k * w.y[i];
    v[3 + i] = -w.x[i] / (k * r * r);
  }
  return v;
}

Tangent6 kepler_vector_field(const Point6& w) {
  const double r = nonzero_radius(w.x, "kepler_vector_field");
  const double r3 = r * r * r;
  return {w.y[0], w.y[1], w.y[2], -w.x[0] / r3, -w.x[1] / r3, -w.x[2] / r3};
}

Vec3<double> angular_momentum(const Point6& w) {
  nonzero_radius(w.x, "angular_momentum");
  return cross(w.x, w.y);
}

Vec3<double> eccentricity(const Point6& w) {
  const double r = nonzero_radius(w.x, "eccentricity");
  const Vec3<double> lrl = cross(w.y, cross(w.x, w.y));
  return {lrl[0] - w.x[0] / r, lrl[1] - w.x[1] / r, lrl[2] - w.x[2] / r};
}

std::vector<double> sundman_times(const Trajectory6& traj_s, double k) {
  if (!(k > 0.0)) throw std::invalid_argument("sundman_times: k must be positive");
  std::vector<double> t(traj_s.size(), 0.0);
  for (std::size_t i = 0; i < traj_s.size(); ++i) {
    if (norm(traj_s.states[i].x) <= kCollisionRadius) {
      throw std::domain_error("sundman_reparametrize: trajectory reaches x = 0, the time change degenerates");
    }
  }
  for (std::size_t i = 1; i < traj_s.size(); ++i) {
    const Point6& a = traj_s.states[i - 1];
    const Point6& b = traj_s.states[i];
    const double h = traj_s.times[i] - traj_s.times[i - 1];
    const double f0 = norm(a.x) / k, f1 = norm(b.x) / k;
    const double d0 = dot(a.x, a.y) / k, d1 = dot(b.x, b.y) / k;
    t[i] = t[i - 1] + 0.5 * h * (f0 + f1) + h * h / 12.0 * (d0 - d1);
  }
  return t;
}

Trajectory6 sundman_reparametrize(const Trajectory6& traj_s, const std::vector<double>& t_grid, double k) {
  if (traj_s.size() < 2) throw std::invalid_argument("sundman_reparametrize: need at least two samples");
  const std::vector<double> t = sundman_times(traj_s, k);
  Trajectory6 out;
  out.conserved_names = traj_s.conserved_names;
  std::size_t seg = 0;
  for (const double target : t_grid) {
    if (target < t.front() || target > t.back()) {
      throw std::invalid_argument("sundman_reparametrize: requested time outside the covered range");
    }
    while (seg + 2 < t.size() && t[seg + 1] < target) ++seg;
    while (seg > 0 && t[seg] > target) --seg;
    const Point6& a = traj_s.states[seg];
    const Point6& b = traj_s.states[seg + 1];
    const double h = traj_s.times[seg + 1] - traj_s.times[seg];
    const Tangent6 da = preregularized_vector_field(a);
    const Tangent6 db = preregularized_vector_field(b);
    // t(s) on the segment as a cubic Hermite with slopes |x| / k.
    const double t0 = t[seg], t1 = t[seg + 1];
    const double m0 = norm(a.x) / k, m1 = norm(b.x) / k;
    auto t_of = [&](double u) {
      const double u2 = u * u, u3 = u2 * u;
      return (2 * u3 - 3 * u2 + 1) * t0 + (u3 - 2 * u2 + u) * h * m0 + (-2 * u3 + 3 * u2) * t1 + (u3 - u2) * h * m1;
    };
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (t_of(mid) < target) lo = mid; else hi = mid;
    }
    const double u = 0.5 * (lo + hi);
    out.push(target, hermite_state(a, da, b, db, h, u));
  }
  return out;
}

std::pair<double, double> radial_ode_rhs(const RadialState& s) {
  if (!(s.r > 0.0)) throw std::domain_error("radial_ode_rhs: r must be positive");
  return {s.rdot, -1.0 / (s.r * s.r)};
}

double radial_collision_time(double r0) {
  if (!(r0 > 0.0) || r0 > 2.0) throw std::domain_error("radial_collision_time: r0 must lie in (0, 2]");
  const double s0 = std::sqrt(std::fmax(0.0, 2.0 / r0 - 1.0));
  return std::numbers::pi - 2.0 * std::atan(s0) - 2.0 * s0 / (1.0 + s0 * s0);
}

double radial_collision_time_quadrature(double r0) {
  if (!(r0 > 0.0) || r0 > 2.0) throw std::domain_error("radial_collision_time_quadrature: r0 must lie in (0, 2]");
  const double scale = 2.0 * r0 * std::sqrt(r0);
  auto integrand = [&](double theta) {
    const double sn = std::sin(theta);
    const double c = std::cos(theta);
    // 2 - r0 sin^2 written without cancellation near theta = pi/2.
    return scale * sn * sn * c / std::sqrt((2.0 - r0) + r0 * c * c);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, std::numbers::pi / 2, 15,
                                                                        1e-14);
}

RadialFall radial_collision_time_ode(double r0, const IntegratorOptions& opts) {
  if (!(r0 > 0.0) || r0 > 2.0) throw std::domain_error("radial_collision_time_ode: r0 must lie in (0, 2]");
  using State = std::array<double, 2>;
  auto rhs = [](double, const State& y) {
    // Trial stages may overshoot past r = 0; NaN makes the step fail and shrink.
    if (!(y[0] > 0.0)) return State{std::nan(""), std::nan("")};
    const auto [dr, drdot] = radial_ode_rhs({y[0], y[1]});
    return State{dr, drdot};
  };
  const State y0{r0, -std::sqrt(std::fmax(0.0, 2.0 / r0 - 1.0))};
  DormandPrince<2> solver(rhs, 0.0, y0, opts);
  Event<2> collision;
  collision.value = [](double, const State& y) { return y[0] * y[0] - kCollisionRadius * kCollisionRadius; };
  collision.slope = [](double, const State& y) { return 2.0 * y[0] * y[1]; };
  RadialFall out;
  auto observe = [&](double, const State& y) {
    if (y[0] >= kEnergySampleRadius) out.energy_drift = std::fmax(out.energy_drift, std::fabs(0.5 * y[1] * y[1] - 1.0 / y[0] + 0.5));
  };
  const StepStatus status = solver.advance_to(10.0, &collision, observe);
  if (status != StepStatus::Event) throw std::runtime_error("radial_collision_time_ode: no collision detected");
  out.time = solver.time();
  out.stats = solver.stats();
  return out;
}

double radial_time_to_collision(const Point6& w, double tol) {
  const double r = nonzero_radius(w.x, "radial_time_to_collision");
  if (norm(angular_momentum(w)) > tol) throw std::domain_error("radial_time_to_collision: orbit is not radial");
  if (std::fabs(kepler_energy(w) + 0.5) > tol) {
    throw std::domain_error("radial_time_to_collision: energy is not -1/2");
  }
  const double r_clamped = std::fmin(r, 2.0);
  const double fall = radial_collision_time(r_clamped);
  const double rdot = dot(w.x, w.y) / r;
  return rdot <= 0.0 ? fall : 2.0 * std::numbers::pi - fall;
}

}  // namespace ksreg
