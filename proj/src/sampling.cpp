#include "ksreg/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ksreg/invariants.hpp"

namespace ksreg {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

long Rng::integer(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::integer: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<long>(x % span);
}

Point8 random_point(Rng& rng) {
  Point8 z;
  for (std::size_t i = 0; i < 8; ++i) z[i] = rng.normal();
  return z;
}

PhasePoint8<Rational> random_rational_point(Rng& rng, long max_num, long max_den) {
  PhasePoint8<Rational> z;
  for (std::size_t i = 0; i < 8; ++i) z[i] = rng.rational(max_num, max_den);
  return z;
}

PhasePoint8<Rational> random_rational_xi_zero_point(Rng& rng, long max_num, long max_den) {
  PhasePoint8<Rational> z = random_rational_point(rng, max_num, max_den);
  while (norm_squared(z.q).is_zero()) z = random_rational_point(rng, max_num, max_den);
  const Vec4<Rational> g{-z.q[1], z.q[0], -z.q[3], z.q[2]};
  const Rational c = dot(z.p, g) / dot(g, g);
  for (std::size_t i = 0; i < 4; ++i) z.p[i] -= c * g[i];
  return z;
}

Point8 sample_level_set(Rng& rng, double h, double xi) {
  if (!(h > 0.0) || std::fabs(xi) > h) throw std::domain_error("sample_level_set: (h, xi) outside the wedge");
  const double rho = xi / h;
  for (;;) {
    Point8 z;
    for (auto& v : z.q) v = rng.normal();
    const double qn = norm(z.q);
    if (qn == 0.0) continue;
    for (auto& v : z.q) v /= qn;
    const Vec4<double> g{-z.q[1], z.q[0], -z.q[3], z.q[2]};  // unit, orthogonal to q

    Vec4<double> perp;
    for (auto& v : perp) v = rng.normal();
    const double c = dot(perp, g);
    for (std::size_t i = 0; i < 4; ++i) perp[i] -= c * g[i];

    // With p = perp + alpha g and |q| = 1: Xi = alpha, H2 = (1 + |perp|^2 + alpha^2) / 2.
    // Xi / H2 = rho has a real root iff |perp|^2 <= (1 - rho^2) / rho^2.
    double perp2 = norm_squared(perp);
    if (rho != 0.0) {
      const double cap = (1.0 - rho * rho) / (rho * rho);
      if (perp2 > cap) {
        const double s = cap > 0.0 ? std::sqrt(cap / perp2) * rng.uniform() : 0.0;
        for (auto& v : perp) v *= s;
        perp2 = norm_squared(perp);
      }
    }
    double alpha = 0.0;
    if (rho != 0.0) {
      const double disc = std::fmax(0.0, 1.0 - rho * rho * (1.0 + perp2));
      alpha = (1.0 - std::sqrt(disc)) / rho;  // smaller-magnitude root
    }
    for (std::size_t i = 0; i < 4; ++i) z.p[i] = perp[i] + alpha * g[i];
    if (norm_squared(z.p) == 0.0 && h > 0.0 && rho == 0.0) continue;

    const auto [h2, unused] = momentum_map(z);
    const double scale = std::sqrt(h / h2);
    for (std::size_t i = 0; i < 8; ++i) z[i] *= scale;
    return z;
  }
}

Point8 sample_collision_point(Rng& rng) {
  for (;;) {
    Point8 z;
    for (auto& v : z.q) v = rng.normal();
    if (norm_squared(z.q) == 0.0) continue;
    const double mu = rng.normal();
    for (std::size_t i = 0; i < 4; ++i) z.p[i] = mu * z.q[i];
    const double h2 = 0.5 * (norm_squared(z.q) + norm_squared(z.p));
    const double scale = std::sqrt(1.0 / h2);
    for (std::size_t i = 0; i < 8; ++i) z[i] *= scale;
    return z;
  }
}

Point8 apoapsis_seed(double ell) {
  if (!(ell > 0.0) || ell > 1.0) throw std::domain_error("apoapsis_seed: |L| must lie in (0, 1]");
  // a^2 and c^2 are the roots of u^2 - 2u + ell^2 = 0.
  const double a2 = 1.0 + std::sqrt(1.0 - ell * ell);
  const double a = std::sqrt(a2);
  const double c = ell / a;
  Point8 z;
  z.q = {a, 0.0, 0.0, 0.0};
  z.p = {0.0, 0.0, c, 0.0};
  return z;
}

}  // namespace ksreg
