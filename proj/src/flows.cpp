#include "ksreg/flows.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "ksreg/orbit_space.hpp"
#include "ksreg/sampling.hpp"

namespace ksreg {

Point8 oscillator_flow(const Point8& z, double t) { return rotate_oscillator(z, std::cos(t), std::sin(t)); }

GeneratorVector<double> induced_flow_on_orbit_space(const GeneratorVector<double>& g, double u, double tol) {
  const RelationResidual<double> res = relation_residuals(g);
  const double scale = std::fmax(1.0, g.H2 * g.H2);
  if (!res.on_orbit_space(tol * scale)) throw std::domain_error("induced_flow_on_orbit_space: point is off the orbit space");
  const double c = std::cos(u);
  const double s = std::sin(u);
  GeneratorVector<double> out = g;
  for (std::size_t i = 0; i < 4; ++i) {
    out.U[i] = c * g.U[i] + s * g.V[i];
    out.V[i] = -s * g.U[i] + c * g.V[i];
  }
  return out;
}

double collinearity_gram(const Point8& z) {
  // |q ^ p| from its six components; |q|^2|p|^2 - <q,p>^2 would cancel.
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double m = z.q[i] * z.p[j] - z.q[j] * z.p[i];
      s += m * m;
    }
  }
  return std::sqrt(s);
}

bool collision_set_membership(const Point8& z, double tol) {
  require_unit_level_set(z, tol, "collision_set_membership");
  return norm_squared(eval_generators(z).L) <= tol * tol;
}

std::optional<double> first_collision_time(const Point8& z, double tol) {
  require_unit_level_set(z, tol, "first_collision_time");
  if (collinearity_gram(z) > tol) return std::nullopt;
  // q = a d, p = b d along a common unit direction d.
  const double nq = norm(z.q), np = norm(z.p);
  double a, b;
  if (nq >= np) {
    a = nq;
    b = dot(z.p, z.q) / nq;
  } else {
    a = dot(z.q, z.p) / np;
    b = np;
  }
  // a cos(tau) + b sin(tau) = R cos(tau - phi) with phi = atan2(b, a).
  const double pi = std::numbers::pi;
  double tau = std::fmod(std::atan2(b, a) + pi / 2, pi);
  if (tau <= 0.0) tau += pi;
  return tau;
}

double physical_time(const Point8& z, double T) {
  const double qq = norm_squared(z.q), pp = norm_squared(z.p), qp = dot(z.q, z.p);
  const double s = std::sin(T), s2 = std::sin(2 * T);
  return 2.0 * (qq * (T / 2 + s2 / 4) + qp * s * s + pp * (T / 2 - s2 / 4));
}

HarnessReport ks_relatedness_harness(const Point8& z0, double t_max, const HarnessOptions& opts) {
  require_unit_level_set(z0, opts.level_set_tol, "ks_relatedness_harness");
  if (norm(eval_generators(z0).L) <= opts.level_set_tol) {
    throw std::domain_error("ks_relatedness_harness: seed lies in the collision set");
  }
  if (!(t_max >= 0.0)) throw std::invalid_argument("ks_relatedness_harness: t_max must be non-negative");
  if (opts.samples < 2) throw std::invalid_argument("ks_relatedness_harness: need at least two samples");

  HarnessReport rep;
  rep.seed = z0;
  rep.t_max = t_max;

  using State = std::array<double, 6>;
  auto rhs = [](double, const State& y) {
    const Point6 w = point6_from(y);
    if (norm_squared(w.x) == 0.0) return State{std::nan(""), 0, 0, 0, 0, 0};
    const Tangent6 v = preregularized_vector_field(w);
    State out;
    for (std::size_t i = 0; i < 6; ++i) out[i] = 2.0 * v[i];
    return out;
  };
  const Point6 w0 = ks(z0);
  DormandPrince<6> solver(rhs, 0.0, as_array(w0), opts.integrator);
  Event<6> collapse;
  const double rc2 = opts.collision_radius * opts.collision_radius;
  collapse.value = [rc2](double, const State& y) { return y[0] * y[0] + y[1] * y[1] + y[2] * y[2] - rc2; };
  collapse.slope = [rhs](double t, const State& y) {
    const State v = rhs(t, y);
    return 2.0 * (y[0] * v[0] + y[1] * v[1] + y[2] * v[2]);
  };

  const std::size_t n = t_max == 0.0 ? 1 : opts.samples;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : t_max * static_cast<double>(i) / static_cast<double>(n - 1);
    const StepStatus st = solver.advance_to(t, &collapse);
    if (st == StepStatus::Event) {
      rep.collision_time = solver.time();
      break;
    }
    if (st != StepStatus::Reached) throw std::runtime_error("ks_relatedness_harness: integration failed");
    const Point6 a = ks(oscillator_flow(z0, t));
    const Point6 b = point6_from(solver.state());
    rep.exact.push(t, a);
    rep.integrated.push(t, b);
    rep.max_deviation = std::fmax(rep.max_deviation, distance(a, b));
  }
  rep.integrator_stats = solver.stats();
  return rep;
}

std::string to_json(const HarnessReport& r) {
  nlohmann::json j;
  j["seed"] = {{"q", r.seed.q}, {"p", r.seed.p}};
  j["t_max"] = r.t_max;
  j["max_deviation"] = r.max_deviation;
  j["collision_time"] = r.collision_time ? nlohmann::json(*r.collision_time) : nlohmann::json(nullptr);
  j["integrator_stats"] = {{"steps", r.integrator_stats.steps}, {"rejected_steps", r.integrator_stats.rejected_steps}};
  return j.dump(2);
}

namespace {

const char* failure_name(StepStatus st) {
  switch (st) {
    case StepStatus::Event: return "collision_guard";
    case StepStatus::StepBudget: return "step_budget";
    case StepStatus::StepUnderflow: return "step_underflow";
    case StepStatus::NonFinite: return "non_finite";
    case StepStatus::Reached: break;
  }
  return "";
}

void finish_row(BenchmarkRow& row, StepStatus st, double threshold) {
  row.failure = failure_name(st);
  if (row.failure.empty() && !(row.periapsis_error <= threshold)) row.failure = "error";
  row.failed = !row.failure.empty();
}

BenchmarkRow run_ks(double ell, const BenchmarkOptions& opts) {
  using State = std::array<double, 8>;
  const Point8 z0 = apoapsis_seed(ell);
  const Vec3<double> e0 = eccentricity(ks(z0));
  auto rhs = [](double, const State& y) { return State{y[4], y[5], y[6], y[7], -y[0], -y[1], -y[2], -y[3]}; };
  DormandPrince<8> solver(rhs, 0.0, as_array(z0), opts.integrator);
  BenchmarkRow row;
  row.ell = ell;
  row.method = "ks_regularized";
  auto observe = [&](double, const State& y) {
    const Point8 z = point8_from(y);
    if (norm_squared(z.q) == 0.0) return;
    const Point6 w = ks(z);
    if (norm(w.x) >= opts.energy_sample_radius) {
      row.max_energy_drift = std::fmax(row.max_energy_drift, std::fabs(kepler_energy(w) + 0.5));
    }
  };
  observe(0.0, as_array(z0));
  const StepStatus st = solver.advance_to(std::numbers::pi, nullptr, observe);
  row.steps = solver.stats().steps;
  const Point8 z_end = point8_from(solver.state());
  row.periapsis_error = norm_squared(z_end.q) > 0.0 ? norm(eccentricity(ks(z_end)) - e0) : std::nan("");
  finish_row(row, st, opts.error_threshold);
  return row;
}

BenchmarkRow run_raw(double ell, const BenchmarkOptions& opts) {
  using State = std::array<double, 6>;
  const Point6 w0 = ks(apoapsis_seed(ell));
  const Vec3<double> e0 = eccentricity(w0);
  auto rhs = [](double, const State& y) {
    const Point6 w = point6_from(y);
    if (norm_squared(w.x) == 0.0) return State{std::nan(""), 0, 0, 0, 0, 0};
    const Tangent6 v = kepler_vector_field(w);
    return State{v[0], v[1], v[2], v[3], v[4], v[5]};
  };
  DormandPrince<6> solver(rhs, 0.0, as_array(w0), opts.integrator);
  Event<6> guard;
  guard.value = [](double, const State& y) {
    return y[0] * y[0] + y[1] * y[1] + y[2] * y[2] - kCollisionRadius * kCollisionRadius;
  };
  guard.slope = [](double, const State& y) { return 2.0 * (y[0] * y[3] + y[1] * y[4] + y[2] * y[5]); };
  BenchmarkRow row;
  row.ell = ell;
  row.method = "raw_kepler";
  auto observe = [&](double, const State& y) {
    const Point6 w = point6_from(y);
    if (norm(w.x) >= opts.energy_sample_radius) {
      row.max_energy_drift = std::fmax(row.max_energy_drift, std::fabs(kepler_energy(w) + 0.5));
    }
  };
  observe(0.0, as_array(w0));
  const StepStatus st = solver.advance_to(2.0 * std::numbers::pi, &guard, observe);
  row.steps = solver.stats().steps;
  const Point6 w_end = point6_from(solver.state());
  row.periapsis_error = norm_squared(w_end.x) > 0.0 ? norm(eccentricity(w_end) - e0) : std::nan("");
  finish_row(row, st, opts.error_threshold);
  return row;
}

}  // namespace

std::vector<BenchmarkRow> run_benchmark(const std::vector<double>& ells, const BenchmarkOptions& opts) {
  if (ells.empty()) throw std::invalid_argument("run_benchmark: empty grid");
  std::vector<BenchmarkRow> rows;
  for (const double ell : ells) {
    rows.push_back(run_raw(ell, opts));
    rows.push_back(run_ks(ell, opts));
  }
  return rows;
}

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows) {
  std::string out = "L,method,steps,max_energy_drift,periapsis_error,failed\n";
  for (const auto& r : rows) {
    out += format_double(r.ell) + ',' + r.method + ',' + std::to_string(r.steps) + ',' +
           format_double(r.max_energy_drift) + ',' + format_double(r.periapsis_error) + ',' +
           (r.failed ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace ksreg
