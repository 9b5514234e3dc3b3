#include "ksreg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ksreg/flows.hpp"
#include "ksreg/invariants.hpp"
#include "ksreg/ks_map.hpp"
#include "ksreg/orbit_space.hpp"
#include "ksreg/quadratic_poisson.hpp"
#include "ksreg/sampling.hpp"

namespace ksreg {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string token = text.substr(pos, comma - pos);
    token.erase(0, token.find_first_not_of(' '));
    token.erase(token.find_last_not_of(' ') + 1);
    double v = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || res.ec != std::errc() || res.ptr != token.data() + token.size() || !std::isfinite(v)) {
      throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return values;
}

Vec4<double> parse_vec4(const std::string& text, const char* what) {
  const std::vector<double> v = parse_list(text, what);
  if (v.size() != 4) throw UsageError(std::string(what) + " needs exactly four comma-separated numbers");
  return {v[0], v[1], v[2], v[3]};
}

json report_header(const RunConfig& cfg) {
  return {{"rng", std::string(Rng::kAlgorithm)}, {"seed", cfg.seed}, {"samples", cfg.samples},
          {"tolerance", cfg.tolerance}};
}

std::string csv_header_comment(const RunConfig& cfg) {
  return "# rng=" + std::string(Rng::kAlgorithm) + " seed=" + std::to_string(cfg.seed) +
         " samples=" + std::to_string(cfg.samples) + " tolerance=" + format_double(cfg.tolerance) + "\n";
}

/// Writes `text` to the configured path, or to `out` when none is set.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + path + "'");
  f << text;
}

template <class Traj>
std::string serialize(const Traj& traj, OutputFormat fmt) {
  std::ostringstream os;
  if (fmt == OutputFormat::Csv) write_csv(os, traj); else write_json(os, traj);
  return os.str();
}

// verify ---------------------------------------------------------------------

Point8 unit_scaled(Point8 z) {
  const double n = norm(as_array(z));
  for (std::size_t i = 0; i < 8; ++i) z[i] /= n;
  return z;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::vector<SuiteResult> suites = run_verify_suites(cfg.seed, cfg.samples, cfg.tolerance);
  const bool pass = std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass; });
  std::string text;
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["header"] = report_header(cfg);
    j["suites"] = json::array();
    for (const auto& s : suites) j["suites"].push_back({{"name", s.name}, {"max_residual", s.max_residual}, {"pass", s.pass}});
    j["pass"] = pass;
    text = j.dump(2) + "\n";
  } else {
    text = csv_header_comment(cfg) + "suite,max_residual,pass\n";
    for (const auto& s : suites) text += s.name + ',' + format_double(s.max_residual) + ',' + (s.pass ? "true" : "false") + '\n';
  }
  emit(cfg.output_path, text, out);
  return pass ? kExitPass : kExitFailure;
}

// orbit ----------------------------------------------------------------------

int cmd_orbit(const RunConfig& cfg, const std::string& q_text, const std::string& p_text, std::ostream& out) {
  Point8 z0;
  z0.q = parse_vec4(q_text, "--q");
  z0.p = parse_vec4(p_text, "--p");
  const double level_tol = std::fmax(cfg.tolerance, kLevelSetTolerance);
  try {
    require_unit_level_set(z0, level_tol, "orbit");
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const double t_max = cfg.t_max > 0.0 ? cfg.t_max : 2.0 * std::numbers::pi;
  const std::size_t n = static_cast<std::size_t>(std::max(2L, cfg.samples));
  const std::string prefix = cfg.output_path.empty() ? "orbit" : cfg.output_path;
  const std::string ext = cfg.format == OutputFormat::Csv ? ".csv" : ".json";

  const std::optional<double> tau = first_collision_time(z0, level_tol);
  Trajectory8 osc;
  osc.conserved_names = {"H2", "Xi"};
  Trajectory6 image;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(n - 1);
    const Point8 z = oscillator_flow(z0, t);
    const auto [h2, xi] = momentum_map(z);
    osc.push(t, z, {h2, xi});
    if (norm_squared(z.q) > 0.0 && (!tau || t < *tau)) image.push(t, ks(z));
  }
  emit(prefix + "_oscillator" + ext, serialize(osc, cfg.format), out);
  emit(prefix + "_ks" + ext, serialize(image, cfg.format), out);

  json summary;
  summary["header"] = report_header(cfg);
  summary["t_max"] = t_max;
  if (tau) {
    const double kepler_time = physical_time(z0, *tau);
    summary["collision"] = {{"oscillator_time", *tau}, {"kepler_time", kepler_time}, {"kepler_side", "collapsing"}};
    out << "collision: oscillator time " << format_double(*tau) << ", Kepler time on the ks image "
        << format_double(kepler_time) << "\n";
  } else {
    HarnessOptions ho;
    ho.samples = n;
    const HarnessReport rep = ks_relatedness_harness(z0, t_max, ho);
    emit(prefix + "_kepler" + ext, serialize(rep.integrated, cfg.format), out);
    summary["harness"] = json::parse(to_json(rep));
    out << "max deviation " << format_double(rep.max_deviation) << "\n";
  }
  emit(prefix + "_summary.json", summary.dump(2) + "\n", out);
  return kExitPass;
}

// bench ----------------------------------------------------------------------

int cmd_bench(const RunConfig& cfg, const std::string& grid_text, long budget, std::ostream& out) {
  const std::vector<double> grid = parse_list(grid_text, "--grid");
  for (const double ell : grid) {
    if (!(ell > 0.0) || ell > 1.0) throw UsageError("--grid entries must lie in (0, 1]");
  }
  BenchmarkOptions opts;
  opts.integrator.abs_tol = cfg.tolerance;
  opts.integrator.rel_tol = cfg.tolerance;
  opts.integrator.max_steps = static_cast<std::size_t>(budget);
  const std::vector<BenchmarkRow> rows = run_benchmark(grid, opts);
  std::string text;
  if (cfg.format == OutputFormat::Csv) {
    text = csv_header_comment(cfg) + benchmark_csv(rows);
  } else {
    json j;
    j["header"] = report_header(cfg);
    j["header"]["step_budget"] = budget;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      j["rows"].push_back({{"L", r.ell}, {"method", r.method}, {"steps", r.steps},
                           {"max_energy_drift", r.max_energy_drift}, {"periapsis_error", r.periapsis_error},
                           {"failed", r.failed}, {"failure", r.failure}});
    }
    text = j.dump(2) + "\n";
  }
  emit(cfg.output_path, text, out);
  const bool ks_ok = std::none_of(rows.begin(), rows.end(),
                                  [](const BenchmarkRow& r) { return r.method == "ks_regularized" && r.failed; });
  return ks_ok ? kExitPass : kExitFailure;
}

// table ----------------------------------------------------------------------

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const BracketTable table = bracket_table();
  const auto diff = diff_against_reference_table();
  std::string text;
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["header"] = report_header(cfg);
    json brackets = json::object();
    for (std::size_t a = 0; a < kNumInvariants; ++a) {
      for (std::size_t b = 0; b < kNumInvariants; ++b) {
        const std::string key = "{" + std::string(kGeneratorNames[a]) + "," + std::string(kGeneratorNames[b]) + "}";
        brackets[key] = to_string(table.entries[a][b]);
      }
    }
    j["brackets"] = brackets;
    json fields = json::object();
    for (std::size_t g = 0; g < kNumInvariants; ++g) {
      fields["Y_" + std::string(kGeneratorNames[g])] = induced_vector_field(static_cast<Gen>(g)).to_string();
    }
    j["induced_vector_fields"] = fields;
    j["reference_table_diff"] = json::array();
    for (const auto& d : diff) {
      j["reference_table_diff"].push_back(
          {{"field", d.field}, {"component", d.component}, {"tabulated", d.tabulated}, {"computed", d.computed}});
    }
    text = j.dump(2) + "\n";
  } else {
    text = csv_header_comment(cfg) + "a,b,bracket\n";
    for (std::size_t a = 0; a < kNumInvariants; ++a) {
      for (std::size_t b = 0; b < kNumInvariants; ++b) {
        text += std::string(kGeneratorNames[a]) + ',' + std::string(kGeneratorNames[b]) + ",\"" +
                to_string(table.entries[a][b]) + "\"\n";
      }
    }
    text += "\nfield,component,tabulated,computed\n";
    for (const auto& d : diff) {
      text += d.field + ',' + d.component + ",\"" + d.tabulated + "\",\"" + d.computed + "\"\n";
    }
  }
  emit(cfg.output_path, text, out);
  return kExitPass;
}

void add_common_options(CLI::App* sub, RunConfig& cfg, std::string& format_text) {
  sub->add_option("--seed", cfg.seed, "PRNG seed");
  sub->add_option("--tolerance", cfg.tolerance, "residual / integrator tolerance");
  sub->add_option("--samples", cfg.samples, "number of samples");
  sub->add_option("--t-max", cfg.t_max, "final time");
  sub->add_option("--out", cfg.output_path, "output path (orbit: file prefix)");
  sub->add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(std::uint64_t seed, long samples, double tolerance) {
  std::vector<SuiteResult> out;
  auto add = [&](std::string name, double residual, bool exact_ok = true) {
    out.push_back({std::move(name), residual, exact_ok && residual <= tolerance});
  };

  const So4Report so4 = verify_so4_relations();
  out.push_back({"so4_relations_exact", so4.all_match ? 0.0 : 1.0, so4.all_match});

  {
    Rng rng(seed);
    long bad = 0;
    for (long i = 0; i < samples; ++i) {
      const PhasePoint8<Rational> z = random_rational_point(rng);
      const GeneratorVector<Rational> g = eval_generators(z);
      const RelationResidual<Rational> r = relation_residuals(g);
      const LagrangeCheck<Rational> lc = lagrange_identity_check(g);
      const bool ok = r.max_abs() == 0.0 && r.h2_nonnegative && r.wedge_nonnegative && lc.max_abs_gap() == 0.0 &&
                      g == eval_generators_direct(z) && pi_from_generators(g) == eval_pi(z);
      if (!ok) ++bad;
    }
    out.push_back({"orbit_space_exact", static_cast<double>(bad), bad == 0});
  }

  Rng rng(seed + 1);
  double orbit = 0.0, conj = 0.0;
  for (long i = 0; i < samples; ++i) {
    const Point8 z = unit_scaled(random_point(rng));
    const GeneratorVector<double> g = eval_generators(z);
    orbit = std::fmax(orbit, relation_residuals(g).max_abs());
    orbit = std::fmax(orbit, lagrange_identity_check(g).max_abs_gap());
    const double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const GeneratorVector<double> lhs = eval_generators(oscillator_flow(z, t));
    const GeneratorVector<double> rhs = induced_flow_on_orbit_space(g, 2.0 * t);
    conj = std::fmax(conj, max_abs_diff(lhs.flat(), rhs.flat()));
  }
  add("orbit_space_float", orbit);
  add("induced_flow_conjugacy", conj);

  double ham = 0.0, pull = 0.0, poisson = 0.0, fiber = 0.0;
  for (long i = 0; i < samples; ++i) {
    const Point8 z = sample_level_set(rng, 1.0, 0.0);
    const auto [k_lhs, k_rhs] = pullback_kepler_hamiltonian(z);
    ham = std::fmax(ham, std::fabs(k_lhs - k_rhs));
    const auto [J, L] = pullback_angular_momentum(z);
    const auto [e, K] = pullback_eccentricity(z);
    const auto [ip, u1] = pullback_inner_product(z);
    pull = std::max({pull, max_abs_diff(J, L), max_abs_diff(e, K), std::fabs(ip - u1)});
    poisson = std::fmax(poisson, poisson_property_residual(z).max_abs());
    const double s = rng.uniform(0.0, 2.0 * std::numbers::pi);
    fiber = std::fmax(fiber, max_abs_diff(as_array(ks(ks_fiber_action(z, s))), as_array(ks(z))));
  }
  add("ks_pullback_hamiltonian", ham);
  add("ks_pullbacks", pull);
  add("ks_poisson_property", poisson);
  add("ks_fiber_invariance", fiber);

  long disagreements = 0;
  for (long i = 0; i < samples; ++i) {
    const Point8 z = (i % 2 == 0) ? sample_collision_point(rng) : sample_level_set(rng, 1.0, 0.0);
    const bool member = collision_set_membership(z);
    const bool hits = first_collision_time(z).has_value();
    if (member != hits) ++disagreements;
  }
  out.push_back({"collision_theorem", static_cast<double>(disagreements), disagreements == 0});
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kustaanheimo-Stiefel regularization toolkit", "ksreg"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format_text = "json";

  auto* verify = app.add_subcommand("verify", "run the identity suites");
  add_common_options(verify, cfg, format_text);

  auto* orbit = app.add_subcommand("orbit", "oscillator orbit, its ks image and the integrated Kepler orbit");
  add_common_options(orbit, cfg, format_text);
  std::string q_text, p_text;
  orbit->add_option("--q", q_text, "q1,q2,q3,q4")->required();
  orbit->add_option("--p", p_text, "p1,p2,p3,p4")->required();

  auto* bench = app.add_subcommand("bench", "near-collision benchmark: raw Kepler vs ks-regularized");
  add_common_options(bench, cfg, format_text);
  std::string grid_text = "1e-1,1e-2,1e-3,1e-4";
  long budget = 1'000'000;
  bench->add_option("--grid", grid_text, "comma-separated |L| values");
  bench->add_option("--budget", budget, "step budget shared by both methods");

  auto* table = app.add_subcommand("table", "bracket table, induced vector fields and the reference-table diff");
  add_common_options(table, cfg, format_text);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    cfg.format = format_text == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    if (cfg.samples <= 0) throw UsageError("--samples must be positive");
    if (!(cfg.tolerance >= 0.0)) throw UsageError("--tolerance must be non-negative");
    if (cfg.t_max < 0.0) throw UsageError("--t-max must be non-negative");
    if (*verify) {
      cfg.subcommand = "verify";
      return cmd_verify(cfg, out);
    }
    if (*orbit) {
      cfg.subcommand = "orbit";
      return cmd_orbit(cfg, q_text, p_text, out);
    }
    if (*bench) {
      cfg.subcommand = "bench";
      if (budget <= 0) throw UsageError("--budget must be positive");
      if (!(cfg.tolerance > 0.0)) throw UsageError("bench needs a positive --tolerance");
      return cmd_bench(cfg, grid_text, budget, out);
    }
    cfg.subcommand = "table";
    return cmd_table(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace ksreg
