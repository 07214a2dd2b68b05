#include "ulamfloat/cli.hpp"

#include "ulamfloat/asa.hpp"
#include "ulamfloat/cap_calculus.hpp"
#include "ulamfloat/centroid.hpp"
#include "ulamfloat/checks.hpp"
#include "ulamfloat/floatsim.hpp"
#include "ulamfloat/parallel.hpp"
#include "ulamfloat/spec_io.hpp"
#include "ulamfloat/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <locale>
#include <map>
#include <numbers>
#include <sstream>

namespace ulamfloat {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["body"] = c.body_path;
  j["weight"] = c.weight_path.empty() ? json("constant(1)") : json(c.weight_path);
  j["delta"] = c.delta;
  j["delta_relative"] = c.delta_relative;
  j["delta0"] = c.delta0;
  j["steps"] = c.steps;
  j["m"] = c.m;
  j["theta"] = c.theta;
  j["p"] = std::isinf(c.p) ? json(c.p > 0 ? "inf" : "-inf") : json(c.p);
  j["extension"] = c.extension;
  j["rho"] = c.rho;
  j["samples"] = c.samples;
  j["resolution"] = c.resolution;
  j["rel_tol"] = c.rel_tol;
  j["radial_rel_tol"] = c.radial_rel_tol;
  j["check_tol"] = c.check_tol;
  j["backend"] = c.backend;
  j["mc_samples"] = c.mc_samples;
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  j["format"] = c.format;
  return j;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) {
    a.push_back(v[i]);
  }
  return a;
}

json bracket(double lo, double hi) { return json::array({lo, hi}); }

std::string fmt(double x) {
  std::ostringstream ss;
  ss.imbue(std::locale::classic());
  ss << std::setprecision(17) << x;
  return ss.str();
}

class Csv {
 public:
  explicit Csv(const RunConfig& c) {
    text_ << "# ulamfloat " << kVersion << "\n# config " << to_json(c).dump() << "\n";
  }
  void comment(const std::string& line) { text_ << "# " << line << "\n"; }
  void header(const std::vector<std::string>& cols) { row_strings(cols); }
  void row(const std::vector<double>& vals) {
    std::vector<std::string> s;
    for (double v : vals) {
      s.push_back(fmt(v));
    }
    row_strings(s);
  }
  std::string str() const { return text_.str(); }

 private:
  void row_strings(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      text_ << (i ? "," : "") << cols[i];
    }
    text_ << "\n";
  }
  std::ostringstream text_;
};

struct Context {
  const RunConfig& config;
  std::string format;
  std::string payload;
  int code = 0;
};

Body load_config_body(const RunConfig& c) {
  if (c.body_path.empty()) {
    throw UsageError("--body is required");
  }
  return load_body(c.body_path);
}

Weight load_config_weight(const RunConfig& c, const Body& body) {
  if (c.weight_path.empty()) {
    return Weight::constant(1.0);
  }
  return load_weight(c.weight_path, body);
}

ApproxOptions approx_options(const RunConfig& c) {
  ApproxOptions o;
  o.caps.backend = backend_from_string(c.backend);
  o.caps.rel_tol = c.rel_tol;
  o.caps.mc_samples = c.mc_samples;
  o.caps.seed = c.seed;
  o.threads = c.threads;
  return o;
}

double resolve_delta(const RunConfig& c, const Body& body, const Weight& w,
                     const CapOptions& caps) {
  if (!c.delta_relative) {
    return c.delta;
  }
  return c.delta * total_mass(w, body, caps).value;
}

json envelope(const RunConfig& c) {
  json j;
  j["version"] = kVersion;
  j["config"] = to_json(c);
  return j;
}

json approximation_json(const BodyApproximation& a) {
  json j;
  j["kind"] = to_string(a.kind);
  j["param"] = a.param;
  j["weight"] = a.weight_id;
  j["m"] = a.directions.size();
  json dirs = json::array();
  json pts = json::array();
  for (std::size_t i = 0; i < a.directions.size(); ++i) {
    dirs.push_back(vec_json(a.directions[i].vec()));
    pts.push_back(a.boundary_points[i].size() ? vec_json(a.boundary_points[i]) : json());
  }
  j["directions"] = dirs;
  j["support"] = a.support_values;
  j["boundary_points"] = pts;
  j["empty"] = a.empty;
  if (a.empty) {
    j["empty_witness"] = a.empty_witness;
  }
  if (a.has_cells) {
    j["volume"] = bracket(a.inner_volume, a.outer_volume);
  }
  j["gap_estimate"] = a.gap_estimate ? json(*a.gap_estimate) : json();
  if (!a.diagnostic.empty()) {
    j["diagnostic"] = a.diagnostic;
  }
  return j;
}

std::string approximation_csv(const RunConfig& c, const BodyApproximation& a) {
  Csv csv(c);
  const int n = a.dim;
  std::vector<std::string> cols{"i"};
  for (int k = 0; k < n; ++k) {
    cols.push_back("theta" + std::to_string(k));
  }
  cols.push_back("h");
  for (int k = 0; k < n; ++k) {
    cols.push_back("x" + std::to_string(k));
  }
  csv.header(cols);
  for (std::size_t i = 0; i < a.directions.size(); ++i) {
    std::vector<double> row{static_cast<double>(i)};
    for (int k = 0; k < n; ++k) {
      row.push_back(a.directions[i][k]);
    }
    row.push_back(a.support_values[i]);
    for (int k = 0; k < n; ++k) {
      row.push_back(a.boundary_points[i].size() ? a.boundary_points[i][k] : std::nan(""));
    }
    csv.row(row);
  }
  return csv.str();
}

void emit_approximation(Context& ctx, const BodyApproximation& a) {
  if (ctx.format == "csv") {
    ctx.payload = approximation_csv(ctx.config, a);
    return;
  }
  json j = envelope(ctx.config);
  j["result"] = approximation_json(a);
  ctx.payload = j.dump(2);
}

json constant_json(const ExperimentRecord& rec) {
  const ConstantResolution res = resolve_constant(rec.dim);
  json j{{"proposition_expression", res.c_proposition},
         {"theorem_expression", res.c_theorem},
         {"mismatch_factor", res.mismatch},
         {"ball_limit", res.limit},
         {"matched", res.matched}};
  if (rec.reference > 0.0) {
    j["experiment_implied"] = rec.extrapolated * validated_c_n(rec.dim) / rec.reference;
  }
  return j;
}

void emit_experiment(Context& ctx, const ExperimentRecord& rec) {
  const json constant = constant_json(rec);
  if (ctx.format == "csv") {
    Csv csv(ctx.config);
    csv.comment("c_n " + constant.dump());
    csv.header({"k", "delta", "ratio_lo", "ratio_hi", "extrapolated", "reference"});
    for (const auto& r : rec.rows) {
      csv.row({static_cast<double>(r.k), r.delta, r.ratio_lo, r.ratio_hi, rec.extrapolated,
               rec.reference});
    }
    ctx.payload = csv.str();
    return;
  }
  json rows = json::array();
  for (const auto& r : rec.rows) {
    rows.push_back({{"k", r.k},
                    {"delta", r.delta},
                    {"ratio", bracket(r.ratio_lo, r.ratio_hi)},
                    {"volume_difference", bracket(r.volume_lo, r.volume_hi)}});
  }
  json j;
  j["rows"] = rows;
  j["extrapolated"] =
      bracket(rec.extrapolated - rec.uncertainty, rec.extrapolated + rec.uncertainty);
  j["extrapolated_estimate"] = rec.extrapolated;
  j["reference"] = rec.reference;
  j["monotone"] = rec.monotone;
  j["flag"] = rec.flag;
  j["resolution"] = rec.resolution;
  j["c_n"] = constant;
  json out = envelope(ctx.config);
  out["result"] = j;
  ctx.payload = out.dump(2);
}

void emit_json(Context& ctx, const json& result) {
  if (ctx.format == "csv") {
    throw UsageError("command '" + ctx.config.command + "' has no CSV output");
  }
  json j = envelope(ctx.config);
  j["result"] = result;
  ctx.payload = j.dump(2);
}

void cmd_body(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  json r{{"kind", to_string(b.kind())},
         {"dim", b.dim()},
         {"volume", b.volume()},
         {"barycenter", vec_json(b.barycenter())},
         {"diameter", b.diameter()},
         {"inradius", b.inradius()},
         {"interior_point", vec_json(b.interior_point())},
         {"origin_interior", b.origin_interior()},
         {"description", b.describe()}};
  if (b.kind() == BodyKind::Polytope) {
    json vs = json::array();
    for (const auto& v : b.vertices()) {
      vs.push_back(vec_json(v));
    }
    r["vertices"] = vs;
  }
  emit_json(ctx, r);
}

Direction config_theta(const RunConfig& c, int n) {
  if (static_cast<int>(c.theta.size()) != n) {
    throw UsageError("--theta needs " + std::to_string(n) + " components");
  }
  Vec v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = c.theta[i];
  }
  return Direction(v);
}

void cmd_cut(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  const Weight w = load_config_weight(ctx.config, b);
  const auto opts = approx_options(ctx.config);
  const Direction theta = config_theta(ctx.config, b.dim());
  const double delta = resolve_delta(ctx.config, b, w, opts.caps);
  const CapCut cut = cap_cut(b, w, theta, delta, opts.caps);
  emit_json(ctx, {{"theta", vec_json(theta.vec())},
                  {"delta", delta},
                  {"d", cut.d},
                  {"mass", cut.mass},
                  {"barycenter", vec_json(cut.barycenter)},
                  {"backend", to_string(cut.backend)},
                  {"error_estimate", cut.error_estimate}});
}

void cmd_ulam(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  const Weight w = load_config_weight(ctx.config, b);
  const auto opts = approx_options(ctx.config);
  const double delta = resolve_delta(ctx.config, b, w, opts.caps);
  emit_approximation(ctx, build_ulam_body(b, w, delta, ctx.config.m, opts));
}

void cmd_floating(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  const Weight w = load_config_weight(ctx.config, b);
  const auto opts = approx_options(ctx.config);
  const double delta = resolve_delta(ctx.config, b, w, opts.caps);
  emit_approximation(ctx, build_floating_body(b, w, delta, ctx.config.m, opts));
}

void cmd_zp(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  emit_approximation(ctx, build_zp_body(b, ctx.config.p, ctx.config.m, ctx.config.threads));
}

void cmd_sandwich(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  const Weight w = load_config_weight(ctx.config, b);
  const auto opts = approx_options(ctx.config);
  const double delta = resolve_delta(ctx.config, b, w, opts.caps);
  const auto r = sandwich_check(b, w, delta, ctx.config.m, opts, ctx.config.check_tol);
  emit_json(ctx, {{"passed", r.passed},
                  {"delta", r.delta},
                  {"m", r.m},
                  {"tolerance", r.tolerance},
                  {"left_margin", r.left_margin},
                  {"right_margin", r.right_margin},
                  {"left_witness", r.left_witness},
                  {"right_witness", {r.right_witness.first, r.right_witness.second}}});
  ctx.code = r.passed ? 0 : 1;
}

void cmd_zp_sandwich(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  const auto r =
      zp_sandwich_check(b, ctx.config.delta, ctx.config.m, approx_options(ctx.config),
                        ctx.config.check_tol);
  emit_json(ctx, {{"passed", r.passed},
                  {"delta", r.delta},
                  {"p", r.p},
                  {"m", r.m},
                  {"tolerance", r.tolerance},
                  {"left_margin", r.left_margin},
                  {"right_margin", r.right_margin},
                  {"left_witness", r.left_witness},
                  {"right_witness", r.right_witness}});
  ctx.code = r.passed ? 0 : 1;
}

void cmd_symmetry(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  const auto r = symmetry_check(b, ctx.config.delta, ctx.config.m, approx_options(ctx.config),
                                ctx.config.check_tol);
  emit_json(ctx, {{"passed", r.passed},
                  {"delta", r.delta},
                  {"m", r.m},
                  {"identity_deviation", r.identity_deviation},
                  {"central_deviation", r.central_deviation},
                  {"archimedes_deviation", r.archimedes_deviation},
                  {"tolerance", r.tolerance},
                  {"archimedes_tolerance", r.archimedes_tolerance},
                  {"witness", r.witness}});
  ctx.code = r.passed ? 0 : 1;
}

void cmd_asa(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  const double p = ctx.config.p;
  json r{{"p", std::isinf(p) ? json(p > 0 ? "inf" : "-inf") : json(p)},
         {"as_p", asa_p(b, p)}};
  if (b.kind() == BodyKind::Ball && b.center().norm() == 0.0) {
    r["closed_form"] = asa_p_ball(b.dim(), b.radius(), p);
  }
  emit_json(ctx, r);
}

LimitOptions limit_options(const RunConfig& c) {
  LimitOptions o;
  o.delta0 = c.delta0;
  o.steps = c.steps;
  o.m = c.m;
  o.resolution = c.resolution;
  o.radial_rel_tol = c.radial_rel_tol;
  o.approx = approx_options(c);
  return o;
}

void cmd_limit(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  const Weight w = load_config_weight(ctx.config, b);
  emit_experiment(ctx, limit_experiment(b, w, limit_options(ctx.config)));
}

void cmd_pasa(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  PhiExtension ext = PhiExtension::Radial;
  if (ctx.config.extension == "collar") {
    ext = PhiExtension::Collar;
  } else if (ctx.config.extension != "radial") {
    throw UsageError("--extension must be radial or collar");
  }
  emit_experiment(ctx,
                  corollary_pasa_experiment(b, ctx.config.p, limit_options(ctx.config), ext));
}

void cmd_grad_check(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  const int samples = ctx.config.samples > 0 ? ctx.config.samples : 20;
  const auto s = grad_check(b, samples, ctx.config.seed);
  json reports = json::array();
  for (const auto& r : s.reports) {
    reports.push_back({{"a", vec_json(r.a)},
                       {"grad_deviation", r.grad_deviation},
                       {"grad_tolerance", r.grad_tolerance},
                       {"jac_deviation", r.jac_deviation},
                       {"jac_tolerance", r.jac_tolerance},
                       {"trace_deviation", r.trace_deviation},
                       {"passed", r.passed}});
  }
  emit_json(ctx, {{"passed", s.passed()},
                  {"samples", s.samples},
                  {"failures", s.failures},
                  {"max_grad_deviation", s.max_grad_deviation},
                  {"max_jac_deviation", s.max_jac_deviation},
                  {"max_trace_deviation", s.max_trace_deviation},
                  {"reports", reports}});
  ctx.code = s.passed() ? 0 : 1;
}

void cmd_float2d(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  const int samples = ctx.config.samples > 0 ? ctx.config.samples : 720;
  const auto eq = equilibrium_directions(b, ctx.config.rho, samples, 1e-12, ctx.config.threads);
  double collinear = 0.0;
  for (int i = 0; i < 256; ++i) {
    collinear = std::max(collinear, collinearity_deviation(b, ctx.config.rho,
                                                           2.0 * std::numbers::pi * i / 256));
  }
  json r{{"rho", ctx.config.rho},
         {"every_position", eq.every_position},
         {"max_abs_torque", eq.max_abs_torque},
         {"scanned", eq.scanned},
         {"collinearity_max", collinear}};
  if (eq.every_position) {
    r["equilibria"] = "all";
  } else {
    r["equilibria"] = eq.angles;
    r["count"] = eq.angles.size();
  }
  emit_json(ctx, r);
}

void cmd_roundness(Context& ctx) {
  const Body b = load_config_body(ctx.config);
  const Weight w = load_config_weight(ctx.config, b);
  const auto opts = approx_options(ctx.config);
  const double delta = resolve_delta(ctx.config, b, w, opts.caps);
  const auto approx = build_ulam_body(b, w, delta, ctx.config.m, opts);
  const auto r = roundness(approx);
  emit_json(ctx, {{"center", vec_json(r.center)},
                  {"radius", r.radius},
                  {"radius_range", bracket(r.min_radius, r.max_radius)},
                  {"score", r.score}});
}

void validate(const RunConfig& c) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw UsageError(std::string(name) + " must be positive");
    }
  };
  positive(c.rel_tol, "--rel-tol");
  positive(c.radial_rel_tol, "--radial-rel-tol");
  positive(c.check_tol, "--tol");
  if (c.m < 2 || c.m % 2 != 0) {
    throw UsageError("--m must be a positive even number");
  }
  if (c.steps < 1) {
    throw UsageError("--steps must be at least 1");
  }
  if (c.mc_samples < 1) {
    throw UsageError("--mc-samples must be positive");
  }
  if (!c.format.empty() && c.format != "json" && c.format != "csv") {
    throw UsageError("--format must be json or csv");
  }
  backend_from_string(c.backend);
}

}  // namespace

std::string config_json(const RunConfig& config) { return to_json(config).dump(); }

int run(const RunConfig& config_in, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<void(Context&)>> commands{
      {"body", cmd_body},
      {"cut", cmd_cut},
      {"ulam", cmd_ulam},
      {"floating", cmd_floating},
      {"zp", cmd_zp},
      {"check sandwich", cmd_sandwich},
      {"check zp-sandwich", cmd_zp_sandwich},
      {"check symmetry", cmd_symmetry},
      {"asa", cmd_asa},
      {"limit", cmd_limit},
      {"pasa", cmd_pasa},
      {"grad-check", cmd_grad_check},
      {"float2d", cmd_float2d},
      {"roundness", cmd_roundness}};
  RunConfig config = config_in;
  if (config.threads <= 0) {
    config.threads = default_threads();
  }
  auto it = commands.find(config.command);
  if (it == commands.end()) {
    err << "error: unknown command '" << config.command << "'\n";
    return 2;
  }
  Context ctx{config, config.format, "", 0};
  if (ctx.format.empty()) {
    ctx.format = (config.command == "limit" || config.command == "pasa") ? "csv" : "json";
  }
  try {
    validate(config);
    it->second(ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (!ctx.payload.empty() && ctx.payload.back() != '\n') {
    ctx.payload += "\n";
  }
  if (config.output.empty()) {
    out << ctx.payload;
  } else {
    std::ofstream f(config.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << config.output << "'\n";
      return 2;
    }
    f << ctx.payload;
  }
  return ctx.code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Ulam floating bodies, weighted floating bodies and cap calculus"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  std::string theta_text;
  std::string p_text;

  auto common = [&](CLI::App* s) {
    s->add_option("--body", c.body_path, "Body JSON file")->required()->check(CLI::ExistingFile);
    s->add_option("-o,--output", c.output, "Output file (default: standard output)");
    s->add_option("--format", c.format, "json or csv");
    s->add_option("--threads", c.threads, "Worker count (default: available parallelism)");
  };
  auto weighted = [&](CLI::App* s) {
    s->add_option("--weight", c.weight_path, "Weight JSON file (default: constant 1)")
        ->check(CLI::ExistingFile);
    s->add_option("--backend", c.backend,
                  "auto, analytic, exact-clip, clip-cubature, slice-quadrature, monte-carlo");
    s->add_option("--rel-tol", c.rel_tol, "Relative tolerance of adaptive cap quadrature");
    s->add_option("--mc-samples", c.mc_samples, "Monte Carlo sample count");
    s->add_option("--seed", c.seed, "Random seed");
  };
  auto with_delta = [&](CLI::App* s) {
    s->add_option("--delta", c.delta, "Cap mass");
    s->add_flag("--relative", c.delta_relative, "Interpret --delta as a fraction of the mass");
  };
  auto with_p = [&](CLI::App* s) {
    s->add_option("--p", p_text, "Exponent p (number, inf or -inf)")->required();
  };
  auto experiment = [&](CLI::App* s) {
    s->add_option("--delta0", c.delta0, "First cap mass of the schedule");
    s->add_option("--steps", c.steps, "Schedule length; delta_k = delta0 4^-k");
    s->add_option("--resolution", c.resolution, "Boundary quadrature resolution (0: auto)");
    s->add_option("--radial-rel-tol", c.radial_rel_tol, "Radial bracket relative width");
  };

  auto* body = app.add_subcommand("body", "Describe a body");
  common(body);
  auto* cut = app.add_subcommand("cut", "Cut height and cap barycenter");
  common(cut);
  weighted(cut);
  with_delta(cut);
  cut->add_option("--theta", theta_text, "Direction, comma separated")->required();
  auto* ulam = app.add_subcommand("ulam", "Ulam floating body M_delta(K, phi)");
  auto* floating = app.add_subcommand("floating", "Weighted floating body F_delta(K, phi)");
  auto* roundness_cmd = app.add_subcommand("roundness", "Circle fit of an Ulam body boundary");
  for (auto* s : {ulam, floating, roundness_cmd}) {
    common(s);
    weighted(s);
    with_delta(s);
    s->add_option("--m", c.m, "Direction count (even)");
  }
  auto* zp = app.add_subcommand("zp", "L_p centroid body of a volume-one body");
  common(zp);
  with_p(zp);
  zp->add_option("--m", c.m, "Direction count (even)");

  auto* check = app.add_subcommand("check", "Verification suites");
  check->require_subcommand(1);
  auto* sandwich = check->add_subcommand("sandwich", "F_{(1-1/e)delta} ⊆ M_delta ⊆ F_{delta/e}");
  common(sandwich);
  weighted(sandwich);
  with_delta(sandwich);
  auto* zps = check->add_subcommand("zp-sandwich", "K_delta ⊆ M_delta ⊆ e Z_{log(1/delta)}");
  common(zps);
  zps->add_option("--delta", c.delta, "Cap volume");
  auto* sym = check->add_subcommand("symmetry", "Symmetry identities for volume-one bodies");
  common(sym);
  sym->add_option("--delta", c.delta, "Cap volume");
  for (auto* s : {sandwich, zps, sym}) {
    s->add_option("--m", c.m, "Direction count (even)");
    s->add_option("--tol", c.check_tol, "Check tolerance");
  }

  auto* asa = app.add_subcommand("asa", "L_p affine surface area");
  common(asa);
  with_p(asa);
  auto* limit = app.add_subcommand("limit", "Volume-defect limit experiment");
  common(limit);
  weighted(limit);
  experiment(limit);
  limit->add_option("--m", c.m, "Direction count (even)");
  auto* pasa = app.add_subcommand("pasa", "Limit experiment with phi_p against as_p");
  common(pasa);
  with_p(pasa);
  experiment(pasa);
  pasa->add_option("--m", c.m, "Direction count (even)");
  pasa->add_option("--extension", c.extension, "phi_p extension: radial or collar");
  auto* grad = app.add_subcommand("grad-check", "Finite-difference check of cap derivatives");
  common(grad);
  grad->add_option("--samples", c.samples, "Random instances");
  grad->add_option("--seed", c.seed, "Random seed");
  auto* float2d = app.add_subcommand("float2d", "Planar flotation equilibria");
  common(float2d);
  float2d->add_option("--rho", c.rho, "Density in (0, 1)");
  float2d->add_option("--samples", c.samples, "Scan size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  for (auto* s : app.get_subcommands()) {
    c.command = s->get_name();
    for (auto* sub : s->get_subcommands()) {
      c.command += " " + sub->get_name();
    }
  }
  try {
    if (!theta_text.empty()) {
      std::stringstream ss(theta_text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        c.theta.push_back(std::stod(item));
      }
    }
    if (!p_text.empty()) {
      if (p_text == "inf" || p_text == "+inf") {
        c.p = std::numeric_limits<double>::infinity();
      } else if (p_text == "-inf") {
        c.p = -std::numeric_limits<double>::infinity();
      } else {
        c.p = std::stod(p_text);
      }
    }
  } catch (const std::exception&) {
    err << "error: malformed numeric argument\n";
    return 2;
  }
  return run(c, out, err);
}

}  // namespace ulamfloat
