// Command-line harness for the non-commutative oscillator smoothing library:
// derived parameters, Gaussian smoothing evaluation, limit orderings,
// evolution, the operator oracle suite, and the kernel-variant fit.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncphase/dynamics.hpp"
#include "ncphase/fock.hpp"
#include "ncphase/function_space.hpp"
#include "ncphase/io.hpp"
#include "ncphase/limits.hpp"
#include "ncphase/params.hpp"
#include "ncphase/quadrature.hpp"
#include "ncphase/smoothing.hpp"

using nlohmann::json;
using namespace ncphase;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config_error = 1;
constexpr int exit_not_converged = 2;
constexpr int exit_oracle_failure = 3;

class config_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double hbar = 1.0, theta = 1.0, mass = 1.0, omega = 1.0;
  int order = 20;
  long mc_samples = 100000;
  std::uint64_t seed = 12345;
  double rel_tol = 5e-3;
  std::string variant = "A";
  std::string format = "json";
  std::string out;
  std::string function_spec;
  std::string point = "0,0,0,0";
  std::string sweep;
  std::string config_path;
  std::string method = "gh";
  double t = 0.0;
  int nmax = 12;
  int pairs = 100;
};

/// Registry tying option names to CLI11 options and config-JSON setters, so
/// that --config values apply exactly where no command-line flag was given.
struct Registry {
  std::map<std::string, std::vector<CLI::Option*>> options;
  std::map<std::string, std::function<void(const json&)>> setters;

  template <typename T>
  void add(CLI::App* app, const std::string& name, T& target, const std::string& help) {
    options[name].push_back(app->add_option("--" + name, target, help));
    setters[name] = [&target](const json& v) { target = v.get<T>(); };
  }

  void apply_config(const json& cfg) {
    if (!cfg.is_object()) throw config_error("config file must hold a JSON object");
    for (const auto& [key, value] : cfg.items()) {
      const auto it = setters.find(key);
      if (it == setters.end()) throw config_error("unknown config key: " + key);
      bool given_on_cli = false;
      for (const CLI::Option* o : options.at(key)) given_on_cli = given_on_cli || o->count() > 0;
      if (!given_on_cli) it->second(value);
    }
  }
};

PhaseVector parse_point(const std::string& s) {
  std::vector<double> vals;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const double v = std::stod(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw config_error("bad coordinate in --point: " + item);
    vals.push_back(v);
  }
  if (vals.size() != 4) throw config_error("--point needs exactly 4 comma-separated values");
  return {vals[0], vals[1], vals[2], vals[3]};
}

struct Sweep {
  std::string axis;
  double start = 0, stop = 0;
  int points = 0;
  bool active = false;
};

Sweep parse_sweep(const std::string& s) {
  Sweep sw;
  if (s.empty()) return sw;
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4) throw config_error("--sweep must be axis:start:stop:points");
  sw.axis = parts[0];
  try {
    sw.start = std::stod(parts[1]);
    sw.stop = std::stod(parts[2]);
    sw.points = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw config_error("bad numeric field in --sweep");
  }
  if (sw.points < 1 || sw.points > 100000) throw config_error("--sweep points out of range");
  sw.active = true;
  return sw;
}

std::vector<double> linear_values(const Sweep& sw) {
  std::vector<double> v;
  if (sw.points == 1) return {sw.start};
  for (int i = 0; i < sw.points; ++i)
    v.push_back(sw.start + (sw.stop - sw.start) * i / (sw.points - 1));
  return v;
}

std::vector<double> geometric_values(const Sweep& sw) {
  if (!(sw.start > 0.0) || !(sw.stop > 0.0))
    throw config_error("geometric sweep needs positive start and stop");
  std::vector<double> v;
  if (sw.points == 1) return {sw.start};
  for (int i = 0; i < sw.points; ++i)
    v.push_back(sw.start * std::pow(sw.stop / sw.start, static_cast<double>(i) / (sw.points - 1)));
  return v;
}

SepGaussFunction load_function(const std::string& spec) {
  if (spec.empty()) return demo_function();
  json j;
  try {
    if (!spec.empty() && spec[0] == '@') {
      std::ifstream in(spec.substr(1));
      if (!in) throw config_error("cannot open function file " + spec.substr(1));
      j = json::parse(in);
    } else {
      j = json::parse(spec);
    }
    return SepGaussFunction::from_json(j);
  } catch (const json::exception& e) {
    throw config_error(std::string("bad --function JSON: ") + e.what());
  }
}

KernelVariant parse_variant(const std::string& v) {
  if (v == "A" || v == "auto") return KernelVariant::A;  // auto resolves to the fitted profile
  if (v == "B") return KernelVariant::B;
  throw config_error("--variant must be A, B or auto");
}

/// JSON value for a double; non-finite values become strings so the output
/// stays parseable.
json jnum(double v) {
  if (std::isfinite(v)) return v;
  return io::format_g17(v);
}

std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  return io::format_g17(v.get<double>());
}

void emit(const Options& opt, const json& root, const io::Table& table) {
  std::string payload;
  if (opt.format == "json")
    payload = root.dump(2) + "\n";
  else if (opt.format == "csv")
    payload = io::to_csv(table);
  else
    throw config_error("--format must be json or csv");
  if (opt.out.empty())
    std::cout << payload;
  else
    io::write_atomic(opt.out, payload);
}

void set_axis(const std::string& axis, double v, PhysParams& p, PhaseVector& r, double& t,
              bool allow_coords, bool allow_t) {
  if (axis == "hbar") p.hbar = v;
  else if (axis == "theta") p.theta = v;
  else if (axis == "mass") p.mass = v;
  else if (axis == "omega") p.omega = v;
  else if (allow_coords && axis == "x1") r.x1 = v;
  else if (allow_coords && axis == "x2") r.x2 = v;
  else if (allow_coords && axis == "y1") r.y1 = v;
  else if (allow_coords && axis == "y2") r.y2 = v;
  else if (allow_t && axis == "t") t = v;
  else throw config_error("unsupported sweep axis: " + axis);
}

json params_row(const PhysParams& p) {
  p.validate();
  const DerivedParams d = derive(p);
  json row;
  row["hbar"] = jnum(p.hbar);
  row["theta"] = jnum(p.theta);
  row["mass"] = jnum(p.mass);
  row["omega"] = jnum(p.omega);
  row["lambda_plus"] = jnum(d.lambda_plus);
  row["lambda_minus"] = jnum(d.lambda_minus);
  row["lambda_sum"] = jnum(d.lambda_sum);
  row["K_plus"] = jnum(d.K_plus);
  row["K_minus"] = jnum(d.K_minus);
  row["mu"] = jnum(d.mu);
  row["gamma_plus"] = jnum(d.gamma_plus);
  row["gamma_minus"] = jnum(d.gamma_minus);
  row["omega_plus"] = jnum(d.omega_plus);
  row["omega_minus"] = jnum(d.omega_minus);
  row["beta"] = jnum(d.beta);
  row["norm_N"] = jnum(d.norm_N);
  row["J_det"] = jnum(d.J_det);
  row["regime"] = to_string(limit_regime(p, 1e-6));
  return row;
}

const std::vector<std::string> params_cols = {
    "hbar", "theta", "mass", "omega", "lambda_plus", "lambda_minus", "lambda_sum",
    "K_plus", "K_minus", "mu", "gamma_plus", "gamma_minus", "omega_plus", "omega_minus",
    "beta", "norm_N", "J_det", "regime"};

io::Table to_table(const std::vector<std::string>& cols, const json& rows) {
  io::Table t;
  t.columns = cols;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& c : cols) line.push_back(row.contains(c) ? cell(row.at(c)) : "");
    t.rows.push_back(std::move(line));
  }
  return t;
}

int run_params(const Options& opt, const Sweep& sw) {
  PhysParams p{opt.hbar, opt.theta, opt.mass, opt.omega};
  json rows = json::array();
  if (sw.active) {
    PhaseVector dummy{};
    double tdummy = 0;
    for (double v : linear_values(sw)) {
      PhysParams ps = p;
      set_axis(sw.axis, v, ps, dummy, tdummy, false, false);
      json row = params_row(ps);
      row["sweep_value"] = jnum(v);
      rows.push_back(row);
    }
  } else {
    rows.push_back(params_row(p));
  }
  json root;
  root["command"] = "params";
  root["rows"] = rows;
  auto cols = params_cols;
  if (sw.active) cols.insert(cols.begin(), "sweep_value");
  emit(opt, root, to_table(cols, rows));
  return exit_ok;
}

int run_smooth(const Options& opt, const Sweep& sw) {
  if (opt.method != "gh" && opt.method != "closed" && opt.method != "mc" && opt.method != "all")
    throw config_error("--method must be gh, closed, mc or all");
  const SepGaussFunction F = load_function(opt.function_spec);
  const KernelVariant variant = parse_variant(opt.variant);
  QuadratureSpec q;
  q.hermite_order = opt.order;
  q.mc_samples = opt.mc_samples;
  q.rng_seed = opt.seed;
  q.rel_tol = opt.rel_tol;
  q.validate();

  const PhysParams base_p{opt.hbar, opt.theta, opt.mass, opt.omega};
  const PhaseVector base_r = parse_point(opt.point);
  std::vector<double> sweep_vals = sw.active ? linear_values(sw) : std::vector<double>{0.0};

  bool all_converged = true;
  json rows = json::array();
  for (std::size_t i = 0; i < sweep_vals.size(); ++i) {
    PhysParams p = base_p;
    PhaseVector r = base_r;
    double tdummy = 0;
    if (sw.active) set_axis(sw.axis, sweep_vals[i], p, r, tdummy, true, false);
    p.validate();
    json row;
    if (sw.active) row["sweep_value"] = jnum(sweep_vals[i]);
    row["x1"] = jnum(r.x1);
    row["x2"] = jnum(r.x2);
    row["y1"] = jnum(r.y1);
    row["y2"] = jnum(r.y2);
    const bool hbar_zero = p.hbar == 0.0;
    const bool want_gh = opt.method == "gh" || opt.method == "all";
    const bool want_closed = opt.method == "closed" || opt.method == "all";
    const bool want_mc = opt.method == "mc" || opt.method == "all";
    if (want_gh) {
      if (hbar_zero) {
        row["value"] = jnum(smooth_hbar0(F, r, p.theta, p));
        row["error_estimate"] = 0.0;
        row["converged"] = true;
      } else {
        const SmoothResult res = smooth(F, r, p, q, variant);
        row["value"] = jnum(res.value);
        row["error_estimate"] = jnum(res.error_estimate);
        row["converged"] = res.converged;
        all_converged = all_converged && res.converged;
      }
    }
    if (want_closed) {
      if (!F.is_separable()) throw config_error("closed method needs a separable function");
      row["closed_form"] =
          jnum(hbar_zero ? smooth_hbar0(F, r, p.theta, p) : smooth_closed_form(F, r, p, variant));
    }
    if (want_mc) {
      if (hbar_zero) throw config_error("mc method requires hbar > 0");
      const MCEstimate mc = smooth_mc(F, r, p, q, variant);
      row["mc_value"] = jnum(mc.value);
      row["mc_std_error"] = jnum(mc.std_error);
    }
    rows.push_back(row);
  }
  json root;
  root["command"] = "smooth";
  root["variant"] = opt.variant == "B" ? "B" : "A";
  root["method"] = opt.method;
  root["order"] = opt.order;
  root["rows"] = rows;
  std::vector<std::string> cols;
  if (sw.active) cols.push_back("sweep_value");
  for (const char* c : {"x1", "x2", "y1", "y2"}) cols.push_back(c);
  if (opt.method == "gh" || opt.method == "all")
    for (const char* c : {"value", "error_estimate", "converged"}) cols.push_back(c);
  if (opt.method == "closed" || opt.method == "all") cols.push_back("closed_form");
  if (opt.method == "mc" || opt.method == "all")
    for (const char* c : {"mc_value", "mc_std_error"}) cols.push_back(c);
  emit(opt, root, to_table(cols, rows));
  if (!all_converged) {
    std::cerr << "quadrature did not reach the requested tolerance; "
                 "raise --order or loosen --rel-tol\n";
    return exit_not_converged;
  }
  return exit_ok;
}

int run_limits(const Options& opt, const Sweep& sw) {
  const SepGaussFunction F = load_function(opt.function_spec);
  const PhaseVector r = parse_point(opt.point);
  QuadratureSpec q;
  q.hermite_order = opt.order;
  q.mc_samples = opt.mc_samples;
  q.rng_seed = opt.seed;
  q.rel_tol = opt.rel_tol;
  q.validate();
  std::vector<double> scales{1e-1, 1e-2, 1e-3, 1e-4};
  if (sw.active) {
    if (sw.axis != "s") throw config_error("limits sweep axis must be s");
    scales = geometric_values(sw);
  }
  const LimitPath theta_first = limit_theta_first(F, r, opt.mass, opt.omega, scales, q);
  const LimitPath hbar_first = limit_hbar_first(F, r, opt.mass, opt.omega, scales);
  const LimitPath diagonal = limit_diagonal(F, r, opt.mass, opt.omega, scales, q);

  json paths = json::array();
  json rows = json::array();
  const std::vector<std::pair<std::string, const LimitPath*>> named = {
      {"theta_first", &theta_first}, {"hbar_first", &hbar_first}, {"diagonal", &diagonal}};
  for (const auto& [name, path] : named) {
    json jp;
    jp["name"] = name;
    json samples = json::array();
    for (std::size_t i = 0; i < path->scales.size(); ++i) {
      samples.push_back({{"scale", jnum(path->scales[i])}, {"value", jnum(path->values[i])}});
      rows.push_back({{"path", name},
                      {"scale", jnum(path->scales[i])},
                      {"value", jnum(path->values[i])},
                      {"kind", "sample"}});
    }
    jp["samples"] = samples;
    jp["extrapolated"] = jnum(path->extrapolated);
    paths.push_back(jp);
    rows.push_back(
        {{"path", name}, {"scale", nullptr}, {"value", jnum(path->extrapolated)}, {"kind", "extrapolated"}});
  }
  json root;
  root["command"] = "limits";
  root["paths"] = paths;
  root["ordering_gap"] = jnum(std::abs(theta_first.extrapolated - hbar_first.extrapolated));
  emit(opt, root, to_table({"path", "scale", "value", "kind"}, rows));
  return exit_ok;
}

int run_dynamics(const Options& opt, const Sweep& sw) {
  const SepGaussFunction F = load_function(opt.function_spec);
  const KernelVariant variant = parse_variant(opt.variant);
  const PhaseVector base_r = parse_point(opt.point);
  QuadratureSpec q;
  q.hermite_order = opt.order;
  q.mc_samples = opt.mc_samples;
  q.rng_seed = opt.seed;
  q.rel_tol = opt.rel_tol;
  q.validate();

  const PhysParams base_p{opt.hbar, opt.theta, opt.mass, opt.omega};
  std::vector<double> sweep_vals = sw.active ? linear_values(sw) : std::vector<double>{0.0};

  bool all_converged = true;
  json rows = json::array();
  double last_t = opt.t;
  PhysParams last_p = base_p;
  for (std::size_t i = 0; i < sweep_vals.size(); ++i) {
    PhysParams p = base_p;
    PhaseVector r = base_r;
    double t = opt.t;
    if (sw.active) set_axis(sw.axis, sweep_vals[i], p, r, t, true, true);
    p.validate();
    last_t = t;
    last_p = p;
    json row;
    if (sw.active) row["sweep_value"] = jnum(sweep_vals[i]);
    row["t"] = jnum(t);
    if (p.hbar == 0.0) {
      row["value"] = jnum(evolved_hbar0(F, r, t, p.theta, p));
      row["error_estimate"] = 0.0;
      row["converged"] = true;
      row["closed_form"] = row["value"];
    } else {
      const SmoothResult res = smooth_evolved(F, r, t, p, q, variant);
      row["value"] = jnum(res.value);
      row["error_estimate"] = jnum(res.error_estimate);
      row["converged"] = res.converged;
      if (F.is_separable())
        row["closed_form"] = jnum(smooth_evolved_closed_form(F, r, t, p, variant));
      all_converged = all_converged && res.converged;
    }
    rows.push_back(row);
  }
  json root;
  root["command"] = "dynamics";
  root["rows"] = rows;
  {
    last_p.validate();
    const DerivedParams d = derive(last_p);
    const SymplecticMatrix4 m = evolution_matrix(last_t, d);
    json jm = json::array();
    for (int i = 0; i < 4; ++i) {
      json jr = json::array();
      for (int j = 0; j < 4; ++j) jr.push_back(jnum(m.A(i, j)));
      jm.push_back(jr);
    }
    root["evolution_matrix"] = jm;
    root["omega_plus"] = jnum(m.omega_plus);
    root["omega_minus"] = jnum(m.omega_minus);
    const Eigen::Matrix4d om = omega_form();
    root["symplectic_defect"] = jnum((m.A.transpose() * om * m.A - om).norm());
  }
  std::vector<std::string> cols;
  if (sw.active) cols.push_back("sweep_value");
  for (const char* c : {"t", "value", "error_estimate", "converged", "closed_form"})
    cols.push_back(c);
  emit(opt, root, to_table(cols, rows));
  if (!all_converged) {
    std::cerr << "quadrature did not reach the requested tolerance; "
                 "raise --order or loosen --rel-tol\n";
    return exit_not_converged;
  }
  return exit_ok;
}

int run_oracle(const Options& opt) {
  const fock::FockTruncation tr{opt.nmax};
  const PhysParams p{opt.hbar, opt.theta, opt.mass, opt.omega};
  const auto checks = fock::run_oracle_suite(tr, p);
  json rows = json::array();
  bool all_pass = true;
  std::string first_fail;
  for (const auto& c : checks) {
    rows.push_back({{"name", c.name},
                    {"residual", jnum(c.residual)},
                    {"tolerance", jnum(c.tolerance)},
                    {"pass", c.pass}});
    if (!c.pass && first_fail.empty()) first_fail = c.name;
    all_pass = all_pass && c.pass;
  }
  json root;
  root["command"] = "oracle";
  root["n_max"] = opt.nmax;
  root["checks"] = rows;
  root["all_pass"] = all_pass;
  emit(opt, root, to_table({"name", "residual", "tolerance", "pass"}, rows));
  if (!all_pass) {
    std::cerr << "oracle check failed: " << first_fail << "\n";
    return exit_oracle_failure;
  }
  return exit_ok;
}

int run_kernel_fit(const Options& opt) {
  const fock::FockTruncation tr{opt.nmax};
  const PhysParams p{opt.hbar, opt.theta, opt.mass, opt.omega};
  p.validate(true);
  const DerivedParams d = derive(p);
  const auto rep = fock::kernel_fit(tr, d, p, opt.pairs, opt.seed);
  json rows = json::array();
  for (const auto& row : rep.rows) {
    rows.push_back({{"x1", jnum(row.r.x1)},
                    {"x2", jnum(row.r.x2)},
                    {"y1", jnum(row.r.y1)},
                    {"y2", jnum(row.r.y2)},
                    {"x1_prime", jnum(row.r_prime.x1)},
                    {"x2_prime", jnum(row.r_prime.x2)},
                    {"y1_prime", jnum(row.r_prime.y1)},
                    {"y2_prime", jnum(row.r_prime.y2)},
                    {"oracle", jnum(row.oracle)},
                    {"variant_A", jnum(row.variant_A)},
                    {"variant_B", jnum(row.variant_B)}});
  }
  json root;
  root["command"] = "kernel-fit";
  root["n_max"] = opt.nmax;
  root["pairs"] = opt.pairs;
  root["seed"] = opt.seed;
  root["rows"] = rows;
  root["rss_A"] = jnum(rep.rss_A);
  root["rss_B"] = jnum(rep.rss_B);
  root["max_rel_err_A"] = jnum(rep.max_rel_err_A);
  root["max_rel_err_B"] = jnum(rep.max_rel_err_B);
  root["selected"] = rep.selected == KernelVariant::A ? "A" : "B";
  emit(opt, root,
       to_table({"x1", "x2", "y1", "y2", "x1_prime", "x2_prime", "y1_prime", "y2_prime",
                 "oracle", "variant_A", "variant_B"},
                rows));
  if (!opt.out.empty())
    std::cout << "selected=" << (rep.selected == KernelVariant::A ? "A" : "B")
              << " rss_A=" << io::format_g17(rep.rss_A) << " rss_B=" << io::format_g17(rep.rss_B)
              << "\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-commutative oscillator smoothing toolkit"};
  app.require_subcommand(1);

  Options opt;
  Registry reg;

  reg.add(&app, "hbar", opt.hbar, "Planck constant");
  reg.add(&app, "theta", opt.theta, "configuration-space non-commutativity");
  reg.add(&app, "mass", opt.mass, "oscillator mass");
  reg.add(&app, "omega", opt.omega, "oscillator frequency");
  reg.add(&app, "order", opt.order, "Gauss-Hermite tensor order");
  reg.add(&app, "mc-samples", opt.mc_samples, "Monte Carlo sample count");
  reg.add(&app, "seed", opt.seed, "RNG seed");
  reg.add(&app, "rel-tol", opt.rel_tol, "relative tolerance for convergence");
  reg.add(&app, "variant", opt.variant, "kernel width profile: A, B or auto");
  reg.add(&app, "format", opt.format, "output format: json or csv");
  reg.add(&app, "out", opt.out, "output file (atomic write); stdout if omitted");
  reg.add(&app, "function", opt.function_spec,
          "observable as JSON (or @file); defaults to the demo observable");
  reg.add(&app, "point", opt.point, "phase-space point x1,x2,y1,y2");
  reg.add(&app, "sweep", opt.sweep, "sweep axis:start:stop:points");
  app.add_option("--config", opt.config_path, "JSON config file; flags take precedence");

  CLI::App* cmd_params = app.add_subcommand("params", "derived parameters and regime");
  CLI::App* cmd_smooth = app.add_subcommand("smooth", "evaluate the composed smoothing");
  CLI::App* cmd_limits = app.add_subcommand("limits", "limit orderings with extrapolation");
  CLI::App* cmd_dynamics = app.add_subcommand("dynamics", "time-evolved smoothing");
  CLI::App* cmd_oracle = app.add_subcommand("oracle", "operator-oracle residual suite");
  CLI::App* cmd_fit = app.add_subcommand("kernel-fit", "fit kernel variants to the oracle");
  for (CLI::App* sub : {cmd_params, cmd_smooth, cmd_limits, cmd_dynamics, cmd_oracle, cmd_fit})
    sub->fallthrough();

  reg.add(cmd_smooth, "method", opt.method, "gh, closed, mc or all");
  reg.add(cmd_dynamics, "t", opt.t, "evolution time");
  reg.add(cmd_oracle, "nmax", opt.nmax, "Fock truncation level");
  reg.add(cmd_fit, "nmax", opt.nmax, "Fock truncation level");
  reg.add(cmd_fit, "pairs", opt.pairs, "number of random pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_config_error;
  }

  try {
    if (!opt.config_path.empty()) {
      std::ifstream in(opt.config_path);
      if (!in) throw config_error("cannot open config file " + opt.config_path);
      json cfg;
      try {
        cfg = json::parse(in);
      } catch (const json::exception& e) {
        throw config_error(std::string("bad config JSON: ") + e.what());
      }
      reg.apply_config(cfg);
    }
    const Sweep sw = parse_sweep(opt.sweep);
    if (app.got_subcommand(cmd_params)) return run_params(opt, sw);
    if (app.got_subcommand(cmd_smooth)) return run_smooth(opt, sw);
    if (app.got_subcommand(cmd_limits)) return run_limits(opt, sw);
    if (app.got_subcommand(cmd_dynamics)) return run_dynamics(opt, sw);
    if (app.got_subcommand(cmd_oracle)) {
      if (sw.active) throw config_error("oracle does not support --sweep");
      return run_oracle(opt);
    }
    if (app.got_subcommand(cmd_fit)) {
      if (sw.active) throw config_error("kernel-fit does not support --sweep");
      return run_kernel_fit(opt);
    }
    throw config_error("no subcommand selected");
  } catch (const fock::truncation_error& e) {
    std::cerr << "oracle failure: " << e.what() << "\n";
    return exit_oracle_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config_error;
  }
}
