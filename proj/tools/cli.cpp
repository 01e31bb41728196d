#include "cli.hpp"

#include "orthoglide/error.hpp"
#include "orthoglide/io.hpp"
#include "orthoglide/kinematics.hpp"
#include "orthoglide/performance.hpp"
#include "orthoglide/synthesis.hpp"
#include "orthoglide/trajectory.hpp"
#include "orthoglide/workspace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthoglide::cli {
namespace {

using json = nlohmann::ordered_json;
using Triple = std::array<double, 3>;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Everything a command may need. Lengths in mm, speeds in mm/s.
struct RunConfig {
  std::string command;

  std::optional<double> lw;
  std::optional<double> s_lo, s_hi;

  std::optional<double> leg_length;
  std::optional<Triple> stroke_min, stroke_max;

  std::optional<double> vmax, amax;
  std::optional<double> tol_serial, tol_closure, tol_parallel, tol_stroke;

  std::optional<int> grid, n;
  std::optional<Triple> pose;
  std::optional<Triple> region_q1;
  std::optional<double> region_side;
  std::optional<double> u_min, u_max;

  std::optional<std::string> out, waypoints;
};

struct Resolved {
  DesignParams design;
  Bounds bounds;
  std::optional<SynthesisResult> synthesis;
  std::optional<CubeSpec> region;
};

// ---------------------------------------------------------------- output

json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return io::round12(x);
}

json exact(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

template <class V>
json vec(const V& v) {
  json a = json::array();
  for (int i = 0; i < 3; ++i) a.push_back(num(v[i]));
  return a;
}

template <class V>
json vec_exact(const V& v) {
  json a = json::array();
  for (int i = 0; i < 3; ++i) a.push_back(exact(v[i]));
  return a;
}

json flags(const std::array<bool, 3>& f) { return json::array({f[0], f[1], f[2]}); }

json extreme(const Extreme& e) {
  if (!e.found) return nullptr;
  return json{{"value", num(e.value)}, {"at_mm", vec(e.where)}};
}

json report_summary(const GridReport& r) {
  return json{
      {"grid", r.n_per_axis},
      {"points", r.points.size()},
      {"unreachable", r.unreachable},
      {"stroke_violations", r.stroke_violations},
      {"bound_violations", r.bound_violations},
      {"sigma_min", extreme(r.sigma_min)},
      {"sigma_max", extreme(r.sigma_max)},
      {"diag_sigma_min", extreme(r.diag_sigma_min)},
      {"diag_sigma_max", extreme(r.diag_sigma_max)},
      {"offdiag_sigma_min", extreme(r.offdiag_sigma_min)},
      {"offdiag_sigma_max", extreme(r.offdiag_sigma_max)},
      {"diag_excess", num(r.diag_excess)},
      {"offdiag_excess", num(r.offdiag_excess)},
      {"clean", r.clean()},
  };
}

// Full precision so it can be read back as an explicit design.
json design_block(const DesignParams& d) {
  return json{
      {"leg_length_mm", exact(d.leg_length)},
      {"stroke_min_mm", vec_exact(d.stroke_min)},
      {"stroke_max_mm", vec_exact(d.stroke_max)},
      {"motor_vmax_mm_s", exact(d.motor_vmax)},
      {"motor_amax_mm_s2", exact(d.motor_amax)},
      {"tolerances",
       {{"serial", d.tol.serial},
        {"closure", d.tol.closure},
        {"parallel", d.tol.parallel},
        {"stroke", d.tol.stroke}}},
  };
}

void emit(const json& doc, const RunConfig& cfg, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (cfg.out) {
    std::ofstream f(*cfg.out, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + *cfg.out);
    f << text;
  } else {
    out << text;
  }
}

std::ofstream open_out(const RunConfig& cfg) {
  if (!cfg.out || cfg.out->empty()) throw ConfigError(cfg.command + " requires --out");
  std::ofstream f(*cfg.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + *cfg.out);
  return f;
}

// ---------------------------------------------------------------- config file

double as_number(const json& j, const std::string& key) {
  if (j.is_null()) return kInf;
  if (!j.is_number()) throw ConfigError("'" + key + "' must be a number");
  return j.get<double>();
}

Triple as_triple(const json& j, const std::string& key, bool allow_scalar) {
  if (allow_scalar && (j.is_number() || j.is_null())) {
    const double x = as_number(j, key);
    return {x, x, x};
  }
  if (!j.is_array() || j.size() != 3) throw ConfigError("'" + key + "' must be a 3-element array");
  return {as_number(j[0], key), as_number(j[1], key), as_number(j[2], key)};
}

// Nulls in a stroke array stand for an unbounded side.
Triple as_stroke(const json& j, const std::string& key, double sign) {
  Triple t = as_triple(j, key, true);
  for (double& x : t) {
    if (std::isinf(x)) x = sign * kInf;
  }
  return t;
}

int as_int(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& key) {
  if (!j.is_string()) throw ConfigError("'" + key + "' must be a string");
  return j.get<std::string>();
}

template <class T>
void fill(std::optional<T>& slot, const T& value) {
  if (!slot) slot = value;
}

void apply_design_block(RunConfig& cfg, const json& d) {
  if (!d.is_object()) throw ConfigError("'design' must be an object");
  for (const auto& [key, v] : d.items()) {
    if (key == "leg_length_mm") fill(cfg.leg_length, as_number(v, key));
    else if (key == "stroke_min_mm") fill(cfg.stroke_min, as_stroke(v, key, -1.0));
    else if (key == "stroke_max_mm") fill(cfg.stroke_max, as_stroke(v, key, 1.0));
    else if (key == "motor_vmax_mm_s") fill(cfg.vmax, as_number(v, key));
    else if (key == "motor_amax_mm_s2") fill(cfg.amax, as_number(v, key));
    else if (key == "tolerances") {
      if (!v.is_object()) throw ConfigError("'tolerances' must be an object");
      for (const auto& [tk, tv] : v.items()) {
        if (tk == "serial") fill(cfg.tol_serial, as_number(tv, tk));
        else if (tk == "closure") fill(cfg.tol_closure, as_number(tv, tk));
        else if (tk == "parallel") fill(cfg.tol_parallel, as_number(tv, tk));
        else if (tk == "stroke") fill(cfg.tol_stroke, as_number(tv, tk));
        else throw ConfigError("unknown tolerance '" + tk + "'");
      }
    } else {
      throw ConfigError("unknown design key '" + key + "'");
    }
  }
}

// Values already set from the command line win over the file.
void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config " + path);
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config " + path + " must hold a JSON object");

  for (const auto& [key, v] : doc.items()) {
    if (key == "lw") fill(cfg.lw, as_number(v, key));
    else if (key == "s-lo") fill(cfg.s_lo, as_number(v, key));
    else if (key == "s-hi") fill(cfg.s_hi, as_number(v, key));
    else if (key == "leg-length") fill(cfg.leg_length, as_number(v, key));
    else if (key == "stroke-min") fill(cfg.stroke_min, as_stroke(v, key, -1.0));
    else if (key == "stroke-max") fill(cfg.stroke_max, as_stroke(v, key, 1.0));
    else if (key == "vmax") fill(cfg.vmax, 1000.0 * as_number(v, key));
    else if (key == "amax") fill(cfg.amax, 1000.0 * as_number(v, key));
    else if (key == "grid") fill(cfg.grid, as_int(v, key));
    else if (key == "n") fill(cfg.n, as_int(v, key));
    else if (key == "pose") fill(cfg.pose, as_triple(v, key, false));
    else if (key == "region-q1") fill(cfg.region_q1, as_triple(v, key, false));
    else if (key == "region-side") fill(cfg.region_side, as_number(v, key));
    else if (key == "u-min") fill(cfg.u_min, as_number(v, key));
    else if (key == "u-max") fill(cfg.u_max, as_number(v, key));
    else if (key == "out") fill(cfg.out, as_string(v, key));
    else if (key == "waypoints") fill(cfg.waypoints, as_string(v, key));
    else if (key == "tol-serial") fill(cfg.tol_serial, as_number(v, key));
    else if (key == "tol-closure") fill(cfg.tol_closure, as_number(v, key));
    else if (key == "tol-parallel") fill(cfg.tol_parallel, as_number(v, key));
    else if (key == "tol-stroke") fill(cfg.tol_stroke, as_number(v, key));
    else if (key == "design") apply_design_block(cfg, v);
    else if (key == "bounds") {
      if (!v.is_object()) throw ConfigError("'bounds' must be an object");
      if (v.contains("s_lo")) fill(cfg.s_lo, as_number(v["s_lo"], "s_lo"));
      if (v.contains("s_hi")) fill(cfg.s_hi, as_number(v["s_hi"], "s_hi"));
    } else if (key == "region") {
      if (!v.is_object()) throw ConfigError("'region' must be an object");
      if (v.contains("q1_mm")) fill(cfg.region_q1, as_triple(v["q1_mm"], "q1_mm", false));
      if (v.contains("side_mm")) fill(cfg.region_side, as_number(v["side_mm"], "side_mm"));
    } else if (key == "command" || key == "synthesis" || key == "verification") {
      // Report sections of a previous run; informational only.
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

// ---------------------------------------------------------------- resolution

Resolved resolve(const RunConfig& cfg) {
  const bool explicit_design = cfg.leg_length.has_value();
  if (explicit_design && cfg.lw) {
    throw ConfigError("give either --lw (synthesis) or --leg-length (explicit design), not both");
  }

  Resolved r;
  r.bounds = Bounds{cfg.s_lo.value_or(0.5), cfg.s_hi.value_or(2.0)};
  const double vmax = cfg.vmax.value_or(1200.0);
  const double amax = cfg.amax.value_or(20000.0);

  if (explicit_design) {
    if (!cfg.stroke_min || !cfg.stroke_max) {
      throw ConfigError("an explicit design needs --stroke-min and --stroke-max");
    }
    r.design.leg_length = *cfg.leg_length;
    r.design.stroke_min = *cfg.stroke_min;
    r.design.stroke_max = *cfg.stroke_max;
    r.design.motor_vmax = vmax;
    r.design.motor_amax = amax;
  } else {
    if (cfg.stroke_min || cfg.stroke_max) {
      throw ConfigError("--stroke-min/--stroke-max need --leg-length");
    }
    r.synthesis = synthesize(cfg.lw.value_or(200.0), r.bounds);
    r.design = to_design(*r.synthesis, vmax, amax);
  }
  if (cfg.tol_serial) r.design.tol.serial = *cfg.tol_serial;
  if (cfg.tol_closure) r.design.tol.closure = *cfg.tol_closure;
  if (cfg.tol_parallel) r.design.tol.parallel = *cfg.tol_parallel;
  if (cfg.tol_stroke) r.design.tol.stroke = *cfg.tol_stroke;
  r.design.validate();

  if (cfg.region_q1 || cfg.region_side) {
    if (!cfg.region_q1 || !cfg.region_side) {
      throw ConfigError("--region-q1 and --region-side go together");
    }
    const Triple& q = *cfg.region_q1;
    r.region = CubeSpec{ToolPose(q[0], q[1], q[2]), *cfg.region_side};
  } else if (r.synthesis) {
    r.region = r.synthesis->cube;
  }
  return r;
}

int grid_of(const RunConfig& cfg) { return cfg.grid.value_or(21); }

// ---------------------------------------------------------------- commands

int cmd_synthesize(const RunConfig& cfg, std::ostream& out) {
  if (cfg.leg_length) throw ConfigError("synthesize takes --lw, not an explicit design");
  const Resolved r = resolve(cfg);
  const SynthesisResult& s = *r.synthesis;
  const GridReport rep = verify_cube(r.design, s.cube, r.bounds, grid_of(cfg));

  json doc;
  doc["command"] = "synthesize";
  doc["synthesis"] = json{
      {"lw_mm", num(s.lw)},
      {"s_lo", num(s.bounds.s_lo)},
      {"s_hi", num(s.bounds.s_hi)},
      {"a_min", num(s.limits.a_min)},
      {"a_max", num(s.limits.a_max)},
      {"leg_length_mm", num(s.leg_length)},
      {"q1_mm", vec(s.q1)},
      {"q2_mm", vec(s.q2)},
      {"stroke_lo_mm", num(s.stroke_lo)},
      {"stroke_hi_mm", num(s.stroke_hi)},
      {"stroke_mm", num(s.stroke)},
      {"ratio", num(s.ratio)},
      {"lw_over_leg", num(s.lw_over_leg)},
  };
  doc["verification"] = report_summary(rep);
  doc["bounds"] = json{{"s_lo", exact(r.bounds.s_lo)}, {"s_hi", exact(r.bounds.s_hi)}};
  doc["region"] = json{{"q1_mm", vec_exact(s.cube.q1)}, {"side_mm", exact(s.cube.side)}};
  doc["design"] = design_block(r.design);
  emit(doc, cfg, out);
  return rep.clean() ? kOk : kViolations;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const Resolved r = resolve(cfg);
  const Triple q = cfg.pose.value_or(Triple{0.0, 0.0, 0.0});
  const ToolPose p(q[0], q[1], q[2]);

  const IkSolution ik = inverse_kinematics(p, r.design);
  const LegStates legs = leg_states(p, ik.joints, r.design);
  const InverseJacobian jinv = inverse_jacobian(p, ik.joints, r.design);
  const TransmissionReport tr = transmission_factors(jinv, r.design.tol);
  const IsotropyResidual iso = isotropy_residual(p, r.design);

  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(vec(Eigen::Vector3d(jinv.m.row(i).transpose())));

  json doc;
  doc["command"] = "analyze";
  doc["pose_mm"] = vec(p);
  doc["joints_mm"] = vec(ik.joints);
  doc["within_stroke"] = ik.within_stroke;
  doc["eta_mm"] = json::array({num(legs.legs[0].eta), num(legs.legs[1].eta), num(legs.legs[2].eta)});
  doc["closure_residual_mm"] = num(legs.closure_residual);
  doc["inverse_jacobian"] = rows;
  doc["det_inverse_jacobian"] = num(tr.det_inv);
  doc["sigma_fwd"] = vec(tr.sigma_fwd);
  doc["kappa"] = num(tr.kappa);
  doc["serial_flags"] = flags(tr.serial_flags);
  doc["parallel_flag"] = tr.parallel_flag;
  doc["isotropy"] = json{
      {"ratio_dev", num(iso.ratio_dev)},
      {"ratio_spread", num(iso.ratio_spread)},
      {"ortho_dev", num(iso.ortho_dev)},
      {"isotropic", iso.isotropic()},
  };
  // Worst direction under the Euclidean joint-speed limit.
  doc["worst_tool_speed_mm_s"] = num(r.design.motor_vmax * tr.sigma_fwd[0]);
  if (tr.parallel_flag) {
    doc["ellipsoid"] = nullptr;
  } else {
    const Ellipsoid e = manipulability_ellipsoid(jinv, r.design.tol);
    json dirs = json::array();
    for (int k = 0; k < 3; ++k) dirs.push_back(vec(Eigen::Vector3d(e.directions.col(k))));
    doc["ellipsoid"] = json{{"semi_axes", vec(e.semi_axes)}, {"directions", dirs}};
  }
  emit(doc, cfg, out);
  return kOk;
}

int cmd_workspace_map(const RunConfig& cfg, std::ostream& out) {
  const Resolved r = resolve(cfg);
  if (!r.region) throw ConfigError("workspace-map needs --region-q1/--region-side with an explicit design");
  std::ofstream f = open_out(cfg);
  const WorkspaceMap map = workspace_map(r.design, *r.region, r.bounds, grid_of(cfg));
  io::write_workspace_csv(f, map.records);

  json doc;
  doc["command"] = "workspace-map";
  doc["out"] = *cfg.out;
  doc["rows"] = map.records.size();
  doc["verification"] = report_summary(map.report);
  out << doc.dump(2) << "\n";
  return map.report.clean() ? kOk : kViolations;
}

int cmd_diag_profile(const RunConfig& cfg, std::ostream& out) {
  const Resolved r = resolve(cfg);
  double u_min = 0.0, u_max = 0.0;
  if (cfg.u_min && cfg.u_max) {
    u_min = *cfg.u_min;
    u_max = *cfg.u_max;
  } else if (!cfg.u_min && !cfg.u_max && r.region) {
    u_min = r.region->q1[0];
    u_max = r.region->q2()[0];
  } else {
    throw ConfigError("diag-profile needs --u-min and --u-max");
  }
  std::ofstream f = open_out(cfg);
  const auto samples = diagonal_profile(r.design, u_min, u_max, cfg.n.value_or(grid_of(cfg)));
  io::write_diagonal_csv(f, samples);

  json doc;
  doc["command"] = "diag-profile";
  doc["out"] = *cfg.out;
  doc["rows"] = samples.size();
  doc["u_min_mm"] = num(u_min);
  doc["u_max_mm"] = num(u_max);
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_traj_check(const RunConfig& cfg, std::ostream& out) {
  const Resolved r = resolve(cfg);
  if (!cfg.waypoints || cfg.waypoints->empty()) throw ConfigError("traj-check requires --waypoints");
  std::ifstream in(*cfg.waypoints);
  if (!in) throw ConfigError("cannot read " + *cfg.waypoints);
  const std::vector<Waypoint> wps = io::read_waypoints_csv(in);

  std::ofstream f = open_out(cfg);
  const PathProfile prof = profile_path(wps, r.design);
  io::write_profile_csv(f, prof);

  std::size_t vel_samples = 0, acc_samples = 0;
  double peak_vel = 0.0, peak_acc = 0.0;
  json first_vel = nullptr, first_acc = nullptr;
  for (const PathSample& s : prof.samples) {
    const bool v = std::ranges::any_of(s.vel_flag, [](bool b) { return b; });
    const bool a = std::ranges::any_of(s.acc_flag, [](bool b) { return b; });
    if (v && first_vel.is_null()) first_vel = num(s.t);
    if (a && first_acc.is_null()) first_acc = num(s.t);
    vel_samples += v;
    acc_samples += a;
    peak_vel = std::max(peak_vel, s.joint_vel.v.cwiseAbs().maxCoeff());
    peak_acc = std::max(peak_acc, s.joint_acc.cwiseAbs().maxCoeff());
  }

  json doc;
  doc["command"] = "traj-check";
  doc["out"] = *cfg.out;
  doc["samples"] = prof.samples.size();
  doc["motor_vmax_mm_s"] = num(r.design.motor_vmax);
  doc["motor_amax_mm_s2"] = num(r.design.motor_amax);
  doc["peak_joint_speed_mm_s"] = num(peak_vel);
  doc["peak_joint_acc_mm_s2"] = num(peak_acc);
  doc["velocity_flagged_samples"] = vel_samples;
  doc["acceleration_flagged_samples"] = acc_samples;
  doc["first_velocity_flag_t_s"] = first_vel;
  doc["first_acceleration_flag_t_s"] = first_acc;
  out << doc.dump(2) << "\n";
  return vel_samples + acc_samples > 0 ? kViolations : kOk;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::DegenerateBounds:
    case ErrorKind::NonMonotoneTime:
      return kConfigError;
    default:
      return kKinematicFailure;
  }
}

std::optional<Triple> triple_from(const std::vector<double>& v, const CLI::Option* opt) {
  if (opt->count() == 0) return std::nullopt;
  if (v.size() == 1) return Triple{v[0], v[0], v[0]};
  if (v.size() != 3) throw ConfigError("--" + opt->get_single_name() + " takes one value or three");
  return Triple{v[0], v[1], v[2]};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthoglide kinematic analysis and dimensional synthesis"};
  app.name("orthoglide");
  app.require_subcommand(1, 1);
  app.fallthrough();

  double lw = 0, s_lo = 0, s_hi = 0, leg = 0, vmax = 0, amax = 0;
  double tol_serial = 0, tol_closure = 0, tol_parallel = 0, tol_stroke = 0;
  double region_side = 0, u_min = 0, u_max = 0;
  int grid = 0, n = 0;
  std::vector<double> stroke_min, stroke_max, pose, region_q1;
  std::string out_path, waypoints, config;

  auto* o_lw = app.add_option("--lw", lw, "Cube side to synthesize for, mm");
  auto* o_slo = app.add_option("--s-lo", s_lo, "Lower transmission-factor bound");
  auto* o_shi = app.add_option("--s-hi", s_hi, "Upper transmission-factor bound");
  auto* o_leg = app.add_option("--leg-length", leg, "Explicit design: leg length, mm");
  auto* o_smin = app.add_option("--stroke-min", stroke_min, "Explicit design: lower slider limit, mm (one value or x,y,z)")
                     ->delimiter(',')->expected(1, 3)->allow_extra_args(false);
  auto* o_smax = app.add_option("--stroke-max", stroke_max, "Explicit design: upper slider limit, mm (one value or x,y,z)")
                     ->delimiter(',')->expected(1, 3)->allow_extra_args(false);
  auto* o_vmax = app.add_option("--vmax", vmax, "Motor speed limit, m/s (default 1.2)");
  auto* o_amax = app.add_option("--amax", amax, "Motor acceleration limit, m/s^2 (default 20)");
  auto* o_tser = app.add_option("--tol-serial", tol_serial, "Serial singularity threshold on eta/L");
  auto* o_tclo = app.add_option("--tol-closure", tol_closure, "Leg closure tolerance, relative to L");
  auto* o_tpar = app.add_option("--tol-parallel", tol_parallel, "Parallel singularity threshold on |det J^-1|");
  auto* o_tstr = app.add_option("--tol-stroke", tol_stroke, "Stroke limit slack, relative to L");
  auto* o_grid = app.add_option("--grid", grid, "Grid points per axis (default 21)");
  auto* o_n = app.add_option("--n", n, "Diagonal samples (default: --grid)");
  auto* o_pose = app.add_option("--pose", pose, "Tool pose x,y,z in mm (default origin)")
                     ->delimiter(',')->expected(3)->allow_extra_args(false);
  auto* o_rq1 = app.add_option("--region-q1", region_q1, "Cube corner x,y,z in mm (default: synthesized cube)")
                    ->delimiter(',')->expected(3)->allow_extra_args(false);
  auto* o_rside = app.add_option("--region-side", region_side, "Cube side, mm");
  auto* o_umin = app.add_option("--u-min", u_min, "Diagonal profile start, mm");
  auto* o_umax = app.add_option("--u-max", u_max, "Diagonal profile end, mm");
  auto* o_out = app.add_option("--out", out_path, "Output file");
  auto* o_wp = app.add_option("--waypoints", waypoints, "Waypoint CSV (t_s,x_mm,y_mm,z_mm)");
  app.add_option("--config", config, "JSON file whose keys mirror the flags");

  app.add_subcommand("synthesize", "Leg length and strokes for a cube, plus grid verification");
  app.add_subcommand("analyze", "Kinematics and transmission at one pose");
  app.add_subcommand("workspace-map", "Per-point reachability and transmission over a cube (CSV)");
  app.add_subcommand("diag-profile", "Transmission factors along x = y = z (CSV)");
  app.add_subcommand("traj-check", "Joint speed/acceleration along a waypoint path (CSV)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  RunConfig cfg;
  try {
  cfg.command = app.get_subcommands().front()->get_name();
  auto set = [](auto& slot, const auto& value, const CLI::Option* opt) {
    if (opt->count() > 0) slot = value;
  };
  set(cfg.lw, lw, o_lw);
  set(cfg.s_lo, s_lo, o_slo);
  set(cfg.s_hi, s_hi, o_shi);
  set(cfg.leg_length, leg, o_leg);
  cfg.stroke_min = triple_from(stroke_min, o_smin);
  cfg.stroke_max = triple_from(stroke_max, o_smax);
  set(cfg.vmax, 1000.0 * vmax, o_vmax);
  set(cfg.amax, 1000.0 * amax, o_amax);
  set(cfg.tol_serial, tol_serial, o_tser);
  set(cfg.tol_closure, tol_closure, o_tclo);
  set(cfg.tol_parallel, tol_parallel, o_tpar);
  set(cfg.tol_stroke, tol_stroke, o_tstr);
  set(cfg.grid, grid, o_grid);
  set(cfg.n, n, o_n);
  cfg.pose = triple_from(pose, o_pose);
  cfg.region_q1 = triple_from(region_q1, o_rq1);
  set(cfg.region_side, region_side, o_rside);
  set(cfg.u_min, u_min, o_umin);
  set(cfg.u_max, u_max, o_umax);
  set(cfg.out, out_path, o_out);
  set(cfg.waypoints, waypoints, o_wp);

    if (!config.empty()) apply_config_file(cfg, config);
    if (cfg.command == "synthesize") return cmd_synthesize(cfg, out);
    if (cfg.command == "analyze") return cmd_analyze(cfg, out);
    if (cfg.command == "workspace-map") return cmd_workspace_map(cfg, out);
    if (cfg.command == "diag-profile") return cmd_diag_profile(cfg, out);
    return cmd_traj_check(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace orthoglide::cli
