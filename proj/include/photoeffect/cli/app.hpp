#ifndef PHOTOEFFECT_CLI_APP_HPP
#define PHOTOEFFECT_CLI_APP_HPP

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "../einstein.hpp"
#include "../error.hpp"
#include "../farfield.hpp"
#include "../helmholtz.hpp"
#include "../hydrogen.hpp"
#include "../lap_timedomain.hpp"
#include "../photocurrent.hpp"
#include "../units.hpp"
#include "config.hpp"
#include "manifest.hpp"
#include "output.hpp"

// Exit codes: 0 success, 2 invalid input, 3 numerical failure.

namespace photoeffect::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_numerical = 3;

/// Environment variable that, when set, prefixes every relative output path.
inline constexpr const char* output_dir_variable = "PHOTOEFFECT_OUTPUT_DIR";

namespace detail
{

using units::Dimension;

struct Common
{
  std::string units = "atomic";
  std::string format = "json";
  std::string config;
  std::string output;
  std::string manifest;
};

inline void add_common(CLI::App* sub, Common& c)
{
  sub->add_option("--units", c.units, "Output units: atomic, or si to add _si companion fields")
      ->check(CLI::IsMember({"si", "atomic"}))
      ->capture_default_str();
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub->add_option("--config", c.config, "key = value file with numerical settings");
  sub->add_option("--output", c.output, "Write the table here instead of stdout");
  sub->add_option("--manifest", c.manifest, "Write a JSON run manifest here");
}

inline std::string resolve_path(const std::string& path)
{
  if (path.empty()) {
    return path;
  }
  const char* dir = std::getenv(output_dir_variable);
  const std::filesystem::path p(path);
  if (dir != nullptr && *dir != '\0' && p.is_relative()) {
    return (std::filesystem::path(dir) / p).string();
  }
  return path;
}

inline std::vector<double> parse_list(const std::string& text, char sep, std::string_view what)
{
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      out.push_back(cli::detail::parse_real(cli::detail::trim(item)));
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::invalid_argument, "malformed " + std::string(what) + " '" + text + "'");
    }
  }
  return out;
}

inline Vec3 parse_point(const std::string& text)
{
  const auto v = parse_list(text, ',', "point");
  if (v.size() != 3) {
    throw Error(ErrorCode::invalid_argument, "point must be x,y,z");
  }
  return {v[0], v[1], v[2]};
}

struct GridShape
{
  std::size_t n_theta = 9;
  std::size_t n_phi = 8;
};

inline GridShape parse_grid(const std::string& text)
{
  const auto x = text.find('x');
  GridShape g;
  try {
    if (x == std::string::npos) {
      throw std::invalid_argument("missing x");
    }
    g.n_theta = cli::detail::parse_count(text.substr(0, x));
    g.n_phi = cli::detail::parse_count(text.substr(x + 1));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::invalid_argument, "grid must look like <n_theta>x<n_phi>, got '" + text + "'");
  }
  if (g.n_theta < 2 || g.n_phi < 1) {
    throw Error(ErrorCode::invalid_argument, "grid needs n_theta >= 2 and n_phi >= 1");
  }
  return g;
}

/// theta_i = pi i / (n_theta - 1), phi_j = 2 pi j / n_phi.
inline std::vector<farfield::SphericalDirection> grid_directions(const GridShape& g)
{
  std::vector<farfield::SphericalDirection> dirs;
  for (std::size_t i = 0; i < g.n_theta; ++i) {
    for (std::size_t j = 0; j < g.n_phi; ++j) {
      dirs.push_back({std::numbers::pi * double(i) / double(g.n_theta - 1),
                      2.0 * std::numbers::pi * double(j) / double(g.n_phi)});
    }
  }
  return dirs;
}

struct Scan
{
  double first = 0.0;
  double last = 0.0;
  std::size_t count = 0;
};

inline Scan parse_scan(const std::string& text)
{
  const auto v = parse_list(text, ':', "scan");
  if (v.size() != 3 || !(v[2] >= 1.0) || v[2] != std::floor(v[2])) {
    throw Error(ErrorCode::invalid_argument, "scan must be a:b:n with integer n >= 1");
  }
  return {v[0], v[1], static_cast<std::size_t>(v[2])};
}

inline double voltage_to_atomic(double volts)
{
  return units::to_atomic({volts, Dimension::voltage});
}

// ---------------------------------------------------------------------------
// Subcommand bodies.  Each returns the table to print.

inline OutputTable run_hydrogen()
{
  const auto g = hydrogen::HydrogenGroundState::from_constants();
  const auto rb = hydrogen::red_bound(g);
  OutputTable t;
  t.record = true;
  t.add_column("C1");
  t.add_column("r1", Dimension::length);
  t.add_column("omega1", Dimension::frequency);
  t.add_column("E1", Dimension::energy);
  t.add_column("omega_red", Dimension::frequency);
  t.add_column("k1", Dimension::wavenumber);
  t.add_column("lambda_red", Dimension::length);
  t.add_column("lambda_red_angstrom");
  t.add_row({g.C1, g.r1, g.omega1, g.E1, rb.omega_red, rb.k1, rb.lambda_red, rb.lambda_red_angstrom});
  return t;
}

struct AmplitudeArgs
{
  double omega = 1.0;
  std::string point;
  std::string branch = "plus";
  std::optional<double> epsilon;
};

inline OutputTable run_amplitude(const AmplitudeArgs& a, const Settings& s)
{
  const auto branch = a.branch == "plus" ? helmholtz::Branch::plus : helmholtz::Branch::minus;
  const auto p = helmholtz::DrivenProblem::from_omega(a.omega, branch);
  const Vec3 x = parse_point(a.point);
  helmholtz::AmplitudeEstimate w;
  double wavenumber = 0.0;
  if (branch == helmholtz::Branch::plus) {
    wavenumber = helmholtz::k_r(p);
    w = a.epsilon ? helmholtz::limiting_absorption_w_plus(x, p, s.quadrature, *a.epsilon)
                  : helmholtz::w_plus(x, p, s.quadrature);
  } else {
    if (a.epsilon) {
      throw Error(ErrorCode::invalid_argument, "--epsilon applies to the plus branch only");
    }
    wavenumber = helmholtz::kappa_minus(p);
    w = helmholtz::w_minus(x, p, s.quadrature);
  }
  OutputTable t;
  t.record = true;
  t.add_column("branch");
  t.add_column("omega", Dimension::frequency);
  t.add_column(branch == helmholtz::Branch::plus ? "k_r" : "kappa_minus", Dimension::wavenumber);
  t.add_column("epsilon");
  t.add_column("x1", Dimension::length);
  t.add_column("x2", Dimension::length);
  t.add_column("x3", Dimension::length);
  t.add_column("w");
  t.add_column("abs_error");
  t.add_column("rel_error");
  t.add_column("nodes");
  t.add_column("level");
  t.add_row({a.branch, a.omega, wavenumber, a.epsilon ? Cell(*a.epsilon) : Cell(Null{}), x[0], x[1], x[2], w.value,
             w.abs_error, w.rel_error, static_cast<std::int64_t>(w.nodes), static_cast<std::int64_t>(w.level)});
  return t;
}

struct AngularArgs
{
  double omega = 1.0;
  std::string grid = "9x8";
  std::string extract;
};

inline OutputTable run_angular(const AngularArgs& a, const Settings& s)
{
  const auto p = helmholtz::DrivenProblem::from_omega(a.omega);
  const auto pattern = farfield::FarFieldPattern::from_problem(p);
  const auto dirs = grid_directions(parse_grid(a.grid));
  std::vector<double> radii;
  if (!a.extract.empty()) {
    radii = parse_list(a.extract, ',', "radius list");
  }
  OutputTable t;
  t.add_column("theta");
  t.add_column("phi");
  t.add_column("a");
  t.add_column("abs_a2");
  t.add_column("phase");
  if (!radii.empty()) {
    t.add_column("a_numeric");
    t.add_column("spread");
  }
  for (const auto& d : dirs) {
    const auto val = farfield::angular_amplitude(d, pattern);
    std::vector<Cell> row{d.theta, d.phi, val, std::norm(val), std::arg(val)};
    if (!radii.empty()) {
      const auto ex = farfield::extract_amplitude_numeric(d, radii, p, s.quadrature);
      row.emplace_back(ex.value);
      row.emplace_back(ex.spread);
    }
    t.add_row(std::move(row));
  }
  return t;
}

struct CurrentArgs
{
  std::string law = "wentzel";
  std::optional<double> beta;
  double omega = 1.0;
  double amplitude = 1.0;
  std::string grid = "9x8";
};

inline OutputTable run_angular_current(const CurrentArgs& a)
{
  const auto p = helmholtz::DrivenProblem::from_omega(a.omega);
  const auto pattern = farfield::FarFieldPattern::from_problem(p);
  const photocurrent::CurrentModel model{photocurrent::parse_law(a.law),
                                         a.beta ? *a.beta : photocurrent::beta_from_omega(a.omega)};
  model.validate();
  OutputTable t;
  t.add_column("theta");
  t.add_column("phi");
  t.add_column("beta");
  t.add_column("factor");
  t.add_column("r2_j_radial");
  for (const auto& d : grid_directions(parse_grid(a.grid))) {
    const Vec3 n = farfield::unit_vector(d);
    const double jr = dot(photocurrent::far_current(n, a.amplitude, pattern, model), n);
    t.add_row({d.theta, d.phi, model.beta, photocurrent::angular_factor(model, d), jr});
  }
  return t;
}

struct FluxArgs
{
  std::string scan;
  std::string law = "wentzel";
  std::optional<double> beta;
  double amplitude = 1.0;
  double radius = 100.0;
  std::size_t nodes = 32;
};

inline OutputTable run_flux(const FluxArgs& a)
{
  const auto scan = parse_scan(a.scan);
  const auto law = photocurrent::parse_law(a.law);
  OutputTable t;
  t.add_column("omega", Dimension::frequency);
  t.add_column("k_r", Dimension::wavenumber);
  t.add_column("C_abs");
  t.add_column("beta");
  t.add_column("J_infinity");
  t.add_column("J_abs");
  t.add_column("quadrature_error");
  for (std::size_t i = 0; i < scan.count; ++i) {
    const double omega =
        scan.count == 1 ? scan.first : scan.first + (scan.last - scan.first) * double(i) / double(scan.count - 1);
    const auto p = helmholtz::DrivenProblem::from_omega(omega);
    const auto pattern = farfield::FarFieldPattern::from_problem(p);
    const photocurrent::CurrentModel model{law, a.beta ? *a.beta : photocurrent::beta_from_omega(omega)};
    const auto rep = photocurrent::total_flux(model, a.amplitude, pattern, a.radius, a.nodes);
    t.add_row({omega, pattern.k_r, std::abs(pattern.C), model.beta, rep.J_infinity, rep.J_abs, rep.quadrature_error});
  }
  return t;
}

struct EinsteinArgs
{
  std::optional<double> omega;
  std::optional<double> wavelength;
  double ustop_volts = 0.0;
};

inline OutputTable run_einstein(const EinsteinArgs& a)
{
  if (a.omega.has_value() == a.wavelength.has_value()) {
    throw Error(ErrorCode::invalid_argument, "give exactly one of --omega and --wavelength");
  }
  const double omega = a.omega ? *a.omega : units::omega_from_wavelength(*a.wavelength);
  if (!(a.ustop_volts >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "--ustop must be non-negative");
  }
  const auto g = hydrogen::HydrogenGroundState::from_constants();
  const auto rep = einstein::einstein_report(omega, voltage_to_atomic(a.ustop_volts), g);
  OutputTable t;
  t.record = true;
  t.add_column("omega", Dimension::frequency);
  t.add_column("omega_red", Dimension::frequency);
  t.add_column("W", Dimension::energy);
  t.add_column("E_max", Dimension::energy);
  t.add_column("U_stop_min", Dimension::voltage);
  t.add_column("U_stop", Dimension::voltage);
  t.add_column("allowed");
  t.add_column("reason");
  t.add_row({rep.omega, rep.omega_red, rep.W, rep.E_max ? Cell(*rep.E_max) : Cell(Null{}), rep.U_stop_min,
             rep.U_stop, rep.allowed, rep.reason});
  return t;
}

struct MinimaxArgs
{
  double ustop_volts = 0.0;
  std::optional<double> plateau;
  std::optional<double> decay_width;
};

inline OutputTable run_minimax(const MinimaxArgs& a, const Settings& s)
{
  einstein::StoppingPotentialProblem prob;
  prob.U_stop = voltage_to_atomic(a.ustop_volts);
  const auto g = hydrogen::HydrogenGroundState::from_constants();
  prob.plateau_radius = (a.plateau ? *a.plateau : s.plateau_radius) * g.r1;
  prob.decay_width = a.decay_width ? *a.decay_width : s.decay_width;
  prob.grid = s.radial;
  const auto rep = einstein::minimax_report(prob);
  OutputTable t;
  t.record = true;
  t.add_column("U_stop", Dimension::voltage);
  t.add_column("plateau_radius", Dimension::length);
  t.add_column("unperturbed", Dimension::energy);
  t.add_column("shifted", Dimension::energy);
  t.add_column("shift", Dimension::energy);
  t.add_column("expected_shift", Dimension::energy);
  t.add_column("lower_bound", Dimension::energy);
  t.add_column("relative_deviation");
  t.add_column("lower_bound_holds");
  t.add_column("grid_tolerance", Dimension::energy);
  t.add_row({rep.U_stop, prob.plateau_radius, rep.unperturbed, rep.shifted, rep.shift, rep.expected_shift,
             rep.lower_bound, rep.relative_deviation, rep.lower_bound_holds, rep.grid_tolerance});
  return t;
}

struct LapArgs
{
  double omega = 1.0;
  double t_final = 200.0;
  bool no_absorber = false;
  bool timing = false;
  std::string profile;
};

inline OutputTable run_verify_lap(const LapArgs& a, const Settings& s, std::vector<std::string>& written)
{
  lap::DrivenField1D prob;
  prob.Omega = a.omega;
  prob.grid = {-s.lap.half_width, s.lap.half_width, s.lap.n_points};
  prob.dt = s.lap.dt;
  prob.absorber.enabled = !a.no_absorber;
  prob.absorber.sigma0 = s.lap.sigma0;
  prob.snapshot_stride = s.lap.snapshot_stride;
  if (a.omega == 0.0) {
    throw Error(ErrorCode::threshold_frequency, "Omega = 0 is the threshold of the continuous spectrum");
  }
  const double window = s.lap.window_periods * 2.0 * std::numbers::pi / std::abs(a.omega);
  if (!(a.t_final > window)) {
    throw Error(ErrorCode::window_too_short, "--t-final must exceed the fit window of " +
                                                 std::to_string(s.lap.window_periods) + " periods");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto run = lap::verify_lap(prob, a.t_final, window);
  const double runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (!a.profile.empty()) {
    OutputTable prof;
    prof.add_column("x");
    prof.add_column("extracted");
    prof.add_column("stationary");
    for (std::size_t i = 0; i < prob.grid.n_points; ++i) {
      prof.add_row({prob.grid.x(i), run.extracted.values[i], run.stationary.values[i]});
    }
    const auto path = resolve_path(a.profile);
    std::ofstream os(path);
    if (!os) {
      throw Error(ErrorCode::invalid_argument, "cannot write profile to '" + path + "'");
    }
    write_csv(os, prof);
    written.push_back(path);
  }

  OutputTable t;
  t.record = true;
  t.add_column("Omega", Dimension::frequency);
  t.add_column("kappa", Dimension::wavenumber);
  t.add_column("regime");
  t.add_column("t_final", Dimension::time);
  t.add_column("window", Dimension::time);
  t.add_column("absorber");
  t.add_column("discrepancy");
  t.add_column("residual");
  std::vector<Cell> row{a.omega,   run.stationary.kappa, std::string(lap::to_string(run.stationary.regime)),
                        a.t_final, window,               !a.no_absorber,
                        run.discrepancy, run.residual};
  if (a.timing) {
    t.add_column("runtime_s");
    row.emplace_back(runtime);
  }
  t.add_row(std::move(row));
  return t;
}

inline std::string read_file(const std::string& path)
{
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace detail

/// Runs one CLI invocation; argv[0] is the program name.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
  using namespace detail;
  CLI::App app{"First-order photoelectric effect for hydrogen", "photoeffect"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version));

  std::map<std::string, Common> common;
  auto make = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, common[name]);
    return sub;
  };

  auto* hydrogen_cmd = make("hydrogen", "Ground state constants and the red bound");

  AmplitudeArgs amp;
  auto* amplitude_cmd = make("amplitude", "Limiting amplitude w+ or w- at one point");
  amplitude_cmd->add_option("--omega", amp.omega, "Incident frequency (a.u.)")->required();
  amplitude_cmd->add_option("--point", amp.point, "Field point x,y,z (bohr)")->required();
  amplitude_cmd->add_option("--branch", amp.branch, "plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  amplitude_cmd->add_option("--epsilon", amp.epsilon, "Limiting-absorption damping for the plus branch");

  AngularArgs ang;
  auto* angular_cmd = make("angular", "Far-field amplitude C sin(theta) cos(phi) on a grid");
  angular_cmd->add_option("--omega", ang.omega, "Incident frequency (a.u.)")->capture_default_str();
  angular_cmd->add_option("--grid", ang.grid, "<n_theta>x<n_phi>")->capture_default_str();
  angular_cmd->add_option("--extract", ang.extract, "Comma-separated radii for a quadrature fit of a(n)");

  CurrentArgs cur;
  auto* current_cmd = make("angular-current", "Angular law of the current at infinity");
  current_cmd->add_option("--law", cur.law, "wentzel, ss or fs")
      ->check(CLI::IsMember({"wentzel", "ss", "fs"}))
      ->capture_default_str();
  current_cmd->add_option("--beta", cur.beta, "v/c; defaults to hbar k_r / (m c)");
  current_cmd->add_option("--omega", cur.omega, "Incident frequency (a.u.)")->capture_default_str();
  current_cmd->add_option("--amplitude", cur.amplitude, "Incident amplitude A")->capture_default_str();
  current_cmd->add_option("--grid", cur.grid, "<n_theta>x<n_phi>")->capture_default_str();

  FluxArgs flx;
  auto* flux_cmd = make("flux", "Total current to infinity over a frequency scan");
  flux_cmd->add_option("--omega-scan", flx.scan, "first:last:count (a.u.)")->required();
  flux_cmd->add_option("--law", flx.law, "wentzel, ss or fs")
      ->check(CLI::IsMember({"wentzel", "ss", "fs"}))
      ->capture_default_str();
  flux_cmd->add_option("--beta", flx.beta, "v/c; defaults to hbar k_r / (m c) per frequency");
  flux_cmd->add_option("--amplitude", flx.amplitude, "Incident amplitude A")->capture_default_str();
  flux_cmd->add_option("--radius", flx.radius, "Sphere radius (bohr)")->capture_default_str();
  flux_cmd->add_option("--nodes", flx.nodes, "Polar Gauss nodes")->capture_default_str();

  EinsteinArgs ein;
  auto* einstein_cmd = make("einstein", "Red bound, maximal energy and stopping voltage");
  auto* omega_opt = einstein_cmd->add_option("--omega", ein.omega, "Incident frequency (a.u.)");
  auto* wl_opt = einstein_cmd->add_option("--wavelength", ein.wavelength, "Vacuum wavelength (angstrom)");
  omega_opt->excludes(wl_opt);
  einstein_cmd->add_option("--ustop", ein.ustop_volts, "Stopping voltage (V)")->capture_default_str();

  MinimaxArgs mm;
  auto* minimax_cmd = make("minimax", "Ground level shift under a stopping potential");
  minimax_cmd->add_option("--ustop", mm.ustop_volts, "Stopping voltage (V)")->required();
  minimax_cmd->add_option("--plateau", mm.plateau, "Plateau radius in units of r1");
  minimax_cmd->add_option("--decay-width", mm.decay_width, "Taper width (bohr)");

  LapArgs la;
  auto* lap_cmd = make("verify-lap", "1D time-domain check of the limiting amplitude principle");
  lap_cmd->add_option("--omega", la.omega, "Driving frequency Omega (a.u.)")->required();
  lap_cmd->add_option("--t-final", la.t_final, "Final time (a.u.)")->required();
  lap_cmd->add_flag("--no-absorber", la.no_absorber, "Disable the absorbing layer");
  lap_cmd->add_flag("--timing", la.timing, "Add the wall-clock runtime (non-deterministic)");
  lap_cmd->add_option("--profile", la.profile, "Write the extracted and stationary profiles as CSV");

  std::vector<const char*> cargv;
  for (const auto& a : argv) {
    cargv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_invalid;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  const Common& c = common[name];
  RunManifest manifest;
  manifest.subcommand = name;
  manifest.timestamp = utc_timestamp();
  for (const auto* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") {
      continue;
    }
    std::string joined;
    for (const auto& r : opt->results()) {
      joined += (joined.empty() ? "" : " ") + r;
    }
    manifest.parameters.emplace_back(opt->get_name(), joined);
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    Settings settings;
    if (!c.config.empty()) {
      settings = load_config(c.config);
      manifest.config_text = read_file(c.config);
    }
    OutputTable table;
    std::vector<std::string> written;
    if (sub == hydrogen_cmd) {
      table = run_hydrogen();
    } else if (sub == amplitude_cmd) {
      table = run_amplitude(amp, settings);
    } else if (sub == angular_cmd) {
      table = run_angular(ang, settings);
    } else if (sub == current_cmd) {
      table = run_angular_current(cur);
    } else if (sub == flux_cmd) {
      table = run_flux(flx);
    } else if (sub == einstein_cmd) {
      table = run_einstein(ein);
    } else if (sub == minimax_cmd) {
      table = run_minimax(mm, settings);
    } else {
      table = run_verify_lap(la, settings, written);
    }
    if (c.units == "si") {
      table = table.with_si();
    }
    const Format format = c.format == "csv" ? Format::csv : Format::json;
    if (c.output.empty()) {
      write_table(out, table, format);
    } else {
      const auto path = resolve_path(c.output);
      std::ofstream os(path);
      if (!os) {
        throw Error(ErrorCode::invalid_argument, "cannot write output to '" + path + "'");
      }
      write_table(os, table, format);
      written.insert(written.begin(), path);
    }
    manifest.outputs = written;
    manifest.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!c.manifest.empty()) {
      const auto path = resolve_path(c.manifest);
      std::ofstream os(path);
      if (!os) {
        throw Error(ErrorCode::invalid_argument, "cannot write manifest to '" + path + "'");
      }
      os << manifest.to_json().dump(2) << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (is_numerical(e.code())) {
      err << "diagnostics: subcommand=" << name << " config_hash=" << manifest.config_hash() << '\n';
      return exit_numerical;
    }
    return exit_invalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_numerical;
  }
  return exit_ok;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

} // namespace photoeffect::cli

#endif
