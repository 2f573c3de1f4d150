#ifndef PHOTOEFFECT_CLI_CONFIG_HPP
#define PHOTOEFFECT_CLI_CONFIG_HPP

#include <charconv>
#include <cstddef>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "../einstein.hpp"
#include "../error.hpp"
#include "../helmholtz.hpp"
#include "../lap_timedomain.hpp"

namespace photoeffect::cli
{

struct LapSettings
{
  double half_width = 40.0;
  std::size_t n_points = 4001;
  double dt = 0.01;
  double sigma0 = 3.0;
  double window_periods = 20.0;
  std::size_t snapshot_stride = 25;
};

/// Numerical knobs shared by the subcommands.
struct Settings
{
  helmholtz::QuadratureSpec quadrature{};
  einstein::RadialGrid radial{};
  double plateau_radius = 20.0;
  double decay_width = 10.0;
  LapSettings lap{};
};

namespace detail
{

inline std::string_view trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_real(std::string_view v)
{
  double out = 0.0;
  const auto* end = v.data() + v.size();
  const auto res = std::from_chars(v.data(), end, out);
  if (res.ec != std::errc() || res.ptr != end) {
    throw std::invalid_argument("not a number");
  }
  return out;
}

inline std::size_t parse_count(std::string_view v)
{
  std::size_t out = 0;
  const auto* end = v.data() + v.size();
  const auto res = std::from_chars(v.data(), end, out);
  if (res.ec != std::errc() || res.ptr != end) {
    throw std::invalid_argument("not a non-negative integer");
  }
  return out;
}

using Setter = std::function<void(Settings&, std::string_view)>;

inline const std::map<std::string, Setter, std::less<>>& setters()
{
  static const std::map<std::string, Setter, std::less<>> table = {
      {"quadrature.radial_cutoff", [](Settings& s, std::string_view v) { s.quadrature.radial_cutoff = parse_real(v); }},
      {"quadrature.node_budget", [](Settings& s, std::string_view v) { s.quadrature.node_budget = parse_count(v); }},
      {"quadrature.singular_shell_radius",
       [](Settings& s, std::string_view v) { s.quadrature.singular_shell_radius = parse_real(v); }},
      {"quadrature.target_rel_error",
       [](Settings& s, std::string_view v) { s.quadrature.target_rel_error = parse_real(v); }},
      {"radial.r_max", [](Settings& s, std::string_view v) { s.radial.r_max = parse_real(v); }},
      {"radial.n_points", [](Settings& s, std::string_view v) { s.radial.n_points = parse_count(v); }},
      {"minimax.plateau_radius", [](Settings& s, std::string_view v) { s.plateau_radius = parse_real(v); }},
      {"minimax.decay_width", [](Settings& s, std::string_view v) { s.decay_width = parse_real(v); }},
      {"lap.half_width", [](Settings& s, std::string_view v) { s.lap.half_width = parse_real(v); }},
      {"lap.n_points", [](Settings& s, std::string_view v) { s.lap.n_points = parse_count(v); }},
      {"lap.dt", [](Settings& s, std::string_view v) { s.lap.dt = parse_real(v); }},
      {"lap.sigma0", [](Settings& s, std::string_view v) { s.lap.sigma0 = parse_real(v); }},
      {"lap.window_periods", [](Settings& s, std::string_view v) { s.lap.window_periods = parse_real(v); }},
      {"lap.snapshot_stride", [](Settings& s, std::string_view v) { s.lap.snapshot_stride = parse_count(v); }},
  };
  return table;
}

} // namespace detail

/// Applies `key = value` lines to `settings`.  Blank lines and lines
/// starting with '#' are skipped; unknown keys and bad values are errors
/// naming `origin` and the line number.
inline void apply_config(std::istream& in, Settings& settings, std::string_view origin = "config")
{
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = detail::trim(line);
    if (body.empty() || body.front() == '#') {
      continue;
    }
    const auto where = std::string(origin) + ":" + std::to_string(lineno) + ": ";
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::invalid_argument, where + "expected 'key = value'");
    }
    const auto key = detail::trim(body.substr(0, eq));
    const auto value = detail::trim(body.substr(eq + 1));
    const auto& table = detail::setters();
    const auto it = table.find(key);
    if (it == table.end()) {
      throw Error(ErrorCode::invalid_argument, where + "unknown key '" + std::string(key) + "'");
    }
    if (value.empty()) {
      throw Error(ErrorCode::invalid_argument, where + "missing value for '" + std::string(key) + "'");
    }
    try {
      it->second(settings, value);
    } catch (const std::invalid_argument& e) {
      throw Error(ErrorCode::invalid_argument, where + "bad value for '" + std::string(key) + "': " + e.what());
    }
  }
}

inline Settings load_config(const std::string& path, Settings settings = {})
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::invalid_argument, "cannot open config file '" + path + "'");
  }
  apply_config(in, settings, path);
  return settings;
}

} // namespace photoeffect::cli

#endif
