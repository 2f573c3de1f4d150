#ifndef PHOTOEFFECT_EINSTEIN_HPP
#define PHOTOEFFECT_EINSTEIN_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "hydrogen.hpp"
#include "units.hpp"

// Photoelectric rules for hydrogen.  All energies are in Hartree and all
// voltages in atomic units of potential (27.211 V); the CLI converts.
//
// Threshold convention: emission requires the strict inequality
// hbar omega > hbar |omega1| + |e| U_stop; equality counts as forbidden.

namespace photoeffect::einstein
{

struct MaxEnergy
{
  bool allowed = false;
  /// hbar omega - W when non-negative; empty below the red bound.
  std::optional<double> energy;
};

/// Work function W = hbar |omega1|.
inline double work_function(const hydrogen::HydrogenGroundState& g,
                            const units::PhysicalConstants& pc = units::codata2018)
{
  return pc.hbar * std::abs(g.omega1);
}

inline MaxEnergy max_electron_energy(double omega, const hydrogen::HydrogenGroundState& g,
                                     const units::PhysicalConstants& pc = units::codata2018)
{
  if (!(omega > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "incident frequency must be positive");
  }
  const double excess = pc.hbar * omega - work_function(g, pc);
  MaxEnergy out;
  out.allowed = excess > 0.0;
  if (excess >= 0.0) {
    out.energy = excess;
  }
  return out;
}

/// U_stop_min = (hbar omega - W) / |e|, or 0 when already below the red bound.
inline double min_stopping_voltage(double omega, const hydrogen::HydrogenGroundState& g,
                                   const units::PhysicalConstants& pc = units::codata2018)
{
  const auto e = max_electron_energy(omega, g, pc);
  if (!e.allowed) {
    return 0.0;
  }
  return *e.energy / pc.elementary_charge_magnitude;
}

/// True iff hbar omega > hbar |omega1| + |e| U_stop.
inline bool photoeffect_allowed(double omega, double U_stop, const hydrogen::HydrogenGroundState& g,
                                const units::PhysicalConstants& pc = units::codata2018)
{
  if (!(U_stop >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "stopping voltage must be non-negative");
  }
  return pc.hbar * omega > work_function(g, pc) + pc.elementary_charge_magnitude * U_stop;
}

struct EinsteinReport
{
  double omega = 0.0;
  double omega_red = 0.0;
  double W = 0.0;
  std::optional<double> E_max;
  double U_stop_min = 0.0;
  double U_stop = 0.0;
  bool allowed = false;
  std::string reason;
};

inline EinsteinReport einstein_report(double omega, double U_stop, const hydrogen::HydrogenGroundState& g,
                                      const units::PhysicalConstants& pc = units::codata2018)
{
  EinsteinReport rep;
  rep.omega = omega;
  rep.omega_red = std::abs(g.omega1);
  rep.W = work_function(g, pc);
  const auto e = max_electron_energy(omega, g, pc);
  rep.E_max = e.energy;
  rep.U_stop_min = min_stopping_voltage(omega, g, pc);
  rep.U_stop = U_stop;
  rep.allowed = photoeffect_allowed(omega, U_stop, g, pc);
  if (!e.allowed) {
    rep.reason = "below red bound";
  } else if (!rep.allowed) {
    rep.reason = "stopping voltage";
  } else {
    rep.reason = "allowed";
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Stopping potential and the shifted ground level.

struct RadialGrid
{
  double r_max = 60.0;
  std::size_t n_points = 6000; // interior points; u(0) = u(r_max) = 0

  double spacing() const { return r_max / double(n_points + 1); }
  double r(std::size_t i) const { return double(i + 1) * spacing(); }

  void validate(const hydrogen::HydrogenGroundState& g) const
  {
    if (!(r_max >= 40.0 * g.r1)) {
      throw Error(ErrorCode::invalid_argument, "radial grid must reach at least 40 r1");
    }
    if (n_points < 2000) {
      throw Error(ErrorCode::invalid_argument, "radial grid needs at least 2000 points");
    }
  }
};

struct StoppingPotentialProblem
{
  double U_stop = 0.0;         // a.u. of potential, >= 0
  double plateau_radius = 20.0; // phi_stop = U_stop for r <= plateau_radius
  double decay_width = 10.0;    // cosine taper to zero over this width
  RadialGrid grid{};

  /// 0 <= phi_stop(r) <= U_stop: plateau, then a smooth cosine taper.
  double phi_stop(double r) const
  {
    if (r <= plateau_radius) {
      return U_stop;
    }
    if (r >= plateau_radius + decay_width) {
      return 0.0;
    }
    const double t = (r - plateau_radius) / decay_width;
    return U_stop * 0.5 * (1.0 + std::cos(std::numbers::pi * t));
  }

  void validate(const hydrogen::HydrogenGroundState& g) const
  {
    if (!(U_stop >= 0.0)) {
      throw Error(ErrorCode::invalid_argument, "stopping voltage must be non-negative");
    }
    if (!(plateau_radius > 0.0) || !(decay_width >= 0.0)) {
      throw Error(ErrorCode::invalid_argument, "plateau radius must be positive and decay width non-negative");
    }
    grid.validate(g);
  }
};

/// Symmetric tridiagonal matrix: diag[i], off[i] couples i and i+1.
struct Tridiagonal
{
  std::vector<double> diag;
  std::vector<double> off;
};

/// Discretized l = 0 operator  -(hbar^2/2m) u'' - e^2/r u + e phi_stop(r) u
/// on u(0) = u(r_max) = 0.
inline Tridiagonal radial_hamiltonian(const StoppingPotentialProblem& prob,
                                      const units::PhysicalConstants& pc = units::codata2018)
{
  const auto& grid = prob.grid;
  const double h = grid.spacing();
  const double kin = pc.hbar * pc.hbar / (2.0 * pc.electron_mass * h * h);
  const double e2 = pc.elementary_charge_magnitude * pc.elementary_charge_magnitude;
  Tridiagonal t;
  t.diag.resize(grid.n_points);
  t.off.assign(grid.n_points - 1, -kin);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double r = grid.r(i);
    t.diag[i] = 2.0 * kin - e2 / r + pc.electron_charge * prob.phi_stop(r);
  }
  return t;
}

/// Number of eigenvalues strictly below lambda (Sturm count).
inline std::size_t eigenvalues_below(const Tridiagonal& t, double lambda)
{
  std::size_t count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    const double off2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
    d = t.diag[i] - lambda - (i == 0 ? 0.0 : off2 / d);
    if (d == 0.0) {
      d = -1e-300;
    }
    if (d < 0.0) {
      ++count;
    }
  }
  return count;
}

/// index-th smallest eigenvalue (0-based) by Sturm bisection.
inline double kth_eigenvalue(const Tridiagonal& t, std::size_t index)
{
  if (index >= t.diag.size()) {
    throw Error(ErrorCode::invalid_argument, "eigenvalue index out of range");
  }
  double lo = t.diag[0];
  double hi = t.diag[0];
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    const double rad = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < t.diag.size() ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - rad);
    hi = std::max(hi, t.diag[i] + rad);
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo) + std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (eigenvalues_below(t, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Eigenvalue nearest `shift` by inverse iteration with Rayleigh-quotient
/// convergence monitoring.
inline double inverse_iteration(const Tridiagonal& t, double shift, int max_iter = 500)
{
  const std::size_t n = t.diag.size();
  // LU of (T - shift I), no pivoting; T - shift is diagonally dominant
  // enough below the spectrum and well away from eigenvalues otherwise.
  std::vector<double> l(n, 0.0);
  std::vector<double> u(n, 0.0);
  u[0] = t.diag[0] - shift;
  for (std::size_t i = 1; i < n; ++i) {
    l[i] = t.off[i - 1] / u[i - 1];
    u[i] = t.diag[i] - shift - l[i] * t.off[i - 1];
  }
  std::vector<double> v(n, 1.0 / std::sqrt(double(n)));
  std::vector<double> y(n);
  double lambda = shift;
  for (int it = 0; it < max_iter; ++it) {
    y[0] = v[0];
    for (std::size_t i = 1; i < n; ++i) {
      y[i] = v[i] - l[i] * y[i - 1];
    }
    y[n - 1] /= u[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
      y[i] = (y[i] - t.off[i] * y[i + 1]) / u[i];
    }
    double nrm = 0.0;
    for (double a : y) {
      nrm += a * a;
    }
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = y[i] / nrm;
    }
    double rq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double tv = t.diag[i] * v[i];
      if (i > 0) {
        tv += t.off[i - 1] * v[i - 1];
      }
      if (i + 1 < n) {
        tv += t.off[i] * v[i + 1];
      }
      rq += v[i] * tv;
    }
    if (std::abs(rq - lambda) <= 1e-13 * std::max(1.0, std::abs(rq))) {
      return rq;
    }
    lambda = rq;
  }
  throw Error(ErrorCode::eigensolver_nonconvergence, "inverse iteration did not converge");
}

/// Shift for inverse iteration: -0.6 Hartree, lowered with the plateau so it
/// stays below the shifted ground level.
inline double ground_shift(const StoppingPotentialProblem& prob, const hydrogen::HydrogenGroundState& g,
                           const units::PhysicalConstants& pc = units::codata2018)
{
  return std::min(-0.6, g.E1 + pc.electron_charge * prob.U_stop - 0.1);
}

/// Lowest eigenvalue of the radial operator with the stopping potential.
inline double shifted_ground_energy(const StoppingPotentialProblem& prob,
                                    const units::PhysicalConstants& pc = units::codata2018)
{
  const auto g = hydrogen::HydrogenGroundState::from_constants(pc);
  prob.validate(g);
  StoppingPotentialProblem bare = prob;
  bare.U_stop = 0.0;
  const double unperturbed = inverse_iteration(radial_hamiltonian(bare, pc), -0.6);
  if (std::abs(unperturbed - g.E1) > 1e-3) {
    throw Error(ErrorCode::grid_too_coarse, "unperturbed ground level off by more than 1e-3 Hartree");
  }
  return inverse_iteration(radial_hamiltonian(prob, pc), ground_shift(prob, g, pc));
}

struct MinimaxReport
{
  double U_stop = 0.0;
  double unperturbed = 0.0;     // grid ground level, U_stop = 0
  double shifted = 0.0;         // grid ground level with the stopping potential
  double shift = 0.0;           // shifted - unperturbed
  double expected_shift = 0.0;  // e U_stop
  double lower_bound = 0.0;     // hbar omega1 + e U_stop
  double relative_deviation = 0.0; // |shift - e U| / |e U|
  bool lower_bound_holds = false;  // within grid tolerance
  double grid_tolerance = 1e-3;
};

inline MinimaxReport minimax_report(const StoppingPotentialProblem& prob,
                                    const units::PhysicalConstants& pc = units::codata2018)
{
  const auto g = hydrogen::HydrogenGroundState::from_constants(pc);
  prob.validate(g);
  StoppingPotentialProblem bare = prob;
  bare.U_stop = 0.0;
  MinimaxReport rep;
  rep.U_stop = prob.U_stop;
  rep.unperturbed = inverse_iteration(radial_hamiltonian(bare, pc), -0.6);
  if (std::abs(rep.unperturbed - g.E1) > rep.grid_tolerance) {
    throw Error(ErrorCode::grid_too_coarse, "unperturbed ground level off by more than 1e-3 Hartree");
  }
  rep.shifted = inverse_iteration(radial_hamiltonian(prob, pc), ground_shift(prob, g, pc));
  rep.shift = rep.shifted - rep.unperturbed;
  rep.expected_shift = pc.electron_charge * prob.U_stop;
  rep.lower_bound = g.E1 + rep.expected_shift;
  rep.relative_deviation =
      prob.U_stop > 0.0 ? std::abs(rep.shift - rep.expected_shift) / std::abs(rep.expected_shift) : 0.0;
  rep.lower_bound_holds = rep.shifted >= rep.lower_bound - rep.grid_tolerance;
  return rep;
}

} // namespace photoeffect::einstein

#endif
