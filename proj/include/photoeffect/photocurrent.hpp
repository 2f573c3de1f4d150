#ifndef PHOTOEFFECT_PHOTOCURRENT_HPP
#define PHOTOEFFECT_PHOTOCURRENT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <string_view>

#include "error.hpp"
#include "farfield.hpp"
#include "helmholtz.hpp"
#include "quadrature.hpp"
#include "units.hpp"
#include "vec3.hpp"

namespace photoeffect::photocurrent
{

using helmholtz::Complex;
using farfield::SphericalDirection;

enum class CurrentLaw
{
  wentzel,
  sommerfeld_schur,
  fisher_sauter,
};

constexpr std::string_view to_string(CurrentLaw law)
{
  switch (law) {
    case CurrentLaw::wentzel: return "wentzel";
    case CurrentLaw::sommerfeld_schur: return "ss";
    case CurrentLaw::fisher_sauter: return "fs";
  }
  return "unknown";
}

inline CurrentLaw parse_law(std::string_view name)
{
  if (name == "wentzel") {
    return CurrentLaw::wentzel;
  }
  if (name == "ss" || name == "sommerfeld-schur") {
    return CurrentLaw::sommerfeld_schur;
  }
  if (name == "fs" || name == "fisher-sauter") {
    return CurrentLaw::fisher_sauter;
  }
  throw Error(ErrorCode::invalid_argument, "unknown current law '" + std::string(name) + "'");
}

struct CurrentModel
{
  CurrentLaw law = CurrentLaw::wentzel;
  double beta = 0.0; // v / c, ignored by the Wentzel law

  void validate() const
  {
    if (!(beta >= 0.0 && beta < 1.0)) {
      throw Error(ErrorCode::invalid_argument, "beta must lie in [0, 1)");
    }
  }
};

/// j = -(e/m) Re( i hbar grad(psi) conj(psi) ) = (e hbar / m) Im( grad(psi) conj(psi) ).
inline Vec3 probability_current(Complex psi, const std::array<Complex, 3>& grad,
                                const units::PhysicalConstants& pc = units::codata2018)
{
  const double pref = pc.electron_charge * pc.hbar / pc.electron_mass;
  const Complex conj_psi = std::conj(psi);
  return {pref * (grad[0] * conj_psi).imag(), pref * (grad[1] * conj_psi).imag(),
          pref * (grad[2] * conj_psi).imag()};
}

/// Leading current at infinity  j ~ A^2 (e hbar k_r / m) |a(n)|^2 / |x|^2 n.
inline Vec3 wentzel_current(const Vec3& x, double A, const farfield::FarFieldPattern& pattern,
                            const units::PhysicalConstants& pc = units::codata2018)
{
  const double r = norm(x);
  if (!(r > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "current at infinity needs |x| > 0");
  }
  const double a2 = std::norm(farfield::angular_amplitude(farfield::direction_of(x), pattern));
  const double mag = A * A * pc.electron_charge * pc.hbar * pattern.k_r / pc.electron_mass * a2 / (r * r);
  return (mag / r) * x;
}

/// Dimensionless angular density sin^2(theta) cos^2(phi) times the law's
/// beta correction; all laws coincide at beta = 0.
inline double angular_factor(const CurrentModel& model, const SphericalDirection& dir)
{
  model.validate();
  const double st = std::sin(dir.theta);
  const double cp = std::cos(dir.phi);
  const double base = st * st * cp * cp;
  const double ct = std::cos(dir.theta);
  switch (model.law) {
    case CurrentLaw::wentzel: return base;
    case CurrentLaw::sommerfeld_schur: return base * (1.0 + 4.0 * model.beta * ct);
    case CurrentLaw::fisher_sauter: {
      const double d = 1.0 - model.beta * ct;
      return base / (d * d * d * d);
    }
  }
  return base;
}

/// beta = v / c with the de Broglie velocity v = hbar k_r / m of the outgoing wave.
inline double beta_from_omega(double omega, const units::PhysicalConstants& pc = units::codata2018)
{
  const auto p = helmholtz::DrivenProblem::from_omega(omega, helmholtz::Branch::plus, pc);
  return pc.hbar * helmholtz::k_r(p) / pc.electron_mass / pc.light_speed;
}

struct FluxReport
{
  double J_infinity = 0.0; // signed; negative because e < 0
  double J_abs = 0.0;
  double radius_used = 0.0;
  double quadrature_error = 0.0; // relative
  std::string sign_convention = "electric current, e < 0: outward electron flow gives J < 0";
};

namespace detail
{

// Product rule on the unit sphere: Gauss in cos(theta) (pole e1) times
// trapezoid in phi.  g(dir) is integrated against dOmega.
template <class G>
double sphere_integral(G&& g, std::size_t n_theta)
{
  const auto u = quadrature::gauss_legendre<double>(n_theta);
  const auto ph = quadrature::periodic_trapezoid<double>(2 * n_theta);
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const SphericalDirection base{std::acos(u.nodes[i]), 0.0};
    double ring = 0.0;
    for (std::size_t j = 0; j < ph.size(); ++j) {
      ring += ph.weights[j] * g(SphericalDirection{base.theta, ph.nodes[j]});
    }
    sum += u.weights[i] * ring;
  }
  return sum;
}

} // namespace detail

/// Current at infinity for the selected angular law, with the Wentzel
/// prefactor A^2 (e hbar k_r / m) |C|^2 / |x|^2 along n.
inline Vec3 far_current(const Vec3& x, double A, const farfield::FarFieldPattern& pattern, const CurrentModel& model,
                        const units::PhysicalConstants& pc = units::codata2018)
{
  const double r = norm(x);
  if (!(r > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "current at infinity needs |x| > 0");
  }
  const double pref = A * A * pc.electron_charge * pc.hbar * pattern.k_r / pc.electron_mass * std::norm(pattern.C);
  const double mag = pref * angular_factor(model, farfield::direction_of(x)) / (r * r);
  return (mag / r) * x;
}

/// Total current through the sphere |x| = radius.
inline FluxReport total_flux(const CurrentModel& model, double A, const farfield::FarFieldPattern& pattern,
                             double radius, std::size_t nodes,
                             const units::PhysicalConstants& pc = units::codata2018)
{
  model.validate();
  if (!(radius > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "flux radius must be positive");
  }
  if (nodes < 2) {
    throw Error(ErrorCode::invalid_argument, "flux quadrature needs at least two polar nodes");
  }
  auto integrand = [&](const SphericalDirection& dir) {
    const Vec3 n = farfield::unit_vector(dir);
    return dot(far_current(radius * n, A, pattern, model, pc), n) * radius * radius;
  };
  const double fine = detail::sphere_integral(integrand, nodes);
  const double coarse = detail::sphere_integral(integrand, std::max<std::size_t>(2, nodes / 2));
  FluxReport rep;
  rep.J_infinity = fine;
  rep.J_abs = std::abs(fine);
  rep.radius_used = radius;
  rep.quadrature_error = std::max(std::abs(fine - coarse) / std::max(std::abs(fine), 1e-300),
                                  4.0 * std::numeric_limits<double>::epsilon());
  if (rep.quadrature_error > 1e-3) {
    throw Error(ErrorCode::quadrature_nonconvergence, "flux quadrature did not converge; raise the node count");
  }
  return rep;
}

/// Flux of the current built from the quadrature amplitude A w_+ through the
/// sphere |x| = radius.  The radial derivative is a central difference with
/// step h.
inline FluxReport numerical_flux(const helmholtz::DrivenProblem& p, const helmholtz::QuadratureSpec& spec, double A,
                                 double radius, std::size_t nodes, double h = 1e-3)
{
  if (!(radius > h && h > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "need radius > h > 0");
  }
  const auto& pc = p.constants;
  auto integrand = [&](const SphericalDirection& dir) {
    const Vec3 n = farfield::unit_vector(dir);
    const Complex wm = helmholtz::w_plus((radius - h) * n, p, spec).value;
    const Complex w0 = helmholtz::w_plus(radius * n, p, spec).value;
    const Complex wp = helmholtz::w_plus((radius + h) * n, p, spec).value;
    const Complex dr = (wp - wm) / (2.0 * h);
    const double jn = A * A * pc.electron_charge * pc.hbar / pc.electron_mass * (dr * std::conj(w0)).imag();
    return jn * radius * radius;
  };
  FluxReport rep;
  rep.J_infinity = detail::sphere_integral(integrand, nodes);
  rep.J_abs = std::abs(rep.J_infinity);
  rep.radius_used = radius;
  rep.quadrature_error = spec.target_rel_error;
  return rep;
}

} // namespace photoeffect::photocurrent

#endif
