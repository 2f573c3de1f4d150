#ifndef PHOTOEFFECT_FARFIELD_HPP
#define PHOTOEFFECT_FARFIELD_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "error.hpp"
#include "helmholtz.hpp"
#include "vec3.hpp"

// Far-field form of the outgoing amplitude,
//
//   w_+(x) ~ a(n) exp(i k_r |x|) / |x|,   a(phi, theta) = C sin(theta) cos(phi).
//
// Angles follow the photoeffect geometry, not the physics-standard one:
// theta is measured from the propagation axis e1 and phi from the
// polarization axis e3, so that x^3 = |x| sin(theta) cos(phi).

namespace photoeffect::farfield
{

using helmholtz::Complex;

struct SphericalDirection
{
  double theta = 0.0; // angle between n and e1, [0, pi]
  double phi = 0.0;   // azimuth measured from e3, [0, 2 pi)
};

/// n = (cos theta, sin theta sin phi, sin theta cos phi).
inline Vec3 unit_vector(const SphericalDirection& dir)
{
  const double st = std::sin(dir.theta);
  return {std::cos(dir.theta), st * std::sin(dir.phi), st * std::cos(dir.phi)};
}

inline SphericalDirection direction_of(const Vec3& x)
{
  const double r = norm(x);
  if (r == 0.0) {
    return {};
  }
  SphericalDirection dir;
  dir.theta = std::acos(std::clamp(x[0] / r, -1.0, 1.0));
  dir.phi = std::atan2(x[1], x[2]);
  if (dir.phi < 0.0) {
    dir.phi += 2.0 * std::numbers::pi;
  }
  return dir;
}

/// Long-wavelength far-field constant
///   C(k) = (i k_r e / (4 pi hbar c)) int exp(i k y^1) psi_1(y) dy.
/// It drops the retardation factor exp(-i k_r n.y) across the atom, so it is
/// the k_r r1 -> 0 limit of the radiated constant (up to sign; see
/// radiated_constant).
inline Complex C_of_k(const helmholtz::DrivenProblem& p)
{
  const double kr = helmholtz::k_r(p);
  const auto& pc = p.constants;
  const double transform = p.ground.psi1_fourier(p.k);
  return Complex(0.0, kr * pc.electron_charge / (4.0 * std::numbers::pi * pc.hbar * pc.light_speed)) * transform;
}

/// Exact far-field amplitude of -(G_out * f_+):
///   a(n) = -(i k_r e / (4 pi hbar c)) n^3 psihat_1(k e1 - k_r n).
inline Complex radiated_amplitude(const Vec3& n, const helmholtz::DrivenProblem& p)
{
  const double kr = helmholtz::k_r(p);
  const auto& pc = p.constants;
  const Vec3 q{p.k - kr * n[0], -kr * n[1], -kr * n[2]};
  return Complex(0.0, -kr * pc.electron_charge / (4.0 * std::numbers::pi * pc.hbar * pc.light_speed)) * n[2] *
         p.ground.psi1_fourier(q);
}

/// Radiated constant: the amplitude per unit sin(theta) cos(phi) at the
/// equator theta = pi/2, where |k e1 - k_r n| = sqrt(k^2 + k_r^2).
inline Complex radiated_constant(const helmholtz::DrivenProblem& p)
{
  return radiated_amplitude(Vec3{0.0, 0.0, 1.0}, p);
}

struct FarFieldPattern
{
  Complex C{};
  double k_r = 0.0;
  double omega = 0.0;
  double k = 0.0;

  static FarFieldPattern from_problem(const helmholtz::DrivenProblem& p)
  {
    return {radiated_constant(p), helmholtz::k_r(p), p.omega, p.k};
  }
};

/// a(phi, theta) = C sin(theta) cos(phi).
inline Complex angular_amplitude(const SphericalDirection& dir, const FarFieldPattern& pattern)
{
  return pattern.C * std::sin(dir.theta) * std::cos(dir.phi);
}

/// Spatial part of the leading radiated wave a(n) exp(i k_r |x|) / |x|.
inline Complex far_field_w_plus(const Vec3& x, const FarFieldPattern& pattern)
{
  const double r = norm(x);
  if (!(r > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "far field undefined at the origin");
  }
  return angular_amplitude(direction_of(x), pattern) * std::polar(1.0 / r, pattern.k_r * r);
}

struct ExtractedAmplitude
{
  Complex value{};
  /// max_i |g(r_i) - value| / max(|value|, max_i |g(r_i)|), g = |x| exp(-i k_r |x|) w_+.
  double spread = 0.0;
  Complex correction{}; // coefficient of 1/|x| in the fit
  std::vector<Complex> samples;
};

/// Reads a(n) off quadrature values of w_+ along one ray by least squares on
/// g(r) = a + b / r over the given radii.
inline ExtractedAmplitude extract_amplitude_numeric(const SphericalDirection& dir, std::span<const double> radii,
                                                    const helmholtz::DrivenProblem& p,
                                                    const helmholtz::QuadratureSpec& spec)
{
  if (radii.size() < 2) {
    throw Error(ErrorCode::invalid_argument, "amplitude fit needs at least two radii");
  }
  const double kr = helmholtz::k_r(p);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw Error(ErrorCode::invalid_argument, "radii must be strictly increasing");
    }
  }
  if (!(kr * radii.front() >= 50.0)) {
    throw Error(ErrorCode::invalid_argument, "k_r * min(radius) must be at least 50");
  }
  const Vec3 n = unit_vector(dir);
  ExtractedAmplitude out;
  double noise_floor = 0.0;
  for (double r : radii) {
    const auto w = helmholtz::w_plus(r * n, p, spec);
    out.samples.push_back(r * std::polar(1.0, -kr * r) * w.value);
    noise_floor = std::max(noise_floor, r * (w.abs_error + 1e-13 * w.scale));
  }
  // Normal equations for the real basis {1, 1/r}.
  double s00 = 0.0;
  double s01 = 0.0;
  double s11 = 0.0;
  Complex b0{};
  Complex b1{};
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double u = 1.0 / radii[i];
    s00 += 1.0;
    s01 += u;
    s11 += u * u;
    b0 += out.samples[i];
    b1 += u * out.samples[i];
  }
  const double det = s00 * s11 - s01 * s01;
  out.value = (s11 * b0 - s01 * b1) / det;
  out.correction = (s00 * b1 - s01 * b0) / det;

  double gmax = 0.0;
  double dev = 0.0;
  for (const auto& g : out.samples) {
    gmax = std::max(gmax, std::abs(g));
    dev = std::max(dev, std::abs(g - out.value));
  }
  if (gmax <= noise_floor) {
    // Nodal ray: every sample is quadrature noise.
    out.value = Complex{};
    out.correction = Complex{};
    out.spread = 0.0;
    return out;
  }
  out.spread = dev / std::max(std::abs(out.value), gmax);
  if (out.spread > 0.2) {
    throw Error(ErrorCode::nonconvergent_fit, "far-field samples spread by more than 20%");
  }
  return out;
}

} // namespace photoeffect::farfield

#endif
