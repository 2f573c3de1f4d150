#ifndef PHOTOEFFECT_HELMHOLTZ_HPP
#define PHOTOEFFECT_HELMHOLTZ_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <vector>

#include "error.hpp"
#include "hydrogen.hpp"
#include "quadrature.hpp"
#include "units.hpp"
#include "vec3.hpp"

// Limiting amplitudes of the first-order driven problem
//
//   [Delta + k_r^2] w_+ = f_+,   f_+(x) = (e / hbar c) exp( i k x^1) d_3 psi_1(x)
//   [Delta - kappa^2] w_- = f_-, f_-(x) = (e / hbar c) exp(-i k x^1) d_3 psi_1(x)
//
// (Coulomb term dropped) solved by convolution with the outgoing Helmholtz
// kernel and the Yukawa kernel respectively:
//
//   w(x) = - int exp(i q |x-y|) / (4 pi |x-y|) f(y) dy,   q = k_r  or  q = i kappa.

namespace photoeffect::helmholtz
{

using Complex = std::complex<double>;

enum class Branch
{
  plus,
  minus,
};

struct DrivenProblem
{
  double k = 0.0;     // incident wavenumber
  double omega = 0.0; // incident frequency, omega = c k
  hydrogen::HydrogenGroundState ground{};
  Branch branch = Branch::plus;
  units::PhysicalConstants constants{};

  static DrivenProblem from_omega(double omega, Branch branch = Branch::plus,
                                  const units::PhysicalConstants& pc = units::codata2018)
  {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
      throw Error(ErrorCode::invalid_argument, "incident frequency must be positive");
    }
    DrivenProblem p;
    p.omega = omega;
    p.k = omega / pc.light_speed;
    p.ground = hydrogen::HydrogenGroundState::from_constants(pc);
    p.branch = branch;
    p.constants = pc;
    if (branch == Branch::plus && !(omega + p.ground.omega1 > 0.0)) {
      throw Error(ErrorCode::below_threshold, "omega + omega1 <= 0: no outgoing solution");
    }
    return p;
  }

  bool above_threshold() const { return omega + ground.omega1 > 0.0; }
};

struct QuadratureSpec
{
  double radial_cutoff = 20.0;
  std::size_t node_budget = 8'000'000;
  double singular_shell_radius = 1.0;
  double target_rel_error = 1e-6;

  /// Field points farther than this are outside the validated range.
  double max_field_radius() const { return 10.0 * radial_cutoff; }

  void validate(const hydrogen::HydrogenGroundState& ground) const
  {
    if (!(radial_cutoff >= 20.0 * ground.r1)) {
      throw Error(ErrorCode::invalid_argument, "radial_cutoff must be at least 20 r1");
    }
    if (!(target_rel_error > 0.0 && target_rel_error <= 0.1)) {
      throw Error(ErrorCode::invalid_argument, "target_rel_error must lie in (0, 0.1]");
    }
    if (!(singular_shell_radius > 0.0)) {
      throw Error(ErrorCode::invalid_argument, "singular_shell_radius must be positive");
    }
    if (node_budget == 0) {
      throw Error(ErrorCode::invalid_argument, "node_budget must be positive");
    }
  }
};

struct AmplitudeEstimate
{
  Complex value{};
  double abs_error = 0.0;
  double rel_error = 0.0;
  /// L1 norm of the integrand, the natural size of w for cancellation tests.
  double scale = 0.0;
  std::size_t nodes = 0;
  int level = 0;
};

/// k_r(omega) = sqrt(2 m (omega1 + omega) / hbar) > 0.
inline double k_r(const DrivenProblem& p)
{
  const double arg = 2.0 * p.constants.electron_mass * (p.ground.omega1 + p.omega) / p.constants.hbar;
  if (!(arg > 0.0)) {
    throw Error(ErrorCode::below_threshold, "omega <= |omega1|: photoeffect forbidden");
  }
  return std::sqrt(arg);
}

/// k_r at the complexified frequency omega + i eps (principal branch, Im > 0).
inline Complex k_r(const DrivenProblem& p, double eps)
{
  if (eps == 0.0) {
    return {k_r(p), 0.0};
  }
  const Complex arg =
      2.0 * p.constants.electron_mass * Complex(p.ground.omega1 + p.omega, eps) / p.constants.hbar;
  return std::sqrt(arg);
}

/// kappa_- = sqrt(-2 m (omega1 - omega) / hbar) > 0.
inline double kappa_minus(const DrivenProblem& p)
{
  if (!(p.omega > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "incident frequency must be positive");
  }
  return std::sqrt(-2.0 * p.constants.electron_mass * (p.ground.omega1 - p.omega) / p.constants.hbar);
}

inline double source_prefactor(const DrivenProblem& p)
{
  return p.constants.electron_charge / (p.constants.hbar * p.constants.light_speed);
}

inline Complex source_f_plus(const Vec3& x, const DrivenProblem& p)
{
  return source_prefactor(p) * std::polar(1.0, p.k * x[0]) * p.ground.grad3_psi1(x);
}

inline Complex source_f_minus(const Vec3& x, const DrivenProblem& p)
{
  return source_prefactor(p) * std::polar(1.0, -p.k * x[0]) * p.ground.grad3_psi1(x);
}

namespace detail
{

struct RuleShape
{
  std::size_t radial = 0;    // Gauss nodes per radial panel
  std::size_t distance = 0;  // Gauss nodes in rho = |x - y|
  std::size_t azimuthal = 0; // trapezoid nodes around the x axis
};

// Node counts depend on the level and the problem scales only, never on the
// field point, so that fixed-level evaluations are smooth in x.
inline RuleShape rule_shape(int level, Complex q, double incident_k, const QuadratureSpec& spec)
{
  const double R = spec.radial_cutoff;
  const double osc = std::abs(q.real());
  auto floor_nodes = [](double len_in_wavelengths, std::size_t base) {
    return std::max<std::size_t>(base, static_cast<std::size_t>(std::ceil(10.0 * len_in_wavelengths)));
  };
  RuleShape s;
  s.radial = floor_nodes(osc * R / (2.0 * std::numbers::pi), 16);
  s.distance = floor_nodes(osc * 2.0 * R / (2.0 * std::numbers::pi), 16);
  s.azimuthal = std::max<std::size_t>(8, 2 * static_cast<std::size_t>(std::ceil(std::abs(incident_k) * R)) + 8);
  const std::size_t mult = std::size_t{1} << level;
  s.radial *= mult;
  s.distance *= mult;
  s.azimuthal *= mult;
  return s;
}

// Orthonormal pair spanning the plane normal to xhat.  e_b is the projection
// of e3 whenever possible, which makes the rule mirror-symmetric under
// x^3 -> -x^3.
inline void transverse_frame(const Vec3& xhat, Vec3& ea, Vec3& eb)
{
  Vec3 ref{0.0, 0.0, 1.0};
  Vec3 proj = ref - dot(ref, xhat) * xhat;
  if (norm(proj) < 1e-8) {
    ref = {1.0, 0.0, 0.0};
    proj = ref - dot(ref, xhat) * xhat;
  }
  eb = (1.0 / norm(proj)) * proj;
  ea = cross(eb, xhat);
}

// cos/sin on the uniform circle grid with exact mirror symmetry
// sin(phi_{n-j}) = -sin(phi_j).
inline void circle_grid(std::size_t n, std::vector<double>& c, std::vector<double>& s)
{
  c.assign(n, 0.0);
  s.assign(n, 0.0);
  for (std::size_t j = 0; j <= n / 2; ++j) {
    const double phi = 2.0 * std::numbers::pi * double(j) / double(n);
    c[j] = std::cos(phi);
    s[j] = std::sin(phi);
    if (j != 0 && n - j != j) {
      c[n - j] = c[j];
      s[n - j] = -s[j];
    }
  }
  if (n % 2 == 0) {
    s[n / 2] = 0.0;
  }
}

struct FixedLevelResult
{
  Complex value{};
  double l1 = 0.0;
  std::size_t nodes = 0;
};

// int_{|y| <= R} exp(i q |x-y|) / (4 pi |x-y|) f(y) dy at a fixed rule level.
//
// Spherical coordinates about the origin with the pole along x, and the polar
// angle traded for rho = |x - y|.  The Jacobian of that substitution,
// rho / (|x| r), cancels the 1/rho kernel singularity exactly.  The radial
// integral is split at |x| (kink of the rho range) and at |x| +- shell radius
// to refine around the singular point.
template <class Source>
FixedLevelResult green_convolution_fixed(const Vec3& x, Complex q, Source&& f, const QuadratureSpec& spec,
                                         const RuleShape& shape)
{
  const double R = spec.radial_cutoff;
  const double d = norm(x);
  const double four_pi = 4.0 * std::numbers::pi;
  std::vector<double> cphi;
  std::vector<double> sphi;
  circle_grid(shape.azimuthal, cphi, sphi);
  const double wphi = 2.0 * std::numbers::pi / double(shape.azimuthal);

  FixedLevelResult out;

  if (d < 1e-12 * R) {
    // Field point at the origin: plain spherical coordinates.
    const auto rr = quadrature::gauss_legendre<double>(shape.radial, 0.0, R);
    const auto ct = quadrature::gauss_legendre<double>(shape.distance);
    for (std::size_t i = 0; i < rr.size(); ++i) {
      const double r = rr.nodes[i];
      const Complex kern = std::exp(Complex(0.0, 1.0) * q * r) * (rr.weights[i] * r / four_pi);
      Complex ang{};
      double ang_l1 = 0.0;
      for (std::size_t j = 0; j < ct.size(); ++j) {
        const double c = ct.nodes[j];
        const double st = std::sqrt(std::max(0.0, 1.0 - c * c));
        for (std::size_t m = 0; m < cphi.size(); ++m) {
          const Vec3 y{r * st * cphi[m], r * st * sphi[m], r * c};
          const Complex fy = f(y);
          ang += ct.weights[j] * wphi * fy;
          ang_l1 += ct.weights[j] * wphi * std::abs(fy);
        }
      }
      out.value += kern * ang;
      out.l1 += std::abs(kern) * ang_l1;
    }
    out.nodes = rr.size() * ct.size() * cphi.size();
    return out;
  }

  const Vec3 xhat = (1.0 / d) * x;
  Vec3 ea;
  Vec3 eb;
  transverse_frame(xhat, ea, eb);

  std::vector<double> cuts{0.0, R};
  const double s = spec.singular_shell_radius;
  for (double b : {d - s, d, d + s}) {
    if (b > 1e-9 * R && b < R * (1.0 - 1e-9)) {
      cuts.push_back(b);
    }
  }
  std::sort(cuts.begin(), cuts.end());

  const auto radial_ref = quadrature::gauss_legendre<double>(shape.radial);
  const auto dist_ref = quadrature::gauss_legendre<double>(shape.distance);

  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const double a = cuts[p];
    const double b = cuts[p + 1];
    for (std::size_t i = 0; i < radial_ref.size(); ++i) {
      const double r = 0.5 * (a + b) + 0.5 * (b - a) * radial_ref.nodes[i];
      const double wr = 0.5 * (b - a) * radial_ref.weights[i];
      const double rho_lo = std::abs(r - d);
      const double rho_hi = r + d;
      const double rho_mid = 0.5 * (rho_lo + rho_hi);
      const double rho_half = 0.5 * (rho_hi - rho_lo);
      const double rfac = wr * r / (four_pi * d);
      for (std::size_t j = 0; j < dist_ref.size(); ++j) {
        const double rho = rho_mid + rho_half * dist_ref.nodes[j];
        const double wrho = rho_half * dist_ref.weights[j];
        const double cth = std::clamp((d * d + r * r - rho * rho) / (2.0 * d * r), -1.0, 1.0);
        const double sth = std::sqrt(std::max(0.0, 1.0 - cth * cth));
        const Vec3 axial = (r * cth) * xhat;
        const Vec3 ta = (r * sth) * ea;
        const Vec3 tb = (r * sth) * eb;
        Complex ring{};
        double ring_l1 = 0.0;
        for (std::size_t m = 0; m < cphi.size(); ++m) {
          const Vec3 y{axial[0] + cphi[m] * ta[0] + sphi[m] * tb[0], axial[1] + cphi[m] * ta[1] + sphi[m] * tb[1],
                       axial[2] + cphi[m] * ta[2] + sphi[m] * tb[2]};
          const Complex fy = f(y);
          ring += fy;
          ring_l1 += std::abs(fy);
        }
        const Complex kern = std::exp(Complex(0.0, 1.0) * q * rho) * (rfac * wrho * wphi);
        out.value += kern * ring;
        out.l1 += std::abs(kern) * ring_l1;
      }
    }
    out.nodes += radial_ref.size() * dist_ref.size() * cphi.size();
  }
  return out;
}

inline void check_field_point(const Vec3& x, const QuadratureSpec& spec)
{
  if (!(norm(x) <= spec.max_field_radius() * (1.0 + 1e-12))) {
    std::ostringstream msg;
    msg << "field point |x| = " << norm(x) << " outside validated range " << spec.max_field_radius();
    throw Error(ErrorCode::invalid_argument, msg.str());
  }
}

} // namespace detail

/// Convolution  int_{|y|<=R} exp(i q|x-y|)/(4 pi |x-y|) f(y) dy  at a fixed
/// refinement level (node count grows 8x per level).
template <class Source>
AmplitudeEstimate green_convolution_at_level(const Vec3& x, Complex q, double incident_k, Source&& f,
                                             const QuadratureSpec& spec, int level)
{
  const auto shape = detail::rule_shape(level, q, incident_k, spec);
  const auto fine = detail::green_convolution_fixed(x, q, f, spec, shape);
  AmplitudeEstimate est;
  est.value = fine.value;
  est.scale = fine.l1;
  est.nodes = fine.nodes;
  est.level = level;
  if (level > 0) {
    const auto coarse = detail::green_convolution_fixed(x, q, f, spec, detail::rule_shape(level - 1, q, incident_k, spec));
    est.abs_error = std::abs(fine.value - coarse.value);
    est.nodes += coarse.nodes;
  }
  est.rel_error = est.abs_error / std::max(std::abs(est.value), 1e-300);
  return est;
}

/// Adaptive version: refines until |I_l - I_{l-1}| <= target * max(|I|, 1e-3 L1)
/// or the node budget is exhausted.
template <class Source>
AmplitudeEstimate green_convolution(const Vec3& x, Complex q, double incident_k, Source&& f,
                                    const QuadratureSpec& spec)
{
  const auto base = detail::rule_shape(0, q, incident_k, spec);
  detail::FixedLevelResult coarse = detail::green_convolution_fixed(x, q, f, spec, base);
  const std::size_t per_cell = coarse.nodes / (base.radial * base.distance * base.azimuthal);
  std::size_t used = coarse.nodes;
  double err = 0.0;
  for (int level = 1;; ++level) {
    const auto shape = detail::rule_shape(level, q, incident_k, spec);
    const std::size_t planned = per_cell * shape.radial * shape.distance * shape.azimuthal;
    if (used + planned > spec.node_budget) {
      std::ostringstream msg;
      msg << "convolution " << coarse.value << " with error estimate " << (level > 1 ? err : std::abs(coarse.value))
          << " after " << used << " nodes; level " << level << " needs " << planned << " more (budget "
          << spec.node_budget << ")";
      throw Error(ErrorCode::quadrature_nonconvergence, msg.str());
    }
    const auto fine = detail::green_convolution_fixed(x, q, f, spec, shape);
    used += fine.nodes;
    err = std::abs(fine.value - coarse.value);
    const double ref = std::max(std::abs(fine.value), 1e-3 * fine.l1);
    if (err <= spec.target_rel_error * ref || ref == 0.0) {
      AmplitudeEstimate est;
      est.value = fine.value;
      est.abs_error = err;
      est.rel_error = err / std::max(std::abs(fine.value), 1e-300);
      est.scale = fine.l1;
      est.nodes = used;
      est.level = level;
      return est;
    }
    coarse = fine;
  }
}

namespace detail
{

inline auto plus_source(const DrivenProblem& p)
{
  const double pref = source_prefactor(p);
  const double k = p.k;
  const auto g = p.ground;
  return [pref, k, g](const Vec3& y) { return pref * std::polar(1.0, k * y[0]) * g.grad3_psi1(y); };
}

inline auto minus_source(const DrivenProblem& p)
{
  const double pref = source_prefactor(p);
  const double k = p.k;
  const auto g = p.ground;
  return [pref, k, g](const Vec3& y) { return pref * std::polar(1.0, -k * y[0]) * g.grad3_psi1(y); };
}

inline AmplitudeEstimate negate(AmplitudeEstimate e)
{
  e.value = -e.value;
  return e;
}

} // namespace detail

/// Outgoing limiting amplitude w_+(x) = -(G_out * f_+)(x).
inline AmplitudeEstimate w_plus(const Vec3& x, const DrivenProblem& p, const QuadratureSpec& spec)
{
  spec.validate(p.ground);
  detail::check_field_point(x, spec);
  return detail::negate(green_convolution(x, Complex(k_r(p), 0.0), p.k, detail::plus_source(p), spec));
}

/// w_+ on a fixed rule level; used where several evaluations must share one rule.
inline AmplitudeEstimate w_plus_at_level(const Vec3& x, const DrivenProblem& p, const QuadratureSpec& spec, int level)
{
  spec.validate(p.ground);
  detail::check_field_point(x, spec);
  return detail::negate(green_convolution_at_level(x, Complex(k_r(p), 0.0), p.k, detail::plus_source(p), spec, level));
}

/// Exponentially decaying amplitude w_-(x) = -(Yukawa * f_-)(x).
inline AmplitudeEstimate w_minus(const Vec3& x, const DrivenProblem& p, const QuadratureSpec& spec)
{
  spec.validate(p.ground);
  detail::check_field_point(x, spec);
  return detail::negate(green_convolution(x, Complex(0.0, kappa_minus(p)), p.k, detail::minus_source(p), spec));
}

/// w_+ computed with the damped kernel exp(i k_r(omega + i eps)|x-y|).
inline AmplitudeEstimate limiting_absorption_w_plus(const Vec3& x, const DrivenProblem& p, const QuadratureSpec& spec,
                                                    double epsilon)
{
  if (!(epsilon >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "epsilon must be non-negative");
  }
  spec.validate(p.ground);
  detail::check_field_point(x, spec);
  return detail::negate(green_convolution(x, k_r(p, epsilon), p.k, detail::plus_source(p), spec));
}

struct ResidualReport
{
  Complex residual{};
  double magnitude = 0.0;
  Complex w_center{};
  Complex laplacian{};
  Complex source{};
  int level = 0;
};

/// 7-point finite-difference check of [Delta + k_r^2] w_+ = f_+ at x.  All
/// seven evaluations share one quadrature level so that the rule moves
/// smoothly with the stencil.
inline ResidualReport helmholtz_residual(const DrivenProblem& p, const QuadratureSpec& spec, const Vec3& x, double h)
{
  if (!(h > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "finite-difference step must be positive");
  }
  if (norm(x) < 10.0 * h) {
    throw Error(ErrorCode::invalid_argument, "residual point must be at least 10 h from the origin");
  }
  const auto center = w_plus(x, p, spec);
  const int level = center.level;
  const Complex w0 = w_plus_at_level(x, p, spec, level).value;
  Complex sum{};
  for (int axis = 0; axis < 3; ++axis) {
    for (double sgn : {-1.0, 1.0}) {
      Vec3 xs = x;
      xs[axis] += sgn * h;
      sum += w_plus_at_level(xs, p, spec, level).value;
    }
  }
  ResidualReport rep;
  rep.level = level;
  rep.w_center = w0;
  rep.laplacian = (sum - 6.0 * w0) / (h * h);
  rep.source = source_f_plus(x, p);
  const double kr = k_r(p);
  rep.residual = rep.laplacian + kr * kr * w0 - rep.source;
  rep.magnitude = std::abs(rep.residual);
  return rep;
}

/// Both limiting amplitudes for one incident frequency above threshold.
class LimitingAmplitudePair
{
public:
  LimitingAmplitudePair(const DrivenProblem& problem, const QuadratureSpec& spec)
  : problem_(problem), spec_(spec), k_r_(helmholtz::k_r(problem)), kappa_minus_(helmholtz::kappa_minus(problem))
  {
    spec_.validate(problem_.ground);
  }

  double k_r() const { return k_r_; }
  double kappa_minus() const { return kappa_minus_; }
  const QuadratureSpec& spec() const { return spec_; }
  const DrivenProblem& problem() const { return problem_; }

  AmplitudeEstimate w_plus(const Vec3& x) const { return helmholtz::w_plus(x, problem_, spec_); }
  AmplitudeEstimate w_minus(const Vec3& x) const { return helmholtz::w_minus(x, problem_, spec_); }

private:
  DrivenProblem problem_;
  QuadratureSpec spec_;
  double k_r_;
  double kappa_minus_;
};

} // namespace photoeffect::helmholtz

#endif
