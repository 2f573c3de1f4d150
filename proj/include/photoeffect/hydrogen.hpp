#ifndef PHOTOEFFECT_HYDROGEN_HPP
#define PHOTOEFFECT_HYDROGEN_HPP

#include <cmath>
#include <numbers>

#include "units.hpp"
#include "vec3.hpp"

namespace photoeffect::hydrogen
{

/// Hydrogen ground state psi_1(x) = C1 exp(-|x|/r1) of a fixed nucleus at the
/// origin.  Only the spatial part is stored; the exp(-i omega1 t) phase is
/// applied by callers.
struct HydrogenGroundState
{
  double C1 = 0.0;
  double r1 = 0.0;
  double omega1 = 0.0;
  double E1 = 0.0;

  static HydrogenGroundState from_constants(const units::PhysicalConstants& pc = units::codata2018)
  {
    const double e2 = pc.elementary_charge_magnitude * pc.elementary_charge_magnitude;
    HydrogenGroundState g;
    g.r1 = pc.hbar * pc.hbar / (pc.electron_mass * e2);
    g.omega1 = -pc.electron_mass * e2 * e2 / (2.0 * pc.hbar * pc.hbar * pc.hbar);
    g.E1 = pc.hbar * g.omega1;
    g.C1 = 1.0 / std::sqrt(std::numbers::pi * g.r1 * g.r1 * g.r1);
    return g;
  }

  double psi1(const Vec3& x) const { return C1 * std::exp(-norm(x) / r1); }

  /// d psi_1 / d x^3 = -(x^3 / (r1 |x|)) psi_1(x).  Defined as 0 at the origin.
  double grad3_psi1(const Vec3& x) const
  {
    const double r = norm(x);
    if (r == 0.0) {
      return 0.0;
    }
    return -(x[2] / (r1 * r)) * C1 * std::exp(-r / r1);
  }

  /// Fourier transform  int exp(i q.y) psi_1(y) dy  as a function of |q|.
  double psi1_fourier(double q) const
  {
    const double s = 1.0 + q * q * r1 * r1;
    return C1 * 8.0 * std::numbers::pi * r1 * r1 * r1 / (s * s);
  }

  double psi1_fourier(const Vec3& q) const { return psi1_fourier(norm(q)); }
};

struct RedBoundReport
{
  double omega_red = 0.0;      // a.u.
  double omega_red_si = 0.0;   // 1/s
  double k1 = 0.0;             // 1/bohr
  double k1_si = 0.0;          // 1/m
  double lambda_red = 0.0;     // bohr
  double lambda_red_angstrom = 0.0;
};

/// Photoeffect threshold: omega_red = |omega1|, k1 = omega_red / c, lambda = 2 pi / k1.
inline RedBoundReport red_bound(const HydrogenGroundState& ground,
                                const units::PhysicalConstants& pc = units::codata2018)
{
  using units::Dimension;
  RedBoundReport rep;
  rep.omega_red = std::abs(ground.omega1);
  rep.omega_red_si = units::from_atomic(rep.omega_red, Dimension::frequency, pc).value;
  rep.k1 = rep.omega_red / pc.light_speed;
  rep.k1_si = units::from_atomic(rep.k1, Dimension::wavenumber, pc).value;
  rep.lambda_red = 2.0 * std::numbers::pi / rep.k1;
  rep.lambda_red_angstrom = units::bohr_to_angstrom(rep.lambda_red, pc);
  return rep;
}

} // namespace photoeffect::hydrogen

#endif
