#ifndef PHOTOEFFECT_UNITS_HPP
#define PHOTOEFFECT_UNITS_HPP

#include <numbers>
#include <string>
#include <string_view>

#include "error.hpp"

// Hartree atomic units: hbar = m_e = |e| = 1, c = 1/alpha.  The electron
// charge is e = -1.  Every formula in the library is written in these
// units; the conversions below are the only place SI-side numbers appear.
//
// "SI side" means: energy in eV, length in m, time in s, angular frequency
// in 1/s, wavenumber in 1/m, voltage in V, velocity in m/s.  Energy and
// voltage use eV / V rather than J because those are what the photoelectric
// rules are quoted in.

namespace photoeffect::units
{

/// Physical constants.  Source values are CODATA 2018 recommended values.
struct PhysicalConstants
{
  double hbar = 1.0;
  double electron_mass = 1.0;
  double elementary_charge_magnitude = 1.0;
  double electron_charge = -1.0;
  double fine_structure_alpha = 7.2973525693e-3;
  double light_speed = 1.0 / 7.2973525693e-3;
  double hartree_in_eV = 27.211386245988;
  double bohr_in_meters = 5.29177210903e-11;
  double atomic_time_in_seconds = 2.4188843265857e-17;

  static constexpr double si_light_speed = 299792458.0; // m/s, exact

  /// Rydberg constant (infinite nuclear mass) in 1/m, from E1 = -2 pi hbar c R.
  constexpr double rydberg_per_meter() const
  {
    return fine_structure_alpha / (4.0 * std::numbers::pi * bohr_in_meters);
  }
};

inline constexpr PhysicalConstants codata2018{};

enum class Dimension
{
  energy,
  length,
  time,
  frequency,
  wavenumber,
  voltage,
  velocity,
  dimensionless,
};

constexpr std::string_view to_string(Dimension dim)
{
  switch (dim) {
    case Dimension::energy: return "energy";
    case Dimension::length: return "length";
    case Dimension::time: return "time";
    case Dimension::frequency: return "frequency";
    case Dimension::wavenumber: return "wavenumber";
    case Dimension::voltage: return "voltage";
    case Dimension::velocity: return "velocity";
    case Dimension::dimensionless: return "dimensionless";
  }
  return "unknown";
}

/// SI-side unit symbol for a dimension.
constexpr std::string_view si_symbol(Dimension dim)
{
  switch (dim) {
    case Dimension::energy: return "eV";
    case Dimension::length: return "m";
    case Dimension::time: return "s";
    case Dimension::frequency: return "1/s";
    case Dimension::wavenumber: return "1/m";
    case Dimension::voltage: return "V";
    case Dimension::velocity: return "m/s";
    case Dimension::dimensionless: return "1";
  }
  return "?";
}

struct Quantity
{
  double value = 0.0;
  Dimension dimension = Dimension::dimensionless;
};

/// SI-side value of one atomic unit of `dim`.
inline double si_per_atomic(Dimension dim, const PhysicalConstants& pc = codata2018)
{
  switch (dim) {
    case Dimension::energy: return pc.hartree_in_eV;
    case Dimension::length: return pc.bohr_in_meters;
    case Dimension::time: return pc.atomic_time_in_seconds;
    case Dimension::frequency: return 1.0 / pc.atomic_time_in_seconds;
    case Dimension::wavenumber: return 1.0 / pc.bohr_in_meters;
    case Dimension::voltage: return pc.hartree_in_eV / pc.elementary_charge_magnitude;
    case Dimension::velocity: return pc.bohr_in_meters / pc.atomic_time_in_seconds;
    case Dimension::dimensionless: return 1.0;
  }
  throw Error(ErrorCode::unsupported_dimension,
              "no conversion for dimension id " + std::to_string(static_cast<int>(dim)));
}

inline double to_atomic(const Quantity& q, const PhysicalConstants& pc = codata2018)
{
  return q.value / si_per_atomic(q.dimension, pc);
}

inline Quantity from_atomic(double x, Dimension dim, const PhysicalConstants& pc = codata2018)
{
  return {x * si_per_atomic(dim, pc), dim};
}

inline constexpr double meters_per_angstrom = 1e-10;

inline double angstrom_to_bohr(double angstrom, const PhysicalConstants& pc = codata2018)
{
  return angstrom * meters_per_angstrom / pc.bohr_in_meters;
}

inline double bohr_to_angstrom(double bohr, const PhysicalConstants& pc = codata2018)
{
  return bohr * pc.bohr_in_meters / meters_per_angstrom;
}

/// Angular frequency (a.u.) of light with vacuum wavelength `angstrom`.
inline double omega_from_wavelength(double angstrom, const PhysicalConstants& pc = codata2018)
{
  if (!(angstrom > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "wavelength must be positive");
  }
  return pc.light_speed * 2.0 * std::numbers::pi / angstrom_to_bohr(angstrom, pc);
}

} // namespace photoeffect::units

#endif
