#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "photoeffect/units.hpp"

using namespace photoeffect;
using namespace photoeffect::units;

namespace
{

constexpr Dimension all_dims[] = {Dimension::energy,     Dimension::length,  Dimension::time,
                                  Dimension::frequency,  Dimension::wavenumber, Dimension::voltage,
                                  Dimension::velocity,   Dimension::dimensionless};

} // namespace

TEST(Constants, LightSpeedTimesAlphaIsOne)
{
  EXPECT_DOUBLE_EQ(codata2018.light_speed * codata2018.fine_structure_alpha, 1.0);
}

TEST(Constants, SiConversionsAreMutuallyConsistent)
{
  const double v = codata2018.bohr_in_meters / codata2018.atomic_time_in_seconds;
  EXPECT_NEAR(v / PhysicalConstants::si_light_speed / codata2018.fine_structure_alpha, 1.0, 1e-9);
}

TEST(Constants, RydbergReproducesGroundEnergy)
{
  // -2 pi hbar c R = E1 = -1/2 Hartree
  const double R_au = codata2018.rydberg_per_meter() * codata2018.bohr_in_meters;
  EXPECT_NEAR(2.0 * std::numbers::pi * codata2018.light_speed * R_au, 0.5, 1e-14);
  EXPECT_NEAR(codata2018.rydberg_per_meter(), 10973731.568160, 1e-3);
}

TEST(ToAtomic, OneBohrIsOne)
{
  EXPECT_DOUBLE_EQ(to_atomic({codata2018.bohr_in_meters, Dimension::length}), 1.0);
}

TEST(ToAtomic, SpeedOfLight)
{
  EXPECT_NEAR(to_atomic({PhysicalConstants::si_light_speed, Dimension::velocity}), 137.036, 1e-3);
}

TEST(ToAtomic, WavelengthToWavenumber)
{
  const double k = 2.0 * std::numbers::pi / angstrom_to_bohr(911.76);
  EXPECT_NEAR(k, 0.003646, 1e-6);
}

TEST(FromAtomic, HartreeInEv)
{
  const auto q = from_atomic(1.0, Dimension::energy);
  EXPECT_NEAR(q.value, 27.211, 1e-3);
  EXPECT_EQ(q.dimension, Dimension::energy);
}

TEST(FromAtomic, HalfAtomicFrequency)
{
  EXPECT_NEAR(from_atomic(0.5, Dimension::frequency).value / 2.07e16, 1.0, 2e-3);
}

TEST(FromAtomic, ZeroStaysZero)
{
  for (auto d : all_dims) {
    EXPECT_EQ(from_atomic(0.0, d).value, 0.0) << to_string(d);
  }
}

TEST(FromAtomic, GroundFrequencyNearQuotedValue)
{
  EXPECT_NEAR(from_atomic(0.5, Dimension::frequency).value / 20.5e15, 1.0, 0.01);
}

TEST(Conversion, RoundTripRandom)
{
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mant(-10.0, 10.0);
  std::uniform_int_distribution<int> expo(-20, 20);
  for (auto d : all_dims) {
    for (int i = 0; i < 200; ++i) {
      const double x = mant(rng) * std::pow(10.0, expo(rng));
      const auto q = from_atomic(x, d);
      EXPECT_NEAR(to_atomic(q) / x, 1.0, 1e-12);
      const double back = from_atomic(to_atomic({x, d}), d).value;
      EXPECT_NEAR(back / x, 1.0, 1e-12);
    }
  }
}

TEST(Conversion, UnsupportedDimensionThrows)
{
  const auto bogus = static_cast<Dimension>(99);
  try {
    (void)to_atomic({1.0, bogus});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unsupported_dimension);
  }
  EXPECT_THROW((void)from_atomic(1.0, bogus), Error);
}

TEST(Wavelength, OmegaFromWavelength)
{
  const double lambda_bohr = angstrom_to_bohr(1000.0);
  EXPECT_DOUBLE_EQ(omega_from_wavelength(1000.0), codata2018.light_speed * 2.0 * std::numbers::pi / lambda_bohr);
  EXPECT_NEAR(bohr_to_angstrom(angstrom_to_bohr(3.5)), 3.5, 1e-14);
  EXPECT_THROW((void)omega_from_wavelength(0.0), Error);
  EXPECT_THROW((void)omega_from_wavelength(-1.0), Error);
}
