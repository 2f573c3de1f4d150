#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "photoeffect/farfield.hpp"
#include "photoeffect/quadrature.hpp"

using namespace photoeffect;
using namespace photoeffect::farfield;
using helmholtz::Branch;
using helmholtz::DrivenProblem;

namespace
{

constexpr double pi = std::numbers::pi;
const helmholtz::QuadratureSpec spec{};
constexpr std::array<double, 3> radii{100.0, 140.0, 200.0};

} // namespace

TEST(Direction, ConventionPutsPolarizationAtThetaHalfPiPhiZero)
{
  const Vec3 n = unit_vector({pi / 2, 0.0});
  EXPECT_NEAR(n[2], 1.0, 1e-15);
  const Vec3 x{0.3, -1.2, 0.7};
  const auto d = direction_of(x);
  EXPECT_NEAR(x[2], norm(x) * std::sin(d.theta) * std::cos(d.phi), 1e-14);
  const Vec3 back = norm(x) * unit_vector(d);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(back[i], x[i], 1e-14);
  }
  EXPECT_GE(direction_of({0.0, -1.0, 0.0}).phi, 0.0);
}

TEST(CofK, LongWaveFormulaValue)
{
  const auto p = DrivenProblem::from_omega(1.0);
  const Complex C = C_of_k(p);
  EXPECT_NEAR(std::abs(C), 8.23e-3, 0.01e-3);
  EXPECT_EQ(C.real(), 0.0);
  EXPECT_LT(C.imag(), 0.0); // i times a negative charge
  // Linear in k_r at fixed transform: compare two frequencies after removing the transform.
  const auto q = DrivenProblem::from_omega(2.5);
  const double r1 = std::abs(C) / p.ground.psi1_fourier(p.k);
  const double r2 = std::abs(C_of_k(q)) / q.ground.psi1_fourier(q.k);
  EXPECT_NEAR(r2 / r1, helmholtz::k_r(q) / helmholtz::k_r(p), 1e-12);
}

TEST(CofK, AgreesWithDirectQuadratureOfTheDefiningIntegral)
{
  const auto p = DrivenProblem::from_omega(1.7);
  // int exp(i k y1) psi1(y) dy with the pole on e1: 2 pi int r^2 psi(r) int exp(i k r u) du dr.
  const double k = p.k;
  const auto radial = [&](double r) {
    const double ang = std::abs(k * r) < 1e-8 ? 2.0 : 2.0 * std::sin(k * r) / (k * r);
    return 2.0 * pi * r * r * p.ground.psi1({r, 0.0, 0.0}) * ang;
  };
  const double transform = quadrature::integrate(radial, 0.0, 60.0, 40, 12);
  const auto& pc = p.constants;
  const Complex direct =
      Complex(0.0, helmholtz::k_r(p) * pc.electron_charge / (4.0 * pi * pc.hbar * pc.light_speed)) * transform;
  EXPECT_NEAR(std::abs(direct - C_of_k(p)) / std::abs(C_of_k(p)), 0.0, 1e-6);
}

TEST(CofK, IsTheLongWaveLimitOfTheRadiatedConstant)
{
  // Near threshold k_r -> 0 the retardation factor is 1 and only the sign differs.
  const auto p = DrivenProblem::from_omega(0.5 + 1e-8);
  const Complex ratio = radiated_constant(p) / C_of_k(p);
  EXPECT_NEAR(ratio.real(), -1.0, 1e-6);
  EXPECT_NEAR(ratio.imag(), 0.0, 1e-12);
  // At k_r r1 = 1 the retardation reduces |C| by about (1 + k_r^2)^2 = 4.
  const auto q = DrivenProblem::from_omega(1.0);
  EXPECT_NEAR(std::abs(C_of_k(q)) / std::abs(radiated_constant(q)), 4.0, 0.01);
}

TEST(AngularAmplitude, NodesAndMaxima)
{
  const auto pattern = FarFieldPattern::from_problem(DrivenProblem::from_omega(1.0));
  EXPECT_EQ(angular_amplitude({pi / 2, 0.0}, pattern), pattern.C);
  EXPECT_EQ(std::abs(angular_amplitude({0.0, 0.3}, pattern)), 0.0);
  EXPECT_LE(std::abs(angular_amplitude({1.0, pi / 2}, pattern)), 1e-16 * std::abs(pattern.C));
  EXPECT_NE(std::abs(pattern.C), 0.0);
}

TEST(FarFieldWPlus, RadialLaws)
{
  const auto pattern = FarFieldPattern::from_problem(DrivenProblem::from_omega(1.6));
  const Vec3 n = unit_vector({1.0, 0.4});
  const Complex a = far_field_w_plus(10.0 * n, pattern);
  const Complex b = far_field_w_plus(20.0 * n, pattern);
  EXPECT_NEAR(std::abs(b) / std::abs(a), 0.5, 1e-14);
  const Complex c = far_field_w_plus(10.5 * n, pattern) * 10.5;
  const double dphase = std::arg(c / (a * 10.0));
  EXPECT_NEAR(dphase, std::remainder(pattern.k_r * 0.5, 2.0 * pi), 1e-12);
  EXPECT_THROW((void)far_field_w_plus({0.0, 0.0, 0.0}, pattern), Error);
}

TEST(RadiatedAmplitude, MatchesQuadratureAtLargeRadius)
{
  const auto p = DrivenProblem::from_omega(1.0);
  for (const auto& d : {SphericalDirection{pi / 2, 0.0}, SphericalDirection{pi / 3, 0.5}}) {
    const Vec3 x = 150.0 * unit_vector(d);
    const Complex w = helmholtz::w_plus(x, p, spec).value;
    const Complex ff = radiated_amplitude(unit_vector(d), p) * std::polar(1.0 / 150.0, helmholtz::k_r(p) * 150.0);
    EXPECT_LE(std::abs(w - ff) / std::abs(ff), 0.05);
  }
}

TEST(Extraction, MaximumMatchesConstant)
{
  const auto p = DrivenProblem::from_omega(1.0);
  const auto pattern = FarFieldPattern::from_problem(p);
  const auto ex = extract_amplitude_numeric({pi / 2, 0.0}, radii, p, spec);
  EXPECT_LE(std::abs(ex.value - pattern.C) / std::abs(pattern.C), 0.05);
  EXPECT_EQ(ex.samples.size(), radii.size());
}

TEST(Extraction, NodalDirections)
{
  const auto p = DrivenProblem::from_omega(1.0);
  const double C = std::abs(FarFieldPattern::from_problem(p).C);
  for (const auto& d : {SphericalDirection{pi / 2, pi / 2}, SphericalDirection{0.0, 0.0},
                        SphericalDirection{pi, 0.0}, SphericalDirection{1.0, 3 * pi / 2}}) {
    EXPECT_LE(std::abs(extract_amplitude_numeric(d, radii, p, spec).value), 0.02 * C);
  }
}

TEST(Extraction, RatioTest)
{
  const auto p = DrivenProblem::from_omega(1.0);
  const Complex a45 = extract_amplitude_numeric({pi / 4, 0.0}, radii, p, spec).value;
  const Complex a90 = extract_amplitude_numeric({pi / 2, 0.0}, radii, p, spec).value;
  EXPECT_NEAR(std::abs(a45) / std::abs(a90), std::sqrt(0.5), 0.03 * std::sqrt(0.5));
}

TEST(Extraction, SpreadShrinksWithRadius)
{
  const auto p = DrivenProblem::from_omega(1.0);
  const std::array<double, 3> near{50.0, 70.0, 100.0};
  const std::array<double, 3> far{100.0, 140.0, 200.0};
  const double s1 = extract_amplitude_numeric({pi / 3, 0.2}, near, p, spec).spread;
  const double s2 = extract_amplitude_numeric({pi / 3, 0.2}, far, p, spec).spread;
  EXPECT_LT(s2, s1);
}

TEST(Extraction, Preconditions)
{
  const auto p = DrivenProblem::from_omega(1.0);
  const std::array<double, 1> one{100.0};
  const std::array<double, 2> unordered{120.0, 100.0};
  const std::array<double, 2> close{10.0, 20.0};
  EXPECT_THROW((void)extract_amplitude_numeric({1.0, 0.0}, one, p, spec), Error);
  EXPECT_THROW((void)extract_amplitude_numeric({1.0, 0.0}, unordered, p, spec), Error);
  EXPECT_THROW((void)extract_amplitude_numeric({1.0, 0.0}, close, p, spec), Error);
}
