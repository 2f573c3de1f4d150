#include <cmath>
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "oracles/riemann_convolution.hpp"
#include "photoeffect/farfield.hpp"
#include "photoeffect/helmholtz.hpp"

using namespace photoeffect;
using namespace photoeffect::helmholtz;

namespace
{

const QuadratureSpec spec{};

DrivenProblem plus(double omega) { return DrivenProblem::from_omega(omega, Branch::plus); }
DrivenProblem minus(double omega) { return DrivenProblem::from_omega(omega, Branch::minus); }

ErrorCode code_of(auto&& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::invalid_argument;
}

// Richardson-extrapolated lattice oracle (O(h^2) error) for -(G * f).
template <class F>
Complex oracle_amplitude(const Vec3& x, Complex q, F&& f)
{
  const Complex coarse = oracle::riemann_green_convolution(x, q, f, 0.2, 16.0);
  const Complex fine = oracle::riemann_green_convolution(x, q, f, 0.1, 16.0);
  return -(4.0 * fine - coarse) / 3.0;
}

} // namespace

TEST(DrivenProblem, Construction)
{
  const auto p = plus(1.0);
  EXPECT_DOUBLE_EQ(p.k * p.constants.light_speed, 1.0);
  EXPECT_TRUE(p.above_threshold());
  EXPECT_EQ(code_of([] { (void)plus(0.5); }), ErrorCode::below_threshold);
  EXPECT_EQ(code_of([] { (void)plus(0.0); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { (void)minus(-1.0); }), ErrorCode::invalid_argument);
  EXPECT_FALSE(minus(0.3).above_threshold());
}

TEST(KR, Examples)
{
  EXPECT_DOUBLE_EQ(k_r(plus(1.0)), 1.0);
  EXPECT_DOUBLE_EQ(k_r(plus(2.5)), 2.0);
  auto p = minus(0.5); // a below-threshold problem can only be built on the minus branch
  EXPECT_EQ(code_of([&] { (void)k_r(p); }), ErrorCode::below_threshold);
}

TEST(KappaMinus, ExamplesAndMonotone)
{
  EXPECT_NEAR(kappa_minus(minus(1.0)), std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(kappa_minus(minus(0.5)), std::sqrt(2.0), 1e-15);
  double prev = 0.0;
  for (double w = 0.1; w < 5.0; w += 0.1) {
    const double k = kappa_minus(minus(w));
    EXPECT_GT(k, prev);
    prev = k;
  }
}

TEST(Sources, ClosedForm)
{
  const auto p = plus(1.0);
  EXPECT_EQ(source_f_plus({0.3, -1.0, 0.0}, p), Complex(0.0, 0.0));
  EXPECT_EQ(source_f_minus({0.3, -1.0, 0.0}, p), Complex(0.0, 0.0));
  const Complex v = source_f_plus({0.0, 0.0, 1.0}, p);
  EXPECT_NEAR(v.real(), -1.0 / p.constants.light_speed * (-p.ground.C1 / std::numbers::e), 1e-16);
  EXPECT_EQ(v.imag(), 0.0);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n;
  for (int i = 0; i < 20; ++i) {
    const Vec3 x{n(rng), n(rng), n(rng)};
    EXPECT_NEAR(std::abs(source_f_plus(x, p)), std::abs(source_f_plus(-1.0 * x, p)), 1e-18);
    const Complex fm = source_f_minus(x, p);
    const Complex fp = source_f_plus(x, p);
    EXPECT_NEAR(std::abs(fm - std::conj(fp)), 0.0, 1e-18);
    EXPECT_LE(std::abs(fp), source_prefactor(p) * -1.0 * p.ground.C1 * std::exp(-norm(x)) + 1e-18);
  }
}

TEST(WPlus, VanishesAtOriginAndOnSymmetryPlane)
{
  const auto p = plus(1.0);
  const auto origin = w_plus({0.0, 0.0, 0.0}, p, spec);
  EXPECT_LE(std::abs(origin.value), 1e-12 * origin.scale);
  for (const Vec3 x : {Vec3{1.0, 0.0, 0.0}, Vec3{-2.0, 3.0, 0.0}, Vec3{0.5, -0.5, 0.0}}) {
    const auto w = w_plus(x, p, spec);
    EXPECT_LE(std::abs(w.value), 1e-12 * w.scale) << x[0] << "," << x[1];
  }
}

TEST(WPlus, OddUnderReflection)
{
  const auto p = plus(1.3);
  for (const Vec3 x : {Vec3{0.4, 1.0, 2.0}, Vec3{-3.0, 0.2, 0.7}}) {
    const auto a = w_plus(x, p, spec);
    const auto b = w_plus({x[0], x[1], -x[2]}, p, spec);
    EXPECT_LE(std::abs(a.value + b.value), 1e-10 * std::abs(a.value));
  }
}

TEST(WPlus, ReportsErrorWithinTarget)
{
  const auto p = plus(1.0);
  const auto w = w_plus({1.0, 2.0, 0.5}, p, spec);
  EXPECT_LE(w.rel_error, spec.target_rel_error);
  EXPECT_GT(w.nodes, 0u);
}

TEST(WPlus, FarFieldAtRadius200)
{
  const auto p = plus(1.0);
  const auto pattern = farfield::FarFieldPattern::from_problem(p);
  const Vec3 x{0.0, 0.0, 200.0}; // theta = pi/2, phi = 0
  const Complex w = w_plus(x, p, spec).value;
  const Complex ff = farfield::far_field_w_plus(x, pattern);
  EXPECT_LE(std::abs(w - ff) / std::abs(ff), 0.05);
}

TEST(WPlus, MatchesLatticeOracleAtRandomPoints)
{
  const auto p = plus(1.0);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  auto f = [&](const Vec3& y) { return source_f_plus(y, p); };
  for (int i = 0; i < 5; ++i) {
    const Vec3 x{u(rng), u(rng), u(rng)};
    const Complex engine = w_plus(x, p, spec).value;
    const Complex ref = oracle_amplitude(x, Complex(k_r(p), 0.0), f);
    EXPECT_LE(std::abs(engine - ref) / std::abs(engine), 1e-3) << "point " << i;
  }
}

TEST(WMinus, MatchesLatticeOracle)
{
  const auto p = minus(1.0);
  auto f = [&](const Vec3& y) { return source_f_minus(y, p); };
  const Vec3 x{0.0, 0.0, 3.0};
  const Complex engine = w_minus(x, p, spec).value;
  const Complex ref = oracle_amplitude(x, Complex(0.0, kappa_minus(p)), f);
  EXPECT_LE(std::abs(engine - ref) / std::abs(engine), 1e-3);
}

TEST(WMinus, SymmetryAndExponentialDecay)
{
  const auto p = minus(1.0);
  const auto plane = w_minus({2.0, -1.0, 0.0}, p, spec);
  EXPECT_LE(std::abs(plane.value), 1e-12 * plane.scale);
  const auto a = w_minus({0.3, 0.2, 1.5}, p, spec);
  const auto b = w_minus({0.3, 0.2, -1.5}, p, spec);
  EXPECT_LE(std::abs(a.value + b.value), 1e-10 * std::abs(a.value));

  const double eps_minus = std::min(1.0 / p.ground.r1, kappa_minus(p));
  double prev = std::log(std::abs(w_minus({0.0, 0.0, 5.0}, p, spec).value));
  for (double r : {10.0, 15.0}) {
    const double cur = std::log(std::abs(w_minus({0.0, 0.0, r}, p, spec).value));
    EXPECT_LE((cur - prev) / 5.0, -0.9 * eps_minus) << r;
    prev = cur;
  }
}

TEST(Amplitudes, DecayDichotomy)
{
  const LimitingAmplitudePair pair(plus(1.0), spec);
  EXPECT_DOUBLE_EQ(pair.k_r(), 1.0);
  EXPECT_NEAR(pair.kappa_minus(), std::sqrt(3.0), 1e-15);
  const double near_plus = 50.0 * std::abs(pair.w_plus({0.0, 0.0, 50.0}).value);
  const double far_plus = 150.0 * std::abs(pair.w_plus({0.0, 0.0, 150.0}).value);
  EXPECT_NEAR(far_plus / near_plus, 1.0, 0.01);
  EXPECT_GT(far_plus, 1e-3);
  const double near_minus = 10.0 * std::abs(pair.w_minus({0.0, 0.0, 10.0}).value);
  const double far_minus = 30.0 * std::abs(pair.w_minus({0.0, 0.0, 30.0}).value);
  EXPECT_LT(far_minus, 1e-6 * near_minus);
}

TEST(Residual, SmallAtReferencePoint)
{
  const auto p = plus(1.0);
  const double max_f = std::abs(source_prefactor(p)) * p.ground.C1;
  const auto rep = helmholtz_residual(p, spec, {2.0, 1.0, 1.0}, 1e-2);
  EXPECT_LE(rep.magnitude, 1e-2 * max_f);
}

TEST(Residual, DecreasesUnderRefinement)
{
  const auto p = plus(1.0);
  const Vec3 x{3.0, -1.0, 2.0};
  const double r1 = helmholtz_residual(p, spec, x, 0.2).magnitude;
  const double r2 = helmholtz_residual(p, spec, x, 0.1).magnitude;
  const double r3 = helmholtz_residual(p, spec, x, 0.05).magnitude;
  EXPECT_LT(r2, r1);
  EXPECT_LT(r3, r2);
  EXPECT_NEAR(r1 / r2, 4.0, 0.5); // second-order stencil
}

TEST(Residual, FarFieldAloneIsNotASolutionNearTheAtom)
{
  const auto p = plus(1.0);
  const auto pattern = farfield::FarFieldPattern::from_problem(p);
  const Vec3 x{2.0, 1.0, 1.0};
  const double h = 1e-2;
  Complex sum{};
  for (int axis = 0; axis < 3; ++axis) {
    for (double s : {-1.0, 1.0}) {
      Vec3 xs = x;
      xs[axis] += s * h;
      sum += farfield::far_field_w_plus(xs, pattern);
    }
  }
  const Complex w0 = farfield::far_field_w_plus(x, pattern);
  const Complex res = (sum - 6.0 * w0) / (h * h) + w0 - source_f_plus(x, p);
  const double max_f = std::abs(source_prefactor(p)) * p.ground.C1;
  EXPECT_GT(std::abs(res), 1e-2 * max_f);
}

TEST(Residual, RejectsPointsNearOrigin)
{
  const auto p = plus(1.0);
  EXPECT_EQ(code_of([&] { (void)helmholtz_residual(p, spec, {0.05, 0.0, 0.0}, 0.01); }), ErrorCode::invalid_argument);
}

TEST(LimitingAbsorption, ConvergesToOutgoingAmplitude)
{
  const auto p = plus(1.0);
  const Vec3 x{1.0, 0.5, 2.0};
  const Complex w = w_plus(x, p, spec).value;
  EXPECT_EQ(limiting_absorption_w_plus(x, p, spec, 0.0).value, w);
  const double d1 = std::abs(limiting_absorption_w_plus(x, p, spec, 1e-1).value - w);
  const double d2 = std::abs(limiting_absorption_w_plus(x, p, spec, 1e-2).value - w);
  const double d3 = std::abs(limiting_absorption_w_plus(x, p, spec, 1e-3).value - w);
  EXPECT_LE(d2, d1);
  EXPECT_LE(d3, d2);
  for (double eps : {1e-3, 1e-2, 1e-1}) {
    EXPECT_GT(k_r(p, eps).imag(), 0.0);
  }
  EXPECT_EQ(code_of([&] { (void)limiting_absorption_w_plus(x, p, spec, -1e-3); }), ErrorCode::invalid_argument);
}

TEST(QuadratureSpec, Validation)
{
  const auto g = hydrogen::HydrogenGroundState::from_constants();
  QuadratureSpec s;
  s.radial_cutoff = 10.0;
  EXPECT_EQ(code_of([&] { s.validate(g); }), ErrorCode::invalid_argument);
  s = {};
  s.target_rel_error = 0.2;
  EXPECT_EQ(code_of([&] { s.validate(g); }), ErrorCode::invalid_argument);
  s = {};
  s.target_rel_error = 0.0;
  EXPECT_EQ(code_of([&] { s.validate(g); }), ErrorCode::invalid_argument);
}

TEST(QuadratureSpec, FieldPointRangeAndBudget)
{
  const auto p = plus(1.0);
  EXPECT_EQ(code_of([&] { (void)w_plus({0.0, 0.0, 201.0}, p, spec); }), ErrorCode::invalid_argument);
  QuadratureSpec tight;
  tight.node_budget = 1000;
  EXPECT_EQ(code_of([&] { (void)w_plus({1.0, 1.0, 1.0}, p, tight); }), ErrorCode::quadrature_nonconvergence);
}
