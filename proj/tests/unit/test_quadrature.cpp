#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "photoeffect/quadrature.hpp"

using namespace photoeffect;
using namespace photoeffect::quadrature;

TEST(GaussLegendre, WeightsSumToTwoAndNodesAscend)
{
  for (std::size_t n : {1u, 2u, 5u, 16u, 64u, 257u}) {
    const auto r = gauss_legendre<double>(n);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      s += r.weights[i];
      EXPECT_GT(r.weights[i], 0.0);
      if (i > 0) {
        EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
      }
    }
    EXPECT_NEAR(s, 2.0, 1e-13) << n;
  }
}

TEST(GaussLegendre, ExactForDegreeTwoNMinusOne)
{
  for (std::size_t n : {1u, 3u, 8u, 20u}) {
    const auto r = gauss_legendre<double>(n);
    for (std::size_t deg = 0; deg <= 2 * n - 1; ++deg) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        s += r.weights[i] * std::pow(r.nodes[i], double(deg));
      }
      const double exact = deg % 2 == 1 ? 0.0 : 2.0 / double(deg + 1);
      EXPECT_NEAR(s, exact, 1e-13) << "n=" << n << " deg=" << deg;
    }
  }
}

TEST(GaussLegendre, LongDoubleAndMappedInterval)
{
  const auto r = gauss_legendre<long double>(12, 1.0L, 3.0L);
  long double s = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    s += r.weights[i] * r.nodes[i] * r.nodes[i];
  }
  EXPECT_NEAR(double(s), 26.0 / 3.0, 1e-15);
}

TEST(GaussLegendre, ZeroNodesRejected)
{
  EXPECT_THROW(gauss_legendre<double>(0), Error);
  EXPECT_THROW(periodic_trapezoid<double>(0), Error);
}

TEST(PeriodicTrapezoid, ExactForLowTrigonometricDegree)
{
  const auto r = periodic_trapezoid<double>(8);
  for (int m = 0; m < 8; ++m) {
    double c = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      c += r.weights[i] * std::cos(m * r.nodes[i]);
    }
    EXPECT_NEAR(c, m == 0 ? 2.0 * std::numbers::pi : 0.0, 1e-13) << m;
  }
}

TEST(Integrate, PanelsAndComplexValues)
{
  const double v = integrate([](double x) { return std::exp(-x); }, 0.0, 30.0, 16, 8);
  EXPECT_NEAR(v, 1.0 - std::exp(-30.0), 1e-14);
  const auto z = integrate([](double x) { return std::exp(std::complex<double>(0.0, x)); }, 0.0,
                           2.0 * std::numbers::pi, 20, 2);
  EXPECT_NEAR(std::abs(z), 0.0, 1e-13);
}
