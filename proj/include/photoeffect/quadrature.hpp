#ifndef PHOTOEFFECT_QUADRATURE_HPP
#define PHOTOEFFECT_QUADRATURE_HPP

#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "error.hpp"

namespace photoeffect::quadrature
{

template <std::floating_point Real>
struct Rule
{
  std::vector<Real> nodes;
  std::vector<Real> weights;

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [-1, 1], nodes ascending.
template <std::floating_point Real = double>
Rule<Real> gauss_legendre(std::size_t n)
{
  if (n == 0) {
    throw Error(ErrorCode::invalid_argument, "Gauss-Legendre rule needs at least one node");
  }
  Rule<Real> rule{std::vector<Real>(n), std::vector<Real>(n)};
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    Real x = std::cos(std::numbers::pi_v<Real> * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
    Real dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      Real p0 = 1;
      Real p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const Real p2 = ((2 * Real(k) - 1) * x * p1 - (Real(k) - 1) * p0) / Real(k);
        p0 = p1;
        p1 = p2;
      }
      dp = Real(n) * (x * p1 - p0) / (x * x - 1);
      const Real dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 4 * std::numeric_limits<Real>::epsilon()) {
        break;
      }
    }
    // Recompute the derivative at the converged node for the weight.
    Real p0 = 1;
    Real p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const Real p2 = ((2 * Real(k) - 1) * x * p1 - (Real(k) - 1) * p0) / Real(k);
      p0 = p1;
      p1 = p2;
    }
    dp = Real(n) * (x * p1 - p0) / (x * x - 1);
    const Real w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = 0;
  }
  return rule;
}

/// Gauss-Legendre rule mapped affinely onto [a, b].
template <std::floating_point Real = double>
Rule<Real> gauss_legendre(std::size_t n, Real a, Real b)
{
  auto rule = gauss_legendre<Real>(n);
  const Real mid = (a + b) / 2;
  const Real half = (b - a) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

/// Uniform trapezoid rule on the circle [0, 2*pi); exact for trigonometric
/// polynomials of degree < n.
template <std::floating_point Real = double>
Rule<Real> periodic_trapezoid(std::size_t n)
{
  if (n == 0) {
    throw Error(ErrorCode::invalid_argument, "periodic rule needs at least one node");
  }
  Rule<Real> rule{std::vector<Real>(n), std::vector<Real>(n, 2 * std::numbers::pi_v<Real> / Real(n))};
  for (std::size_t i = 0; i < n; ++i) {
    rule.nodes[i] = 2 * std::numbers::pi_v<Real> * Real(i) / Real(n);
  }
  return rule;
}

/// Integrates f over [a, b] with an n-point Gauss rule split into `panels`
/// equal pieces.
template <std::floating_point Real, class F>
auto integrate(F&& f, Real a, Real b, std::size_t n, std::size_t panels = 1)
{
  const auto base = gauss_legendre<Real>(n);
  using Value = decltype(f(a));
  Value sum{};
  const Real width = (b - a) / Real(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const Real lo = a + width * Real(p);
    const Real mid = lo + width / 2;
    for (std::size_t i = 0; i < n; ++i) {
      sum += (base.weights[i] * width / 2) * f(mid + width / 2 * base.nodes[i]);
    }
  }
  return sum;
}

} // namespace photoeffect::quadrature

#endif
