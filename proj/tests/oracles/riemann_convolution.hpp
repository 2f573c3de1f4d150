#ifndef PHOTOEFFECT_TESTS_RIEMANN_CONVOLUTION_HPP
#define PHOTOEFFECT_TESTS_RIEMANN_CONVOLUTION_HPP

// Test-only oracle: brute-force Riemann sum of
//   int exp(i q |x-y|) / (4 pi |x-y|) f(y) dy
// on a uniform cubic lattice through x.  The lattice cell containing the
// kernel singularity is replaced by the exact cube integral of 1/rho (and
// its first-order q correction).  Shares no code with the library engine.

#include <cmath>
#include <complex>
#include <numbers>

#include "photoeffect/vec3.hpp"

namespace oracle
{

// int_{[-1/2,1/2]^3} d^3r / |r|
inline constexpr double unit_cube_inverse_distance = 2.380077363979553;

template <class Source>
std::complex<double> riemann_green_convolution(const photoeffect::Vec3& x, std::complex<double> q, Source&& f,
                                               double h, double support_radius)
{
  using C = std::complex<double>;
  const double four_pi = 4.0 * std::numbers::pi;
  const int lo[3] = {static_cast<int>(std::floor((-support_radius - x[0]) / h)),
                     static_cast<int>(std::floor((-support_radius - x[1]) / h)),
                     static_cast<int>(std::floor((-support_radius - x[2]) / h))};
  const int hi[3] = {static_cast<int>(std::ceil((support_radius - x[0]) / h)),
                     static_cast<int>(std::ceil((support_radius - x[1]) / h)),
                     static_cast<int>(std::ceil((support_radius - x[2]) / h))};
  const double r2max = support_radius * support_radius;
  const double cell = h * h * h;
  C sum{};
  for (int i = lo[0]; i <= hi[0]; ++i) {
    const double dx = i * h;
    const double y0 = x[0] + dx;
    for (int j = lo[1]; j <= hi[1]; ++j) {
      const double dy = j * h;
      const double y1 = x[1] + dy;
      C row{};
      for (int k = lo[2]; k <= hi[2]; ++k) {
        const double dz = k * h;
        const double y2 = x[2] + dz;
        if (y0 * y0 + y1 * y1 + y2 * y2 > r2max) {
          continue;
        }
        const photoeffect::Vec3 y{y0, y1, y2};
        if (i == 0 && j == 0 && k == 0) {
          row += f(y) * (unit_cube_inverse_distance * h * h + C(0.0, 1.0) * q * cell) / four_pi;
          continue;
        }
        const double rho = std::sqrt(dx * dx + dy * dy + dz * dz);
        row += std::exp(C(0.0, 1.0) * q * rho) / (four_pi * rho) * f(y);
      }
      sum += row;
    }
  }
  return sum * cell;
}

} // namespace oracle

#endif
