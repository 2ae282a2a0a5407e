#ifndef CUSHARP_RECONSTRUCT_HPP_
#define CUSHARP_RECONSTRUCT_HPP_

// Interface-value reconstruction on (characteristic) scalars:
//   - minmod-limited piecewise-linear MUSCL for the second-order path,
//   - fifth-order WENO-Z *interpolation* (point values, not cell-average
//     reconstruction) for the A-WENO path.

#include <cmath>
#include <cstddef>

namespace aaad {

inline double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return a < b ? a : b;
  if (a < 0.0 && b < 0.0) return a > b ? a : b;
  return 0.0;
}

inline double minmod(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::fmin(a, std::fmin(b, c));
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::fmax(a, std::fmax(b, c));
  return 0.0;
}

inline double minmod(const double* z, std::size_t n) {
  if (n == 0) return 0.0;
  double lo = z[0], hi = z[0];
  for (std::size_t i = 1; i < n; ++i) {
    lo = std::fmin(lo, z[i]);
    hi = std::fmax(hi, z[i]);
  }
  if (lo > 0.0) return lo;
  if (hi < 0.0) return hi;
  return 0.0;
}

// Limited slope of the cell holding g0, with neighbors g_m (left), g_p (right):
// minmod( theta (g0-g_m)/dx, (g_p-g_m)/(2 dx), theta (g_p-g0)/dx ).
inline double muscl_slope(double g_m, double g0, double g_p, double theta, double dx) {
  return minmod(theta * (g0 - g_m) / dx, 0.5 * (g_p - g_m) / dx, theta * (g_p - g0) / dx);
}

// One-sided interface values at the interface between cells holding g0 and g1.
// g = (g_mm, g0, g1, g_pp) are the four cells centered on that interface.
// minus: from the left cell; plus: from the right cell.
inline void muscl_interface(const double g[4], double theta, double dx,
                            double* minus, double* plus) {
  double s0 = muscl_slope(g[0], g[1], g[2], theta, dx);
  double s1 = muscl_slope(g[1], g[2], g[3], theta, dx);
  *minus = g[1] + 0.5 * dx * s0;
  *plus = g[2] - 0.5 * dx * s1;
}

struct WenoParams {
  double eps = 1e-12;
  int p = 2;
};

namespace detail {
inline double weno_alpha(double d, double beta, double tau, const WenoParams& wp) {
  double r = tau / (beta + wp.eps);
  double rp = r;
  for (int k = 1; k < wp.p; ++k) rp *= r;
  return d * (1.0 + rp);
}
}  // namespace detail

// Left-biased fifth-order WENO-Z interpolant at x_{j+1/2}.
// g = (g_{j-2}, g_{j-1}, g_j, g_{j+1}, g_{j+2}).
inline double wenoz_minus(const double g[5], const WenoParams& wp = {}) {
  // Quadratic sub-stencil interpolants evaluated at the right face of cell j.
  double p0 = 0.375 * g[0] - 1.25 * g[1] + 1.875 * g[2];
  double p1 = -0.125 * g[1] + 0.75 * g[2] + 0.375 * g[3];
  double p2 = 0.375 * g[2] + 0.75 * g[3] - 0.125 * g[4];

  double b0 = (13.0 / 12.0) * (g[0] - 2.0 * g[1] + g[2]) * (g[0] - 2.0 * g[1] + g[2]) +
              0.25 * (g[0] - 4.0 * g[1] + 3.0 * g[2]) * (g[0] - 4.0 * g[1] + 3.0 * g[2]);
  double b1 = (13.0 / 12.0) * (g[1] - 2.0 * g[2] + g[3]) * (g[1] - 2.0 * g[2] + g[3]) +
              0.25 * (g[1] - g[3]) * (g[1] - g[3]);
  double b2 = (13.0 / 12.0) * (g[2] - 2.0 * g[3] + g[4]) * (g[2] - 2.0 * g[3] + g[4]) +
              0.25 * (3.0 * g[2] - 4.0 * g[3] + g[4]) * (3.0 * g[2] - 4.0 * g[3] + g[4]);

  double tau = std::fabs(b2 - b0);
  double a0 = detail::weno_alpha(1.0 / 16.0, b0, tau, wp);
  double a1 = detail::weno_alpha(5.0 / 8.0, b1, tau, wp);
  double a2 = detail::weno_alpha(5.0 / 16.0, b2, tau, wp);
  // Outer-pair-first grouping keeps the sums exact under data reversal.
  double inv = 1.0 / ((a0 + a2) + a1);
  return inv * ((a0 * p0 + a2 * p2) + a1 * p1);
}

// Right-biased mirror image at the same interface.
// g = (g_{j-1}, g_j, g_{j+1}, g_{j+2}, g_{j+3}); written out explicitly so the
// mirror-symmetry test against wenoz_minus on reversed data is a real check.
inline double wenoz_plus(const double g[5], const WenoParams& wp = {}) {
  double p0 = 0.375 * g[4] - 1.25 * g[3] + 1.875 * g[2];
  double p1 = -0.125 * g[3] + 0.75 * g[2] + 0.375 * g[1];
  double p2 = 0.375 * g[2] + 0.75 * g[1] - 0.125 * g[0];

  double b0 = (13.0 / 12.0) * (g[4] - 2.0 * g[3] + g[2]) * (g[4] - 2.0 * g[3] + g[2]) +
              0.25 * (g[4] - 4.0 * g[3] + 3.0 * g[2]) * (g[4] - 4.0 * g[3] + 3.0 * g[2]);
  double b1 = (13.0 / 12.0) * (g[3] - 2.0 * g[2] + g[1]) * (g[3] - 2.0 * g[2] + g[1]) +
              0.25 * (g[3] - g[1]) * (g[3] - g[1]);
  double b2 = (13.0 / 12.0) * (g[2] - 2.0 * g[1] + g[0]) * (g[2] - 2.0 * g[1] + g[0]) +
              0.25 * (3.0 * g[2] - 4.0 * g[1] + g[0]) * (3.0 * g[2] - 4.0 * g[1] + g[0]);

  double tau = std::fabs(b2 - b0);
  double a0 = detail::weno_alpha(1.0 / 16.0, b0, tau, wp);
  double a1 = detail::weno_alpha(5.0 / 8.0, b1, tau, wp);
  double a2 = detail::weno_alpha(5.0 / 16.0, b2, tau, wp);
  double inv = 1.0 / ((a0 + a2) + a1);
  return inv * ((a0 * p0 + a2 * p2) + a1 * p1);
}

}  // namespace aaad

#endif  // CUSHARP_RECONSTRUCT_HPP_
