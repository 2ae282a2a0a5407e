#ifndef CUSHARP_ADAPTIVE_HPP_
#define CUSHARP_ADAPTIVE_HPP_

// Adaptive artificial anti-diffusion: smoothness indicators on density and
// pressure classify each cell as Smooth, Rough, or RoughContact; the class
// pair at an interface selects the strength C(j+1/2), and the correction
//
//   F_AD = F_base - Q dU/dx,   Q = R diag(Lsel) R^-1
//
// places the *negative* (anti-diffusive) eigenvalue -C(j+1/2) in the
// linearly degenerate contact slot(s): slot 1 in 1-D, slots 1 and 2 in 2-D.
// Equivalently F_AD = F_base + (C/dx) R (sel o R^-1 dU), which is how the
// hot path applies it.
//
// dU is the cell jump U_{j+1} - U_j, gated per contact slot: the slot keeps
// its full jump only while both neighbor jumps carry the same strict sign.
// An ungated jump turns the correction into a mass conveyor whose end cells
// leak without bound: the interface feeding a plateau keeps pumping while
// the interface behind it has nothing to resupply, so the foot cell drains
// to vacuum. The gate cuts the flux the moment a cell crosses its neighbor's
// level (the sign flips), so a sharpening burst moves at most about one
// step's worth of mass past the level, an overshoot that scales with C and
// the CFL number. That keeps the tuning behavior: small C sharpens cleanly,
// large C rings visibly, and nothing drains to vacuum.

#include <cstdint>

#include "aaad/euler.hpp"
#include "aaad/reconstruct.hpp"

namespace aaad {

enum CellClass : std::uint8_t { kSmooth = 0, kRough = 1, kRoughContact = 2 };

// Normalized local indicator: minmod of the one-sided differences over the
// three-cell max. Zero at plateaus and at sharp two-cell jumps; peaks at the
// middle of a smeared jump.
inline double smoothness_indicator(double f_m, double f0, double f_p) {
  double m = std::fmax(f_m, std::fmax(f0, f_p));
  return minmod(f_p - f0, f0 - f_m) / m;
}

// Strength tiers. Order 2 has two tiers only; order 5 adds the O(dx^5)
// smooth-region floor.
inline double ad_coefficient(CellClass left, CellClass right, double c_const, double dx,
                             int order) {
  CellClass worst = left > right ? left : right;
  if (worst == kRoughContact) return c_const * dx;
  if (order == 2) return c_const * dx * dx;
  if (worst == kRough) return c_const * dx * dx;
  double dx2 = dx * dx;
  return c_const * dx2 * dx2 * dx;
}

template <int N>
inline constexpr int degenerate_lo() { return 1; }
template <int N>
inline constexpr int degenerate_hi() { return N == 3 ? 1 : 2; }

// Full matrix form, used by the oracle tests and not by the hot path.
template <int N>
inline void ad_matrix(const Eigensystem<N>& es, double c_iface, double Q[N][N]) {
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      double s = 0.0;
      for (int k = degenerate_lo<N>(); k <= degenerate_hi<N>(); ++k)
        s += es.r[r][k] * (-c_iface) * es.ri[k][c];
      Q[r][c] = s;
    }
}

// In-place flux correction at the interface between Ul and Ur, with Ull and
// Urr the next cells out: flux += (C/dx) R (sel o limited jump).
// C == 0 leaves the flux bitwise untouched, so the base schemes are the
// exact C=0 limit.
template <int N>
inline void apply_ad(const Eigensystem<N>& es, double c_iface, double dx,
                     const double* Ull, const double* Ul, const double* Ur,
                     const double* Urr, double* flux) {
  if (c_iface == 0.0) return;
  double dm[N], dc[N], dp[N];
  for (int c = 0; c < N; ++c) {
    dm[c] = Ul[c] - Ull[c];
    dc[c] = Ur[c] - Ul[c];
    dp[c] = Urr[c] - Ur[c];
  }
  double wm[N], wc[N], wp[N];
  project_characteristic<N>(es, dm, wm);
  project_characteristic<N>(es, dc, wc);
  project_characteristic<N>(es, dp, wp);
  double scale = c_iface / dx;
  for (int c = 0; c < N; ++c) {
    double s = 0.0;
    for (int k = degenerate_lo<N>(); k <= degenerate_hi<N>(); ++k)
      if (wm[k] * wc[k] > 0.0 && wc[k] * wp[k] > 0.0) s += es.r[c][k] * wc[k];
    flux[c] += scale * s;
  }
}

}  // namespace aaad

#endif  // CUSHARP_ADAPTIVE_HPP_
