#ifndef CUSHARP_CU_FLUX_HPP_
#define CUSHARP_CU_FLUX_HPP_

// Central-upwind numerical flux with the built-in anti-diffusion term:
//
//   F = [a+ F(U-) - a- F(U+)]/(a+ - a-) + [a+ a-/(a+ - a-)] (U+ - U- - q)
//   q = minmod(U+ - U*, U* - U-),  componentwise
//   U* = [a+ U+ - a- U- - (F(U+) - F(U-))]/(a+ - a-)
//
// a+ / a- are the one-sided bounds max(u+c, 0) / min(u-c, 0) over the two
// reconstructed interface states. When a+ - a- degenerates (both states at
// rest relative to the interface), falls back to the central average flux
// with q = 0.

#include <cmath>

#include "aaad/euler.hpp"
#include "aaad/reconstruct.hpp"
#include "aaad/types.hpp"

namespace aaad {

struct LocalSpeeds {
  double ap = 0.0, am = 0.0;
};

inline LocalSpeeds local_speeds(const Prim& wm, const Prim& wp, const GasModel& gas) {
  double cm = sound_speed(wm.rho, wm.p, gas);
  double cp = sound_speed(wp.rho, wp.p, gas);
  LocalSpeeds s;
  s.ap = std::fmax(std::fmax(wm.u + cm, wp.u + cp), 0.0);
  s.am = std::fmin(std::fmin(wm.u - cm, wp.u - cp), 0.0);
  return s;
}

inline bool speeds_degenerate(const LocalSpeeds& s) {
  return s.ap - s.am < 1e-10 * std::fmax(1.0, std::fmax(s.ap, -s.am));
}

// Intermediate state and limited correction q; valid only when the speeds
// are non-degenerate.
template <int N>
inline void builtin_ad_term(const double* Um, const double* Up, const double* Fm,
                            const double* Fp, const LocalSpeeds& s, double* q,
                            double* ustar_out = nullptr) {
  double inv = 1.0 / (s.ap - s.am);
  for (int c = 0; c < N; ++c) {
    double ustar = (s.ap * Up[c] - s.am * Um[c] - (Fp[c] - Fm[c])) * inv;
    q[c] = minmod(Up[c] - ustar, ustar - Um[c]);
    if (ustar_out) ustar_out[c] = ustar;
  }
}

// Flux from already-validated interface states and their primitives.
template <int N>
inline void cu_numerical_flux(const double* Um, const double* Up, const Prim& wm,
                              const Prim& wp, const GasModel& gas, double* flux) {
  double Fm[N], Fp[N];
  flux_x<N>(Um, wm, Fm);
  flux_x<N>(Up, wp, Fp);

  LocalSpeeds s = local_speeds(wm, wp, gas);
  if (speeds_degenerate(s)) {
    for (int c = 0; c < N; ++c) flux[c] = 0.5 * (Fm[c] + Fp[c]);
    return;
  }

  double q[N];
  builtin_ad_term<N>(Um, Up, Fm, Fp, s, q);

  double inv = 1.0 / (s.ap - s.am);
  double visc = s.ap * s.am * inv;
  for (int c = 0; c < N; ++c) {
    flux[c] = (s.ap * Fm[c] - s.am * Fp[c]) * inv + visc * (Up[c] - Um[c] - q[c]);
  }
}

// Checked variant for callers outside the hot loops.
template <int N>
inline bool cu_numerical_flux_checked(const double* Um, const double* Up,
                                      const GasModel& gas, double* flux) {
  Prim wm, wp;
  if (!primitive_from_conserved<N>(Um, gas, &wm)) return false;
  if (!primitive_from_conserved<N>(Up, gas, &wp)) return false;
  cu_numerical_flux<N>(Um, Up, wm, wp, gas, flux);
  return true;
}

}  // namespace aaad

#endif  // CUSHARP_CU_FLUX_HPP_
