#ifndef CUSHARP_EULER_HPP_
#define CUSHARP_EULER_HPP_

// Compressible Euler core: ideal-gas EOS, physical fluxes, arithmetic
// interface averages and the characteristic eigensystems built on them.
// All functions are pure on small fixed-size states; field-level passes
// attach cell indices to any failure they detect.

#include <cmath>

#include "aaad/types.hpp"

namespace aaad {

// p = (gamma-1) (E - rho |u|^2 / 2). Returns false on rho<=0 / p<=0 / NaN.
template <int N>
inline bool primitive_from_conserved(const double* U, const GasModel& gas, Prim* w) {
  double rho = U[kRho];
  if (!(rho > 0.0)) return false;
  double u = U[kMomX] / rho;
  double v = (N == 4) ? U[kMomY] / rho : 0.0;
  double E = U[kEner<N>];
  double p = (gas.gamma - 1.0) * (E - 0.5 * rho * (u * u + v * v));
  if (!(p > 0.0)) return false;
  w->rho = rho;
  w->u = u;
  w->v = v;
  w->p = p;
  return true;
}

template <int N>
inline void conserved_from_primitive(const Prim& w, const GasModel& gas, double* U) {
  U[kRho] = w.rho;
  U[kMomX] = w.rho * w.u;
  if (N == 4) U[kMomY] = w.rho * w.v;
  U[kEner<N>] = w.p / (gas.gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v);
}

inline double sound_speed(double rho, double p, const GasModel& gas) {
  return std::sqrt(gas.gamma * p / rho);
}

// x-directional flux; 1-D: (m, m u + p, u (E+p)), 2-D adds the m v slot.
template <int N>
inline void flux_x(const double* U, const Prim& w, double* F) {
  F[kRho] = U[kMomX];
  F[kMomX] = U[kMomX] * w.u + w.p;
  if (N == 4) F[kMomY] = U[kMomY] * w.u;
  F[kEner<N>] = w.u * (U[kEner<N>] + w.p);
}

// Convenience: recompute primitives, then the flux. Returns false if the
// state is unphysical.
template <int N>
inline bool flux_x_checked(const double* U, const GasModel& gas, double* F) {
  Prim w;
  if (!primitive_from_conserved<N>(U, gas, &w)) return false;
  flux_x<N>(U, w, F);
  return true;
}

// Arithmetic averages of the two cells' primitive values, then the derived
// E, H, phi, c of the averaged state. Fails (returns false) when the
// averaged state is unphysical or the sound speed degenerates.
template <int N>
inline bool interface_average(const double* UL, const double* UR, const GasModel& gas,
                              InterfaceAverage* a) {
  Prim wl, wr;
  if (!primitive_from_conserved<N>(UL, gas, &wl)) return false;
  if (!primitive_from_conserved<N>(UR, gas, &wr)) return false;
  a->rho = 0.5 * (wl.rho + wr.rho);
  a->u = 0.5 * (wl.u + wr.u);
  a->v = 0.5 * (wl.v + wr.v);
  a->p = 0.5 * (wl.p + wr.p);
  double q2 = a->u * a->u + a->v * a->v;
  a->E = a->p / (gas.gamma - 1.0) + 0.5 * a->rho * q2;
  a->H = (a->E + a->p) / a->rho;
  a->phi = 2.0 * a->H - q2;
  double c2 = gas.gamma * a->p / a->rho;
  if (!(c2 > 0.0)) return false;
  a->c = std::sqrt(c2);
  // Vacuum-like degeneracy guard: eigensystem scaling breaks down.
  if (a->c < 1e-12 * std::fmax(1.0, std::fabs(a->u) + std::fabs(a->v))) return false;
  return true;
}

// 3x3 eigensystem of the x-flux Jacobian at the averaged state.
// Columns of R / eigenvalues ascending: u-c, u, u+c.
inline void eigensystem_1d(const InterfaceAverage& a, Eigensystem<3>* es) {
  double u = a.u, c = a.c, H = a.H, phi = a.phi;
  double half_u2 = 0.5 * u * u;

  es->lambda[0] = u - c;
  es->lambda[1] = u;
  es->lambda[2] = u + c;

  es->r[0][0] = 1.0;     es->r[0][1] = 1.0;      es->r[0][2] = 1.0;
  es->r[1][0] = u - c;   es->r[1][1] = u;        es->r[1][2] = u + c;
  es->r[2][0] = H - u*c; es->r[2][1] = half_u2;  es->r[2][2] = H + u*c;

  double inv_phi = 1.0 / phi;
  double phi_2c = 0.5 * phi / c;
  es->ri[0][0] = inv_phi * (half_u2 + u * phi_2c);
  es->ri[0][1] = inv_phi * (-u - phi_2c);
  es->ri[0][2] = inv_phi;
  es->ri[1][0] = inv_phi * (2.0 * phi - 2.0 * H);
  es->ri[1][1] = inv_phi * (2.0 * u);
  es->ri[1][2] = inv_phi * (-2.0);
  es->ri[2][0] = inv_phi * (half_u2 - u * phi_2c);
  es->ri[2][1] = inv_phi * (-u + phi_2c);
  es->ri[2][2] = inv_phi;
}

// 4x4 eigensystem of the x-flux Jacobian. The repeated eigenvalue u carries
// the density jump (1, u, v, q^2/2) and the tangential velocity (0, 0, 1, v).
// Eigenvalues ascending: u-c, u, u, u+c.
inline void eigensystem_2d_x(const InterfaceAverage& a, Eigensystem<4>* es) {
  double u = a.u, v = a.v, c = a.c, H = a.H;
  double q2 = u * u + v * v;
  double b1 = 2.0 / a.phi;  // = (gamma-1)/c^2
  double b2 = 0.5 * b1 * q2;

  es->lambda[0] = u - c;
  es->lambda[1] = u;
  es->lambda[2] = u;
  es->lambda[3] = u + c;

  es->r[0][0] = 1.0;       es->r[0][1] = 1.0;      es->r[0][2] = 0.0; es->r[0][3] = 1.0;
  es->r[1][0] = u - c;     es->r[1][1] = u;        es->r[1][2] = 0.0; es->r[1][3] = u + c;
  es->r[2][0] = v;         es->r[2][1] = v;        es->r[2][2] = 1.0; es->r[2][3] = v;
  es->r[3][0] = H - u * c; es->r[3][1] = 0.5 * q2; es->r[3][2] = v;   es->r[3][3] = H + u * c;

  double inv_c = 1.0 / c;
  es->ri[0][0] = 0.5 * (b2 + u * inv_c);
  es->ri[0][1] = 0.5 * (-b1 * u - inv_c);
  es->ri[0][2] = 0.5 * (-b1 * v);
  es->ri[0][3] = 0.5 * b1;
  es->ri[1][0] = 1.0 - b2;
  es->ri[1][1] = b1 * u;
  es->ri[1][2] = b1 * v;
  es->ri[1][3] = -b1;
  es->ri[2][0] = -v;
  es->ri[2][1] = 0.0;
  es->ri[2][2] = 1.0;
  es->ri[2][3] = 0.0;
  es->ri[3][0] = 0.5 * (b2 - u * inv_c);
  es->ri[3][1] = 0.5 * (-b1 * u + inv_c);
  es->ri[3][2] = 0.5 * (-b1 * v);
  es->ri[3][3] = 0.5 * b1;
}

// y-direction eigensystem via the swap symmetry G(rho,mx,my,E) =
// swap23(F(rho,my,mx,E)): build the x-system at the swapped average, then
// swap rows 1<->2 of R and columns 1<->2 of R^-1.
inline void eigensystem_2d_y(const InterfaceAverage& a, Eigensystem<4>* es) {
  InterfaceAverage s = a;
  s.u = a.v;
  s.v = a.u;
  eigensystem_2d_x(s, es);
  for (int k = 0; k < 4; ++k) {
    double tmp = es->r[kMomX][k];
    es->r[kMomX][k] = es->r[kMomY][k];
    es->r[kMomY][k] = tmp;
    tmp = es->ri[k][kMomX];
    es->ri[k][kMomX] = es->ri[k][kMomY];
    es->ri[k][kMomY] = tmp;
  }
}

// Characteristic projection w = R^-1 U and lift U = R w. Row sums run in
// fixed component order so mirror-image inputs produce exactly mirrored
// outputs (each summand flips sign consistently).
template <int N>
inline void project_characteristic(const Eigensystem<N>& es, const double* U, double* w) {
  for (int k = 0; k < N; ++k) {
    double s = 0.0;
    for (int c = 0; c < N; ++c) s += es.ri[k][c] * U[c];
    w[k] = s;
  }
}

template <int N>
inline void lift_characteristic(const Eigensystem<N>& es, const double* w, double* U) {
  for (int c = 0; c < N; ++c) {
    double s = 0.0;
    for (int k = 0; k < N; ++k) s += es.r[c][k] * w[k];
    U[c] = s;
  }
}

// Analytic x-flux Jacobians, used by the diagonalization oracles.
inline void jacobian_1d(const Prim& w, const GasModel& gas, double A[3][3]) {
  double g1 = gas.gamma - 1.0;
  double u = w.u;
  double E = w.p / g1 + 0.5 * w.rho * u * u;
  double H = (E + w.p) / w.rho;
  A[0][0] = 0.0;
  A[0][1] = 1.0;
  A[0][2] = 0.0;
  A[1][0] = 0.5 * (gas.gamma - 3.0) * u * u;
  A[1][1] = (3.0 - gas.gamma) * u;
  A[1][2] = g1;
  A[2][0] = -gas.gamma * u * E / w.rho + g1 * u * u * u;
  A[2][1] = H - g1 * u * u;
  A[2][2] = gas.gamma * u;
}

inline void jacobian_2d_x(const Prim& w, const GasModel& gas, double A[4][4]) {
  double g1 = gas.gamma - 1.0;
  double u = w.u, v = w.v;
  double q2 = u * u + v * v;
  double E = w.p / g1 + 0.5 * w.rho * q2;
  double H = (E + w.p) / w.rho;
  A[0][0] = 0.0;            A[0][1] = 1.0;              A[0][2] = 0.0;      A[0][3] = 0.0;
  A[1][0] = 0.5*g1*q2 - u*u; A[1][1] = (3.0-gas.gamma)*u; A[1][2] = -g1 * v; A[1][3] = g1;
  A[2][0] = -u * v;         A[2][1] = v;                A[2][2] = u;        A[2][3] = 0.0;
  A[3][0] = -gas.gamma*u*E/w.rho + g1*u*q2;
  A[3][1] = H - g1 * u * u;
  A[3][2] = -g1 * u * v;
  A[3][3] = gas.gamma * u;
}

}  // namespace aaad

#endif  // CUSHARP_EULER_HPP_
