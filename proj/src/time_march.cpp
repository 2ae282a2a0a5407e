#include "aaad/time_march.hpp"

#include <algorithm>
#include <cmath>

#include "aaad/euler.hpp"

namespace aaad {

double stable_dt(const Field& U, const GasModel& gas, double cfl, ExecMode exec,
                 double* min_rho, double* min_p) {
  const GridSpec& g = U.grid;
  const long n = static_cast<long>(g.nx) * (g.dim == 2 ? g.ny : 1);
  const int nc = U.ncomp;

  auto prim_of = [&](long lin, Prim* w) {
    long i = lin % g.nx;
    long j = lin / g.nx;
    const double* c = U.cell(i, j);
    w->rho = c[kRho];
    w->u = c[kMomX] / w->rho;
    w->v = nc == 4 ? c[kMomY] / w->rho : 0.0;
    w->p = (gas.gamma - 1.0) *
           (c[nc - 1] - 0.5 * w->rho * (w->u * w->u + w->v * w->v));
  };

  // Invalid cells poison the speed so the caller takes a null step and the
  // next RHS evaluation reports the precise cell.
  double sx = max_over_indices(exec, n, 0.0, [&](long lin) {
    Prim w;
    prim_of(lin, &w);
    if (!(w.rho > 0.0) || !(w.p > 0.0)) return 1e300;
    return std::fabs(w.u) + sound_speed(w.rho, w.p, gas);
  });
  double sy = 0.0;
  if (g.dim == 2) {
    sy = max_over_indices(exec, n, 0.0, [&](long lin) {
      Prim w;
      prim_of(lin, &w);
      if (!(w.rho > 0.0) || !(w.p > 0.0)) return 1e300;
      return std::fabs(w.v) + sound_speed(w.rho, w.p, gas);
    });
  }
  if (min_rho) {
    *min_rho = -max_over_indices(exec, n, -1e300, [&](long lin) {
      long i = lin % g.nx;
      return -U.cell(i, lin / g.nx)[kRho];
    });
  }
  if (min_p) {
    *min_p = -max_over_indices(exec, n, -1e300, [&](long lin) {
      Prim w;
      prim_of(lin, &w);
      return -w.p;
    });
  }

  double dt = cfl * g.dx() / sx;
  if (g.dim == 2) dt = std::min(dt, cfl * g.dy() / sy);
  return dt;
}

TimeMarcher::TimeMarcher(const GridSpec& grid, const GasModel& gas, const BCSet& bc,
                         const SchemeSettings& scheme, SourceKind source,
                         const MarchOptions& opts)
    : gas_(gas),
      opts_(opts),
      order_(scheme_order(scheme.kind)),
      rhs_(grid, gas, bc, scheme, source),
      u1_(grid),
      u2_(grid),
      k_(grid) {}

void TimeMarcher::step(Field& U, double t, double dt) {
  const GridSpec& g = rhs_.grid();
  const long n = static_cast<long>(g.nx) * (g.dim == 2 ? g.ny : 1);
  const int nc = U.ncomp;
  const ExecMode exec = rhs_.scheme().exec;

  auto cell = [&](Field& f, long lin) {
    return f.cell(lin % g.nx, lin / g.nx);
  };

  rhs_.eval(U, t, 1, k_);
  for_each_index(exec, n, [&](long lin) {
    const double* u0 = cell(U, lin);
    const double* k = cell(k_, lin);
    double* u1 = cell(u1_, lin);
    for (int c = 0; c < nc; ++c) u1[c] = u0[c] + dt * k[c];
  });

  rhs_.eval(u1_, t + dt, 2, k_);
  for_each_index(exec, n, [&](long lin) {
    const double* u0 = cell(U, lin);
    const double* u1 = cell(u1_, lin);
    const double* k = cell(k_, lin);
    double* u2 = cell(u2_, lin);
    for (int c = 0; c < nc; ++c)
      u2[c] = 0.75 * u0[c] + 0.25 * (u1[c] + dt * k[c]);
  });

  rhs_.eval(u2_, t + 0.5 * dt, 3, k_);
  for_each_index(exec, n, [&](long lin) {
    const double* u2 = cell(u2_, lin);
    const double* k = cell(k_, lin);
    double* u0 = cell(U, lin);
    for (int c = 0; c < nc; ++c)
      u0[c] = (1.0 / 3.0) * u0[c] + (2.0 / 3.0) * (u2[c] + dt * k[c]);
  });
}

MarchStats TimeMarcher::advance(Field& U, double t0, double t_target) {
  const GridSpec& g = rhs_.grid();
  const ExecMode exec = rhs_.scheme().exec;
  MarchStats st;

  double cap = 1e300;
  if (opts_.accuracy_mode) {
    double h = g.dim == 2 ? std::min(g.dx(), g.dy()) : g.dx();
    cap = opts_.dt_cap_k * std::pow(h, 5.0 / 3.0);
  }

  if (!(t_target > t0)) {
    stable_dt(U, gas_, opts_.cfl, exec, &st.min_rho, &st.min_p);
    return st;
  }

  double t = t0;
  st.min_rho = 1e300;
  st.min_p = 1e300;
  while (t < t_target) {
    double mr, mp;
    double dt = stable_dt(U, gas_, opts_.cfl, exec, &mr, &mp);
    st.min_rho = std::min(st.min_rho, mr);
    st.min_p = std::min(st.min_p, mp);
    dt = std::min(dt, cap);
    bool last = false;
    if (dt >= t_target - t) {
      dt = t_target - t;
      last = true;
    }
    step(U, t, dt);
    ++st.steps;
    st.last_dt = dt;
    t = last ? t_target : t + dt;
    if (st.steps > opts_.max_steps) {
      FailureInfo info;
      info.kind = "StepLimit";
      info.time = t;
      throw SolverError(info, "step limit exceeded before reaching target time");
    }
  }
  return st;
}

}  // namespace aaad
