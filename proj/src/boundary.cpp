#include "aaad/boundary.hpp"

#include "aaad/euler.hpp"

namespace aaad {

namespace {

// Writes the Dirichlet state once; 1-D fields have no kMomY slot.
void conserved_of(const Prim& w, const GasModel& gas, int ncomp, double* out) {
  if (ncomp == 3) {
    conserved_from_primitive<3>(w, gas, out);
  } else {
    conserved_from_primitive<4>(w, gas, out);
  }
}

}  // namespace

void fill_ghosts(Field& U, const BCSet& bc, const GasModel& gas) {
  const GridSpec& g = U.grid;
  const int nc = U.ncomp;
  const int G = g.ghost;

  double xlo_state[4], xhi_state[4], ylo_state[4], yhi_state[4];
  if (bc.xlo.kind == BCKind::Dirichlet) conserved_of(bc.xlo.state, gas, nc, xlo_state);
  if (bc.xhi.kind == BCKind::Dirichlet) conserved_of(bc.xhi.state, gas, nc, xhi_state);
  if (bc.ylo.kind == BCKind::Dirichlet) conserved_of(bc.ylo.state, gas, nc, ylo_state);
  if (bc.yhi.kind == BCKind::Dirichlet) conserved_of(bc.yhi.state, gas, nc, yhi_state);

  // x sides over interior rows.
  for (long j = 0; j < g.ny; ++j) {
    for (int k = 1; k <= G; ++k) {
      double* lo = U.cell(-k, j);
      double* hi = U.cell(g.nx - 1 + k, j);
      switch (bc.xlo.kind) {
        case BCKind::Periodic:
          for (int c = 0; c < nc; ++c) lo[c] = U.at(g.nx - k, j, c);
          break;
        case BCKind::Free:
          for (int c = 0; c < nc; ++c) lo[c] = U.at(0, j, c);
          break;
        case BCKind::SolidWall:
          for (int c = 0; c < nc; ++c) lo[c] = U.at(k - 1, j, c);
          lo[kMomX] = -lo[kMomX];
          break;
        case BCKind::Dirichlet:
          for (int c = 0; c < nc; ++c) lo[c] = xlo_state[c];
          break;
      }
      switch (bc.xhi.kind) {
        case BCKind::Periodic:
          for (int c = 0; c < nc; ++c) hi[c] = U.at(k - 1, j, c);
          break;
        case BCKind::Free:
          for (int c = 0; c < nc; ++c) hi[c] = U.at(g.nx - 1, j, c);
          break;
        case BCKind::SolidWall:
          for (int c = 0; c < nc; ++c) hi[c] = U.at(g.nx - k, j, c);
          hi[kMomX] = -hi[kMomX];
          break;
        case BCKind::Dirichlet:
          for (int c = 0; c < nc; ++c) hi[c] = xhi_state[c];
          break;
      }
    }
  }

  if (g.dim == 1) return;

  // y sides over full padded rows so corners pick up the x-extended values.
  for (long i = -G; i < g.nx + G; ++i) {
    for (int k = 1; k <= G; ++k) {
      double* lo = U.cell(i, -k);
      double* hi = U.cell(i, g.ny - 1 + k);
      switch (bc.ylo.kind) {
        case BCKind::Periodic:
          for (int c = 0; c < nc; ++c) lo[c] = U.at(i, g.ny - k, c);
          break;
        case BCKind::Free:
          for (int c = 0; c < nc; ++c) lo[c] = U.at(i, 0, c);
          break;
        case BCKind::SolidWall:
          for (int c = 0; c < nc; ++c) lo[c] = U.at(i, k - 1, c);
          lo[kMomY] = -lo[kMomY];
          break;
        case BCKind::Dirichlet:
          for (int c = 0; c < nc; ++c) lo[c] = ylo_state[c];
          break;
      }
      switch (bc.yhi.kind) {
        case BCKind::Periodic:
          for (int c = 0; c < nc; ++c) hi[c] = U.at(i, k - 1, c);
          break;
        case BCKind::Free:
          for (int c = 0; c < nc; ++c) hi[c] = U.at(i, g.ny - 1, c);
          break;
        case BCKind::SolidWall:
          for (int c = 0; c < nc; ++c) hi[c] = U.at(i, g.ny - k, c);
          hi[kMomY] = -hi[kMomY];
          break;
        case BCKind::Dirichlet:
          for (int c = 0; c < nc; ++c) hi[c] = yhi_state[c];
          break;
      }
    }
  }
}

}  // namespace aaad
