#ifndef CUSHARP_BOUNDARY_HPP_
#define CUSHARP_BOUNDARY_HPP_

#include "aaad/grid.hpp"
#include "aaad/types.hpp"

namespace aaad {

enum class BCKind { Periodic, Free, SolidWall, Dirichlet };

struct SideBC {
  BCKind kind = BCKind::Periodic;
  Prim state;  // Dirichlet only
};

struct BCSet {
  SideBC xlo, xhi, ylo, yhi;
};

// Refreshes the ghost layers of U: x sides first over interior rows, then y
// sides over full padded rows so corners inherit the x-extended values.
// Periodic wraps; Free copies the adjacent interior cell; SolidWall mirrors
// the interior with the wall-normal momentum negated; Dirichlet pins the
// prescribed state.
void fill_ghosts(Field& U, const BCSet& bc, const GasModel& gas);

}  // namespace aaad

#endif  // CUSHARP_BOUNDARY_HPP_
