#ifndef CUSHARP_METRICS_HPP_
#define CUSHARP_METRICS_HPP_

// Error norms, inter-mesh restriction, Runge error/rate estimates, and the
// contact-width / overshoot diagnostics used by the benchmark harness.

#include <vector>

#include "aaad/grid.hpp"

namespace aaad {

// L1 distance of one component between two same-shape fields:
// sum |a-b| dx (dy). Throws ConfigError("ShapeMismatch...") otherwise.
double l1_error(const Field& a, const Field& b, int comp);

// Restriction of a field on a 2x-refined grid onto the coarse grid.
// Cell-centered factor-2 grids share no centers, so "restricting" means:
//  - average: exact pairwise (quad in 2-D) cell-average projection, used for
//    the finite-volume (order-2) solutions;
//  - midpoint6: 6th-order symmetric interpolation to the coarse center,
//    weights (3,-25,150,150,-25,3)/256, used for the finite-difference
//    (order-5) point-value solutions. O(h^6) error, below the scheme error.
//    Periodic index wrap; clamped at non-periodic edges.
enum class Restriction { Average, Midpoint6 };
Field restrict_half(const Field& fine, Restriction kind, bool periodic);

struct RungeEstimate {
  double error = 0.0;
  double rate = 0.0;
};

// Error(dx) ~ d12^2/|d12-d24|, Rate ~ log2(d24/d12); d12 = ||u_dx - u_2dx||,
// d24 = ||u_2dx - u_4dx||. Throws ConfigError("DegenerateDeltas...") when the
// deltas cannot support the estimate.
RungeEstimate runge_error_rate(double d12, double d24);

// Number of cells of `rho` strictly inside the inner 80% band of the jump
// between the plateau values (rho_lo + 0.1 jump, rho_lo + 0.9 jump).
// Throws ConfigError("NoTransitionFound...") if no cell crosses the band.
int contact_width(const std::vector<double>& rho, double rho_left, double rho_right);

// Largest excursion beyond the plateau envelope, normalized by the jump.
double plateau_overshoot(const std::vector<double>& rho, double rho_left,
                         double rho_right);

}  // namespace aaad

#endif  // CUSHARP_METRICS_HPP_
