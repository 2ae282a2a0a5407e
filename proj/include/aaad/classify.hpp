#ifndef CUSHARP_CLASSIFY_HPP_
#define CUSHARP_CLASSIFY_HPP_

// Cell classification for the adaptive anti-diffusion: density and pressure
// smoothness indicators are scanned per grid direction; a cell whose density
// indicator peaks above both neighbors by the margin eps0 marks itself and
// its neighbors Rough, and RoughContact when the pressure indicator does not
// peak with it. Flag accumulation then a gather resolve keeps the marking
// order-independent.

#include <cstdint>
#include <vector>

#include "aaad/grid.hpp"
#include "aaad/parallel.hpp"

namespace aaad {

struct LineClassScratch {
  std::vector<double> s_rho, s_p;
  std::vector<std::uint8_t> rough, contact;
};

// direction: 0 = x (rows), 1 = y (columns, 2-D only). p holds per-cell
// pressures on the same padding. Ghost cells come out Smooth.
void classify_field(const Field& U, const ScalarField& p, int direction, double eps0,
                    ExecMode exec, ClassField& cls);

// Single padded line, for tests and diagnostics: rho/p are padded arrays
// with `ghost` cells on each end; returns one class per padded cell.
std::vector<std::uint8_t> classify_profile(const std::vector<double>& rho,
                                           const std::vector<double>& p, int ghost,
                                           double eps0);

}  // namespace aaad

#endif  // CUSHARP_CLASSIFY_HPP_
