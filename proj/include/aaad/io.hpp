#ifndef CUSHARP_IO_HPP_
#define CUSHARP_IO_HPP_

#include <string>
#include <vector>

#include "aaad/grid.hpp"

namespace aaad {

// 1-D profiles: CSV with header "x,rho,u,p", full double precision.
void write_profile_csv(const std::string& path, const Field& U, const GasModel& gas);

struct Profile1D {
  std::vector<double> x, rho, u, p;
};
Profile1D read_profile_csv(const std::string& path);

// 2-D fields: plain structured text, "nx ny" header then row-major rho
// (one x-row per line); full_state appends u, v, p blocks in the same layout.
void write_structured_2d(const std::string& path, const Field& U, const GasModel& gas,
                         bool full_state);

struct Structured2D {
  int nx = 0, ny = 0;
  std::vector<double> rho;  // row-major, then optional u, v, p
  std::vector<double> u, v, p;
};
Structured2D read_structured_2d(const std::string& path);

// Legacy VTK structured-points file with rho (and optionally u,v,p) as
// cell-center point data.
void write_vtk_2d(const std::string& path, const Field& U, const GasModel& gas,
                  bool full_state);

}  // namespace aaad

#endif  // CUSHARP_IO_HPP_
