#ifndef CUSHARP_GRID_HPP_
#define CUSHARP_GRID_HPP_

// Uniform structured grids with ghost padding, and the flat state field
// stored row-major (x fastest), components interleaved per cell.

#include <cassert>
#include <vector>

#include "aaad/types.hpp"

namespace aaad {

struct GridSpec {
  int dim = 1;
  int nx = 0, ny = 1;
  int ghost = 2;
  double xmin = 0.0, xmax = 1.0;
  double ymin = 0.0, ymax = 1.0;

  double dx() const { return (xmax - xmin) / nx; }
  double dy() const { return dim == 2 ? (ymax - ymin) / ny : 1.0; }
  double x_center(long i) const { return xmin + (i + 0.5) * dx(); }
  double y_center(long j) const { return dim == 2 ? ymin + (j + 0.5) * dy() : 0.0; }

  int ghost_y() const { return dim == 2 ? ghost : 0; }
  long pad_nx() const { return nx + 2L * ghost; }
  long pad_ny() const { return ny + 2L * ghost_y(); }
  long pad_cells() const { return pad_nx() * pad_ny(); }
  int ncomp() const { return dim + 2; }
};

// Interior indices run i in [0,nx), j in [0,ny); ghosts reach i in
// [-ghost, nx+ghost) and likewise in y for 2-D fields.
struct Field {
  GridSpec grid;
  int ncomp = 0;
  std::vector<double> data;

  Field() = default;
  explicit Field(const GridSpec& g, int nc = 0)
      : grid(g), ncomp(nc ? nc : g.ncomp()), data(g.pad_cells() * ncomp, 0.0) {}

  long cell_index(long i, long j = 0) const {
    return (j + grid.ghost_y()) * grid.pad_nx() + (i + grid.ghost);
  }
  double* cell(long i, long j = 0) { return data.data() + cell_index(i, j) * ncomp; }
  const double* cell(long i, long j = 0) const {
    return data.data() + cell_index(i, j) * ncomp;
  }
  double& at(long i, long j, int c) { return cell(i, j)[c]; }
  double at(long i, long j, int c) const { return cell(i, j)[c]; }
};

// Padded scalar companion (pressure scratch, class fields use uint8).
struct ScalarField {
  GridSpec grid;
  std::vector<double> data;
  ScalarField() = default;
  explicit ScalarField(const GridSpec& g) : grid(g), data(g.pad_cells(), 0.0) {}
  long cell_index(long i, long j = 0) const {
    return (j + grid.ghost_y()) * grid.pad_nx() + (i + grid.ghost);
  }
  double& at(long i, long j = 0) { return data[cell_index(i, j)]; }
  double at(long i, long j = 0) const { return data[cell_index(i, j)]; }
};

struct ClassField {
  GridSpec grid;
  std::vector<std::uint8_t> data;
  ClassField() = default;
  explicit ClassField(const GridSpec& g) : grid(g), data(g.pad_cells(), 0) {}
  long cell_index(long i, long j = 0) const {
    return (j + grid.ghost_y()) * grid.pad_nx() + (i + grid.ghost);
  }
  std::uint8_t& at(long i, long j = 0) { return data[cell_index(i, j)]; }
  std::uint8_t at(long i, long j = 0) const { return data[cell_index(i, j)]; }
};

}  // namespace aaad

#endif  // CUSHARP_GRID_HPP_
