#ifndef CUSHARP_PROBLEMS_HPP_
#define CUSHARP_PROBLEMS_HPP_

// Registry of the benchmark problems: domain, gas, boundary conditions,
// final time, per-scheme default adaptation constants, the paper-resolution
// default mesh, and the initial primitive state sampled at cell centers.

#include <functional>
#include <string>
#include <vector>

#include "aaad/boundary.hpp"
#include "aaad/grid.hpp"
#include "aaad/rhs.hpp"

namespace aaad {

struct ProblemSpec {
  std::string name;
  std::string description;
  int dim = 1;
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  double gamma = 1.4;
  double t_final = 1.0;
  int default_nx = 100, default_ny = 1;
  double c_default_order2 = 0.0;
  double c_default_order5 = 0.0;
  BCSet bc;
  SourceKind source = SourceKind::None;
  std::function<Prim(double x, double y)> init;
  // Closed-form solution when available (x, y, t) -> primitive; null otherwise.
  std::function<Prim(double x, double y, double t)> exact;
};

const std::vector<ProblemSpec>& problem_registry();

// Throws ConfigError("UnknownProblem: ...") for unregistered names.
const ProblemSpec& find_problem(const std::string& name);

// Cell-center point sampling of the initial state into a conserved field.
Field initialize(const ProblemSpec& prob, const GridSpec& grid);

GridSpec make_grid(const ProblemSpec& prob, int nx, int ny, int ghost);

}  // namespace aaad

#endif  // CUSHARP_PROBLEMS_HPP_
