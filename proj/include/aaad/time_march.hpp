#ifndef CUSHARP_TIME_MARCH_HPP_
#define CUSHARP_TIME_MARCH_HPP_

// Third-order strong-stability-preserving Runge-Kutta marching with the
// CFL-limited step and the optional dt <= k dx^(5/3) cap that balances the
// temporal and spatial error in fifth-order accuracy studies.

#include <functional>

#include "aaad/rhs.hpp"

namespace aaad {

struct MarchOptions {
  double cfl = 0.4;
  bool accuracy_mode = false;  // apply the dx^(5/3) cap (order-5 schemes)
  double dt_cap_k = 0.6;
  long max_steps = 50'000'000;
};

struct MarchStats {
  long steps = 0;
  double last_dt = 0.0;
  double min_rho = 0.0, min_p = 0.0;  // over interior cells, all steps
};

// Largest stable dt for the current state: cfl * min(dx/max(|u|+c),
// dy/max(|v|+c)) over interior cells. Also reports the state's min rho / p.
double stable_dt(const Field& U, const GasModel& gas, double cfl, ExecMode exec,
                 double* min_rho = nullptr, double* min_p = nullptr);

class TimeMarcher {
 public:
  TimeMarcher(const GridSpec& grid, const GasModel& gas, const BCSet& bc,
              const SchemeSettings& scheme, SourceKind source,
              const MarchOptions& opts);

  // Advances U in place from t0 to t_target, landing on t_target exactly.
  MarchStats advance(Field& U, double t0, double t_target);

  // One SSP-RK3 step of size dt (already clipped by the caller).
  void step(Field& U, double t, double dt);

  RhsEvaluator& rhs() { return rhs_; }

 private:
  GasModel gas_;
  MarchOptions opts_;
  int order_;
  RhsEvaluator rhs_;
  Field u1_, u2_, k_;
};

}  // namespace aaad

#endif  // CUSHARP_TIME_MARCH_HPP_
