#ifndef CUSHARP_RHS_HPP_
#define CUSHARP_RHS_HPP_

// Semi-discrete right-hand side: ghost fill, positivity-checked primitive
// pass, per-direction cell classification, per-interface flux assembly (one
// owner per interface slot, so OpenMP and serial runs agree bitwise), and
// the flux-difference tendency plus any source term.

#include <atomic>
#include <cstdint>
#include <vector>

#include "aaad/adaptive.hpp"
#include "aaad/boundary.hpp"
#include "aaad/grid.hpp"
#include "aaad/scheme.hpp"

namespace aaad {

enum class SourceKind { None, GravityY };  // GravityY: d(my)/dt += rho, dE/dt += my

// First-failure collector usable from parallel loops: keeps the smallest
// (cell-ordered) failure location so the report does not depend on the
// thread partitioning.
struct FailureSink {
  static constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::atomic<std::uint64_t> packed{kNone};

  void note(std::uint64_t order_key, std::uint8_t kind_code) {
    std::uint64_t key = (order_key << 8) | kind_code;
    std::uint64_t cur = packed.load(std::memory_order_relaxed);
    while (key < cur &&
           !packed.compare_exchange_weak(cur, key, std::memory_order_relaxed)) {
    }
  }
  bool failed() const { return packed.load(std::memory_order_relaxed) != kNone; }
  void reset() { packed.store(kNone, std::memory_order_relaxed); }
};

// Failure kind codes (low byte of the packed key).
enum : std::uint8_t {
  kFailDensityCell = 0,
  kFailPressureCell = 1,
  kFailDensityIface = 2,
  kFailPressureIface = 3,
  kFailAverage = 4,
};

const char* failure_kind_name(std::uint8_t code);

class RhsEvaluator {
 public:
  RhsEvaluator(const GridSpec& grid, const GasModel& gas, const BCSet& bc,
               const SchemeSettings& scheme, SourceKind source);

  // Refreshes U's ghosts, then writes the tendency into dudt (interior cells
  // only). Throws SolverError with cell/stage diagnostics on positivity or
  // degenerate-average failures. stage/time only label the diagnostics.
  void eval(Field& U, double t, int stage, Field& dudt);

  // Exposed for tests: the classification pass on the current (ghost-filled)
  // state. Direction 0 = x, 1 = y.
  void classify(const Field& U, int direction, ClassField& cls);

  const GridSpec& grid() const { return grid_; }
  const SchemeSettings& scheme() const { return scheme_; }

 private:
  void primitive_pass(const Field& U);
  void sweep_x(const Field& U);
  void sweep_y(const Field& U);
  void combine(const Field& U, Field& dudt);
  void throw_if_failed(double t, int stage);

  GridSpec grid_;
  GasModel gas_;
  BCSet bc_;
  SchemeSettings scheme_;
  SourceKind source_;

  ScalarField p_;            // cell pressures, padded
  ClassField cls_x_, cls_y_;
  std::vector<double> flux_x_;  // (nx+1) * ny * ncomp
  std::vector<double> flux_y_;  // nx * (ny+1) * ncomp
  FailureSink sink_;

  // Per-thread line scratch, indexed by omp thread id.
  struct LineScratch {
    std::vector<double> state;   // gathered (swapped) line states
    std::vector<double> pflux;   // per-cell physical fluxes, order 5
    std::vector<double> flux;    // per-line interface fluxes (y sweep)
    std::vector<std::uint8_t> cls;
  };
  std::vector<LineScratch> scratch_;
  LineScratch& scratch_for_thread();
};

}  // namespace aaad

#endif  // CUSHARP_RHS_HPP_
