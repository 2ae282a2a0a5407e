#ifndef CUSHARP_RUNNER_HPP_
#define CUSHARP_RUNNER_HPP_

// Run orchestration: config -> problem/grid/scheme assembly -> time marching
// with snapshot landing -> outputs (profiles, structured fields, summary
// JSON), plus the convergence-study driver.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aaad/metrics.hpp"
#include "aaad/problems.hpp"
#include "aaad/scheme.hpp"
#include "aaad/time_march.hpp"

namespace aaad {

struct RunConfig {
  std::string problem;
  std::string scheme = "aaad2";
  int nx = 0, ny = 0;            // 0: problem default
  double c = -1.0;               // <0: per-problem default for the scheme
  double theta = 2.0;
  double cfl = 0.4;
  double eps0 = 0.002;
  std::optional<double> t_final_override;
  std::string out_dir;           // empty: derived from problem/scheme/mesh
  std::vector<double> snapshots; // intermediate output times
  bool accuracy_mode = false;
  double dt_cap_k = 0.6;
  bool vtk = false;              // also write legacy VTK for 2-D outputs
  bool full_state = false;       // 2-D text outputs carry u, v, p too
  std::string exec = "omp";      // omp | serial
  bool write_outputs = true;     // tests run in-memory
};

// Flat key=value file; '#' comments; later CLI overrides win key-by-key.
RunConfig parse_run_config(const std::string& path,
                           const std::map<std::string, std::string>& overrides);
RunConfig config_from_map(const std::map<std::string, std::string>& kv);

// Resolved output directory: $EULER2D_OUT_ROOT (if set) prefixes relative
// out_dir values.
std::string resolve_out_dir(const RunConfig& cfg);

struct RunResult {
  GridSpec grid;
  Field final_state;
  GasModel gas;
  MarchStats stats;
  double t_final = 0.0;
  double wall_seconds = 0.0;
  std::string out_dir;                // empty when write_outputs = false
  std::vector<std::string> outputs;   // files written
};

// Executes one run. Throws ConfigError for bad configs, SolverError for
// solver failures; the CLI maps these to exit codes 1 / 2. When outputs are
// enabled, a summary.json (and failure.json on solver failure) is written.
RunResult run(const RunConfig& cfg);

struct ConvergenceRow {
  int nx = 0;
  double dx = 0.0;
  double error = 0.0;   // NaN when not defined at this row
  double rate = 0.0;    // NaN when not defined
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  bool against_exact = false;  // exact-solution errors vs Runge estimates
};

// Runs cfg on each mesh (nx, and ny scaled in proportion for 2-D). With an
// exact solution: pairwise errors/rates on each mesh. Without: Runge
// error/rate from triples of consecutive 2:1 meshes.
ConvergenceReport converge(const RunConfig& base, const std::vector<int>& meshes);

}  // namespace aaad

#endif  // CUSHARP_RUNNER_HPP_
