// Timing harness for the serial vs OpenMP kernel paths. Both runs take the
// same fixed step size, so the final states must agree bitwise; the check is
// printed alongside the timings.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "CLI11.hpp"
#include "aaad/runner.hpp"

using namespace aaad;

namespace {

double time_steps(TimeMarcher& m, Field& U, double dt, int steps) {
  auto t0 = std::chrono::steady_clock::now();
  double t = 0.0;
  for (int s = 0; s < steps; ++s) {
    m.step(U, t, dt);
    t += dt;
  }
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool bitwise_equal_interior(const Field& a, const Field& b) {
  const GridSpec& g = a.grid;
  const long nyi = g.dim == 2 ? g.ny : 1;
  for (long j = 0; j < nyi; ++j) {
    if (std::memcmp(a.cell(0, j), b.cell(0, j),
                    sizeof(double) * g.nx * a.ncomp) != 0)
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP sweep benchmark"};
  std::string problem = "rp_cfg6";
  std::string scheme = "aaad2";
  int nx = 200;
  int steps = 20;
  app.add_option("--problem", problem);
  app.add_option("--scheme", scheme);
  app.add_option("--nx", nx);
  app.add_option("--steps", steps);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const ProblemSpec& prob = find_problem(problem);
    SchemeKind kind = parse_scheme(scheme);
    int ny = prob.dim == 2
                 ? static_cast<int>(static_cast<double>(nx) * prob.default_ny /
                                    prob.default_nx)
                 : 1;
    GridSpec grid = make_grid(prob, nx, ny, scheme_ghost(kind));
    GasModel gas{prob.gamma};

    SchemeSettings base;
    base.kind = kind;
    base.c_const = scheme_order(kind) == 2 ? prob.c_default_order2
                                           : prob.c_default_order5;
    MarchOptions opts;

    Field U0 = initialize(prob, grid);
    double dt = 0.5 * stable_dt(U0, gas, opts.cfl, ExecMode::Serial);

    double cells = static_cast<double>(grid.nx) * (grid.dim == 2 ? grid.ny : 1);
    std::printf("problem=%s scheme=%s mesh=%dx%d steps=%d dt=%.3e threads=%d\n",
                problem.c_str(), scheme.c_str(), grid.nx,
                grid.dim == 2 ? grid.ny : 1, steps, dt, max_threads());

    Field u_serial = U0, u_omp = U0;
    double secs[2];
    const char* label[2] = {"serial", "openmp"};
    for (int pass = 0; pass < 2; ++pass) {
      SchemeSettings s = base;
      s.exec = pass == 0 ? ExecMode::Serial : ExecMode::OpenMP;
      TimeMarcher m(grid, gas, prob.bc, s, prob.source, opts);
      Field& u = pass == 0 ? u_serial : u_omp;
      secs[pass] = time_steps(m, u, dt, steps);
      std::printf("%-7s %8.3fs  %8.2f Mcell-steps/s\n", label[pass], secs[pass],
                  cells * steps / secs[pass] / 1e6);
    }
    std::printf("speedup: %.2fx\n", secs[0] / secs[1]);
    std::printf("bitwise identical: %s\n",
                bitwise_equal_interior(u_serial, u_omp) ? "yes" : "NO");
    return bitwise_equal_interior(u_serial, u_omp) ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
