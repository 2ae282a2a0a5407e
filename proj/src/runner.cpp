#include "aaad/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "aaad/euler.hpp"
#include "aaad/io.hpp"
#include "json.hpp"

namespace aaad {

namespace {

std::string time_tag(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", t);
  return buf;
}

struct Assembled {
  const ProblemSpec* prob;
  SchemeSettings settings;
  GridSpec grid;
  GasModel gas;
  MarchOptions opts;
  double t_final;
  int nx, ny;
};

Assembled assemble(const RunConfig& cfg) {
  Assembled a;
  a.prob = &find_problem(cfg.problem);
  SchemeKind kind = parse_scheme(cfg.scheme);

  a.nx = cfg.nx > 0 ? cfg.nx : a.prob->default_nx;
  if (a.prob->dim == 2) {
    if (cfg.ny > 0)
      a.ny = cfg.ny;
    else if (cfg.nx > 0)
      a.ny = static_cast<int>(std::llround(
          static_cast<double>(cfg.nx) * a.prob->default_ny / a.prob->default_nx));
    else
      a.ny = a.prob->default_ny;
  } else {
    a.ny = 1;
  }

  a.settings.kind = kind;
  a.settings.c_const =
      cfg.c >= 0.0 ? cfg.c
                   : (scheme_order(kind) == 2 ? a.prob->c_default_order2
                                              : a.prob->c_default_order5);
  a.settings.theta = cfg.theta;
  a.settings.eps0 = cfg.eps0;
  a.settings.exec = cfg.exec == "serial" ? ExecMode::Serial : ExecMode::OpenMP;

  a.grid = make_grid(*a.prob, a.nx, a.ny, scheme_ghost(kind));
  a.gas = GasModel{a.prob->gamma};
  a.opts.cfl = cfg.cfl;
  a.opts.accuracy_mode = cfg.accuracy_mode;
  a.opts.dt_cap_k = cfg.dt_cap_k;
  a.t_final = cfg.t_final_override ? *cfg.t_final_override : a.prob->t_final;
  return a;
}

void write_state(const std::string& dir, const std::string& stem, const Field& U,
                 const GasModel& gas, const RunConfig& cfg,
                 std::vector<std::string>* outputs) {
  if (U.grid.dim == 1) {
    std::string path = dir + "/" + stem + ".csv";
    write_profile_csv(path, U, gas);
    outputs->push_back(path);
    return;
  }
  std::string path = dir + "/" + stem + ".txt";
  write_structured_2d(path, U, gas, cfg.full_state);
  outputs->push_back(path);
  if (cfg.vtk) {
    std::string vtk = dir + "/" + stem + ".vtk";
    write_vtk_2d(vtk, U, gas, cfg.full_state);
    outputs->push_back(vtk);
  }
}

void write_failure_json(const std::string& dir, const SolverError& err) {
  nlohmann::json j;
  j["kind"] = err.info().kind;
  j["i"] = err.info().i;
  j["j"] = err.info().j;
  j["stage"] = err.info().stage;
  j["time"] = err.info().time;
  j["message"] = err.what();
  std::ofstream f(dir + "/failure.json");
  f << j.dump(2) << '\n';
}

}  // namespace

std::string resolve_out_dir(const RunConfig& cfg) {
  std::string dir = cfg.out_dir;
  if (dir.empty()) {
    const ProblemSpec& prob = find_problem(cfg.problem);
    int nx = cfg.nx > 0 ? cfg.nx : prob.default_nx;
    dir = "runs/" + cfg.problem + "_" + cfg.scheme + "_nx" + std::to_string(nx);
  }
  const char* root = std::getenv("EULER2D_OUT_ROOT");
  if (root && *root && !std::filesystem::path(dir).is_absolute())
    dir = std::string(root) + "/" + dir;
  return dir;
}

RunResult run(const RunConfig& cfg) {
  Assembled a = assemble(cfg);

  RunResult res;
  res.grid = a.grid;
  res.gas = a.gas;
  res.t_final = a.t_final;

  std::string dir;
  if (cfg.write_outputs) {
    dir = resolve_out_dir(cfg);
    std::filesystem::create_directories(dir);
    res.out_dir = dir;
  }

  Field U = initialize(*a.prob, a.grid);

  // Marching schedule: snapshots strictly inside (0, t_final), then t_final.
  std::vector<double> stops;
  for (double t : cfg.snapshots)
    if (t < a.t_final) stops.push_back(t);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  stops.push_back(a.t_final);

  TimeMarcher marcher(a.grid, a.gas, a.prob->bc, a.settings, a.prob->source, a.opts);

  auto t_start = std::chrono::steady_clock::now();
  double t = 0.0;
  try {
    for (std::size_t s = 0; s < stops.size(); ++s) {
      MarchStats seg = marcher.advance(U, t, stops[s]);
      t = stops[s];
      res.stats.steps += seg.steps;
      res.stats.last_dt = seg.last_dt;
      res.stats.min_rho = s == 0 ? seg.min_rho : std::min(res.stats.min_rho, seg.min_rho);
      res.stats.min_p = s == 0 ? seg.min_p : std::min(res.stats.min_p, seg.min_p);
      if (cfg.write_outputs && s + 1 < stops.size())
        write_state(dir, (a.grid.dim == 1 ? "profile_t" : "field_t") + time_tag(t),
                    U, a.gas, cfg, &res.outputs);
    }
  } catch (const SolverError& err) {
    if (cfg.write_outputs) write_failure_json(dir, err);
    throw;
  }
  auto t_end = std::chrono::steady_clock::now();
  res.wall_seconds = std::chrono::duration<double>(t_end - t_start).count();

  if (cfg.write_outputs) {
    write_state(dir, a.grid.dim == 1 ? "profile_final" : "field_final", U, a.gas,
                cfg, &res.outputs);
    nlohmann::json j;
    j["problem"] = cfg.problem;
    j["scheme"] = cfg.scheme;
    j["nx"] = a.nx;
    j["ny"] = a.grid.dim == 2 ? a.ny : 1;
    j["c"] = a.settings.c_const;
    j["theta"] = a.settings.theta;
    j["cfl"] = a.opts.cfl;
    j["eps0"] = a.settings.eps0;
    j["t_final"] = a.t_final;
    j["steps"] = res.stats.steps;
    j["last_dt"] = res.stats.last_dt;
    j["min_rho"] = res.stats.min_rho;
    j["min_p"] = res.stats.min_p;
    j["wall_seconds"] = res.wall_seconds;
    j["outputs"] = res.outputs;
    std::ofstream f(dir + "/summary.json");
    f << j.dump(2) << '\n';
    res.outputs.push_back(dir + "/summary.json");
  }

  res.final_state = std::move(U);
  return res;
}

ConvergenceReport converge(const RunConfig& base, const std::vector<int>& meshes) {
  if (meshes.size() < 2) throw ConfigError("BadValue: need at least two meshes");
  for (std::size_t k = 0; k + 1 < meshes.size(); ++k)
    if (meshes[k + 1] <= meshes[k])
      throw ConfigError("BadValue: meshes must be increasing");

  const ProblemSpec& prob = find_problem(base.problem);
  SchemeKind kind = parse_scheme(base.scheme);
  const int order = scheme_order(kind);

  ConvergenceReport rep;
  rep.against_exact = static_cast<bool>(prob.exact);

  std::vector<Field> solutions;
  std::vector<double> dxs;
  for (int m : meshes) {
    RunConfig cfg = base;
    cfg.nx = m;
    cfg.ny = 0;  // proportional to the problem's aspect
    cfg.write_outputs = false;
    RunResult r = run(cfg);
    solutions.push_back(std::move(r.final_state));
    dxs.push_back(r.grid.dx());
  }

  const double nan = std::nan("");

  if (rep.against_exact) {
    double t = base.t_final_override ? *base.t_final_override : prob.t_final;
    GasModel gas{prob.gamma};
    std::vector<double> errs;
    for (std::size_t k = 0; k < solutions.size(); ++k) {
      const GridSpec& g = solutions[k].grid;
      Field ex(g);
      const long nyi = g.dim == 2 ? g.ny : 1;
      for (long j = 0; j < nyi; ++j)
        for (long i = 0; i < g.nx; ++i) {
          Prim w = prob.exact(g.x_center(i), g.y_center(j), t);
          if (g.dim == 1)
            conserved_from_primitive<3>(w, gas, ex.cell(i, j));
          else
            conserved_from_primitive<4>(w, gas, ex.cell(i, j));
        }
      errs.push_back(l1_error(solutions[k], ex, kRho));
    }
    for (std::size_t k = 0; k < solutions.size(); ++k) {
      ConvergenceRow row;
      row.nx = meshes[k];
      row.dx = dxs[k];
      row.error = errs[k];
      row.rate = k == 0 ? nan
                        : std::log(errs[k - 1] / errs[k]) /
                              std::log(dxs[k - 1] / dxs[k]);
      rep.rows.push_back(row);
    }
    return rep;
  }

  // Self-convergence needs dyadic meshes so each solution restricts onto the
  // next coarser grid.
  for (std::size_t k = 0; k + 1 < meshes.size(); ++k)
    if (meshes[k + 1] != 2 * meshes[k])
      throw ConfigError("BadValue: self-convergence needs 2:1 nested meshes");

  Restriction kindr = order == 2 ? Restriction::Average : Restriction::Midpoint6;
  bool periodic = prob.bc.xlo.kind == BCKind::Periodic;

  std::vector<double> deltas(solutions.size(), nan);  // deltas[k] = ||u_k - u_{k-1}||
  for (std::size_t k = 1; k < solutions.size(); ++k) {
    Field down = restrict_half(solutions[k], kindr, periodic);
    deltas[k] = l1_error(down, solutions[k - 1], kRho);
  }
  for (std::size_t k = 0; k < solutions.size(); ++k) {
    ConvergenceRow row;
    row.nx = meshes[k];
    row.dx = dxs[k];
    if (k >= 2) {
      RungeEstimate est = runge_error_rate(deltas[k], deltas[k - 1]);
      row.error = est.error;
      row.rate = est.rate;
    } else {
      row.error = nan;
      row.rate = nan;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace aaad
