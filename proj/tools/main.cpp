// Command-line front end: solve / converge / compare / list-problems.
// Exit codes: 0 success, 1 usage or config error, 2 solver failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aaad/io.hpp"
#include "aaad/runner.hpp"

namespace {

const char* const kConfigKeys[] = {
    "problem", "scheme", "nx", "ny", "c", "theta", "cfl", "eps0",
    "t_final_override", "out_dir", "snapshots", "accuracy_mode",
    "dt_cap_k", "vtk", "full_state", "exec", "write_outputs"};

void add_override_flags(CLI::App* sub, std::map<std::string, std::string>* ov) {
  for (const char* key : kConfigKeys) {
    sub->add_option_function<std::string>(
        "--" + std::string(key),
        [ov, key](const std::string& v) { (*ov)[key] = v; },
        "override config key " + std::string(key));
  }
}

std::string row_num(double v) {
  if (std::isnan(v)) return "---";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// A run argument is either a run directory or a profile/field file.
std::string resolve_run_file(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::is_directory(arg)) {
    if (fs::exists(arg + "/profile_final.csv")) return arg + "/profile_final.csv";
    if (fs::exists(arg + "/field_final.txt")) return arg + "/field_final.txt";
    throw aaad::ConfigError("no profile_final.csv or field_final.txt in " + arg);
  }
  if (fs::is_regular_file(arg)) return arg;
  throw aaad::ConfigError("no such run: " + arg);
}

int do_compare(const std::string& a, const std::string& b, const std::string& metric,
               double plat_l, double plat_r) {
  std::string fa = resolve_run_file(a);
  std::string fb = resolve_run_file(b);
  bool csv = fa.size() > 4 && fa.substr(fa.size() - 4) == ".csv";
  bool csv_b = fb.size() > 4 && fb.substr(fb.size() - 4) == ".csv";
  if (csv != csv_b) throw aaad::ConfigError("cannot compare 1-D and 2-D runs");

  if (metric == "l1") {
    if (csv) {
      aaad::Profile1D pa = aaad::read_profile_csv(fa);
      aaad::Profile1D pb = aaad::read_profile_csv(fb);
      if (pa.x.size() != pb.x.size() || pa.x.size() < 2)
        throw aaad::ConfigError("profiles differ in size");
      double dx = pa.x[1] - pa.x[0];
      double sum = 0.0;
      for (std::size_t i = 0; i < pa.rho.size(); ++i)
        sum += std::fabs(pa.rho[i] - pb.rho[i]);
      std::printf("l1 %.12g\n", sum * dx);
    } else {
      aaad::Structured2D sa = aaad::read_structured_2d(fa);
      aaad::Structured2D sb = aaad::read_structured_2d(fb);
      if (sa.nx != sb.nx || sa.ny != sb.ny)
        throw aaad::ConfigError("fields differ in extent");
      double sum = 0.0;
      for (std::size_t i = 0; i < sa.rho.size(); ++i)
        sum += std::fabs(sa.rho[i] - sb.rho[i]);
      // The structured file has no physical spacing; report the mean
      // absolute density difference.
      std::printf("l1 %.12g\n", sum / sa.rho.size());
    }
    return 0;
  }

  if (metric == "contact-width") {
    if (!csv)
      throw aaad::ConfigError("contact-width applies to 1-D runs only");
    if (std::isnan(plat_l) || std::isnan(plat_r))
      throw aaad::ConfigError(
          "contact-width needs --plateau-left and --plateau-right");
    aaad::Profile1D pa = aaad::read_profile_csv(fa);
    aaad::Profile1D pb = aaad::read_profile_csv(fb);
    int wa = aaad::contact_width(pa.rho, plat_l, plat_r);
    int wb = aaad::contact_width(pb.rho, plat_l, plat_r);
    std::printf("contact-width A=%d B=%d\n", wa, wb);
    return 0;
  }

  throw aaad::ConfigError("unknown metric: " + metric);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structured-grid solver for the compressible Euler equations"};
  app.require_subcommand(1);

  std::string config_path;
  std::map<std::string, std::string> overrides;

  CLI::App* solve = app.add_subcommand("solve", "run one configuration");
  solve->add_option("config", config_path, "key=value config file")
      ->required()
      ->check(CLI::ExistingFile);
  add_override_flags(solve, &overrides);

  std::string meshes_arg;
  CLI::App* conv = app.add_subcommand(
      "converge", "run a mesh sequence and print an error/rate table");
  conv->add_option("config", config_path, "key=value config file")
      ->required()
      ->check(CLI::ExistingFile);
  conv->add_option("--meshes", meshes_arg, "comma-separated nx list")->required();
  add_override_flags(conv, &overrides);

  std::string run_a, run_b, metric = "l1";
  double plat_l = std::nan(""), plat_r = std::nan("");
  CLI::App* cmp = app.add_subcommand("compare", "compare two finished runs");
  cmp->add_option("runA", run_a)->required();
  cmp->add_option("runB", run_b)->required();
  cmp->add_option("--metric", metric, "l1 | contact-width");
  cmp->add_option("--plateau-left", plat_l, "left plateau density");
  cmp->add_option("--plateau-right", plat_r, "right plateau density");

  CLI::App* lp = app.add_subcommand("list-problems", "list registered problems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (lp->parsed()) {
      for (const aaad::ProblemSpec& p : aaad::problem_registry()) {
        std::printf("%-18s %dD  %5dx%-5d  %s\n", p.name.c_str(), p.dim,
                    p.default_nx, p.dim == 2 ? p.default_ny : 1,
                    p.description.c_str());
      }
      return 0;
    }

    if (solve->parsed()) {
      aaad::RunConfig cfg = aaad::parse_run_config(config_path, overrides);
      aaad::RunResult res = aaad::run(cfg);
      std::printf("done: t=%.17g steps=%ld min_rho=%.3e min_p=%.3e wall=%.2fs\n",
                  res.t_final, res.stats.steps, res.stats.min_rho,
                  res.stats.min_p, res.wall_seconds);
      if (!res.out_dir.empty()) std::printf("outputs: %s\n", res.out_dir.c_str());
      return 0;
    }

    if (conv->parsed()) {
      aaad::RunConfig cfg = aaad::parse_run_config(config_path, overrides);
      std::vector<int> meshes;
      std::stringstream ss(meshes_arg);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t pos = 0;
          int v = std::stoi(item, &pos);
          if (pos != item.size() || v <= 0) throw std::invalid_argument(item);
          meshes.push_back(v);
        } catch (const std::exception&) {
          throw aaad::ConfigError("bad mesh list entry: " + item);
        }
      }
      aaad::ConvergenceReport rep = aaad::converge(cfg, meshes);
      std::printf("%8s %12s %12s %8s   (%s)\n", "nx", "dx", "error", "rate",
                  rep.against_exact ? "vs exact solution" : "Runge estimate");
      for (const aaad::ConvergenceRow& r : rep.rows)
        std::printf("%8d %12.6g %12s %8s\n", r.nx, r.dx, row_num(r.error).c_str(),
                    row_num(r.rate).c_str());
      return 0;
    }

    if (cmp->parsed()) return do_compare(run_a, run_b, metric, plat_l, plat_r);
  } catch (const aaad::SolverError& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return 2;
  } catch (const aaad::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
