#include "aaad/problems.hpp"

#include <cmath>

#include "aaad/euler.hpp"

namespace aaad {

namespace {

constexpr double kPi = 3.14159265358979323846;

SideBC periodic() { return {BCKind::Periodic, {}}; }
SideBC free_bc() { return {BCKind::Free, {}}; }
SideBC wall() { return {BCKind::SolidWall, {}}; }
SideBC dirichlet(double rho, double u, double v, double p) {
  SideBC b;
  b.kind = BCKind::Dirichlet;
  b.state = Prim{rho, u, v, p};
  return b;
}

std::vector<ProblemSpec> build_registry() {
  std::vector<ProblemSpec> reg;

  {
    ProblemSpec p;
    p.name = "accuracy1d";
    p.description = "smooth periodic flow for 1-D convergence studies";
    p.dim = 1;
    p.xmin = 0.0;
    p.xmax = 10.0;
    p.t_final = 0.1;
    p.default_nx = 200;
    p.c_default_order2 = 0.1;
    p.c_default_order5 = 0.1;
    p.bc.xlo = periodic();
    p.bc.xhi = periodic();
    double gamma = p.gamma;
    p.init = [gamma](double x, double) {
      double u = std::sin(kPi * x / 5.0 + kPi / 4.0);
      double rho =
          std::pow((gamma - 1.0) / (2.0 * std::sqrt(gamma)) * (u + 10.0),
                   2.0 / (gamma - 1.0));
      return Prim{rho, u, 0.0, std::pow(rho, gamma)};
    };
    reg.push_back(p);
  }

  {
    ProblemSpec p;
    p.name = "titarev_toro";
    p.description = "shock running into high-frequency density waves";
    p.dim = 1;
    p.xmin = -5.0;
    p.xmax = 5.0;
    p.t_final = 5.0;
    p.default_nx = 800;
    p.c_default_order2 = 0.04;
    p.c_default_order5 = 0.003;
    p.bc.xlo = free_bc();
    p.bc.xhi = free_bc();
    p.init = [](double x, double) {
      if (x < -4.5) return Prim{1.51695, 0.523346, 0.0, 1.805};
      return Prim{1.0 + 0.1 * std::sin(20.0 * x), 0.0, 0.0, 1.0};
    };
    reg.push_back(p);
  }

  {
    ProblemSpec p;
    p.name = "shock_density";
    p.description = "Mach 3 shock interacting with sinusoidal density waves";
    p.dim = 1;
    p.xmin = -5.0;
    p.xmax = 15.0;
    p.t_final = 5.0;
    p.default_nx = 1600;
    p.c_default_order2 = 0.1;
    p.c_default_order5 = 0.03;
    p.bc.xlo = free_bc();
    p.bc.xhi = free_bc();
    p.init = [](double x, double) {
      if (x < -4.0)
        return Prim{27.0 / 7.0, 4.0 * std::sqrt(35.0) / 9.0, 0.0, 31.0 / 3.0};
      return Prim{1.0 + 0.2 * std::sin(5.0 * x), 0.0, 0.0, 1.0};
    };
    reg.push_back(p);
  }

  {
    ProblemSpec p;
    p.name = "shock_bubble";
    p.description = "left-moving shock hitting a dense bubble at the origin";
    p.dim = 1;
    p.xmin = -1.0;
    p.xmax = 1.0;
    p.t_final = 3.0;
    p.default_nx = 200;
    p.c_default_order2 = 0.15;
    p.c_default_order5 = 0.05;
    p.bc.xlo = wall();
    p.bc.xhi = free_bc();
    p.init = [](double x, double) {
      if (std::fabs(x) < 0.25) return Prim{13.1538, 0.0, 0.0, 1.0};
      if (x > 0.75) return Prim{1.3333, -0.3535, 0.0, 1.5};
      return Prim{1.0, 0.0, 0.0, 1.0};
    };
    reg.push_back(p);
  }

  {
    ProblemSpec p;
    p.name = "lax";
    p.description = "Lax Riemann problem";
    p.dim = 1;
    p.xmin = -5.0;
    p.xmax = 5.0;
    p.t_final = 1.3;
    p.default_nx = 200;
    p.c_default_order2 = 0.1;
    p.c_default_order5 = 0.5;
    p.bc.xlo = free_bc();
    p.bc.xhi = free_bc();
    p.init = [](double x, double) {
      if (x < 0.0) return Prim{0.445, 0.31061, 0.0, 8.928};
      return Prim{0.5, 0.0, 0.0, 0.571};
    };
    reg.push_back(p);
  }

  {
    ProblemSpec p;
    p.name = "blast";
    p.description = "two interacting blast waves between solid walls";
    p.dim = 1;
    p.xmin = 0.0;
    p.xmax = 1.0;
    p.t_final = 0.038;
    p.default_nx = 400;
    p.c_default_order2 = 0.55;
    p.c_default_order5 = 0.5;
    p.bc.xlo = wall();
    p.bc.xhi = wall();
    p.init = [](double x, double) {
      if (x < 0.1) return Prim{1.0, 0.0, 0.0, 1000.0};
      if (x > 0.9) return Prim{1.0, 0.0, 0.0, 100.0};
      return Prim{1.0, 0.0, 0.0, 0.01};
    };
    reg.push_back(p);
  }

  {
    ProblemSpec p;
    p.name = "accuracy2d";
    p.description = "isentropic vortex advected diagonally";
    p.dim = 2;
    p.xmin = -10.0;
    p.xmax = 10.0;
    p.ymin = -10.0;
    p.ymax = 10.0;
    p.t_final = 0.1;
    p.default_nx = 200;
    p.default_ny = 200;
    p.c_default_order2 = 0.1;
    p.c_default_order5 = 0.1;
    p.bc.xlo = periodic();
    p.bc.xhi = periodic();
    p.bc.ylo = periodic();
    p.bc.yhi = periodic();
    double gamma = p.gamma;
    auto state = [gamma](double x, double y) {
      double kappa = 5.0 / (2.0 * kPi) * std::exp((1.0 - x * x - y * y) / 2.0);
      double rho = std::pow(1.0 - (gamma - 1.0) * kappa * kappa / (2.0 * gamma),
                            1.0 / (gamma - 1.0));
      return Prim{rho, 1.0 - kappa * y, 1.0 + kappa * x, std::pow(rho, gamma)};
    };
    p.init = [state](double x, double y) { return state(x, y); };
    p.exact = [state](double x, double y, double t) {
      auto wrap = [](double s) {
        double r = std::fmod(s + 10.0, 20.0);
        if (r < 0.0) r += 20.0;
        return r - 10.0;
      };
      return state(wrap(x - t), wrap(y - t));
    };
    reg.push_back(p);
  }

  {
    ProblemSpec p;
    p.name = "explosion";
    p.description = "circular explosion with an unstable contact";
    p.dim = 2;
    p.xmin = -1.5;
    p.xmax = 1.5;
    p.ymin = -1.5;
    p.ymax = 1.5;
    p.t_final = 3.2;
    p.default_nx = 800;
    p.default_ny = 800;
    p.c_default_order2 = 0.03;
    p.c_default_order5 = 0.02;
    p.bc.xlo = free_bc();
    p.bc.xhi = free_bc();
    p.bc.ylo = free_bc();
    p.bc.yhi = free_bc();
    p.init = [](double x, double y) {
      if (x * x + y * y < 0.16) return Prim{1.0, 0.0, 0.0, 1.0};
      return Prim{0.125, 0.0, 0.0, 0.1};
    };
    reg.push_back(p);
  }

  {
    ProblemSpec p;
    p.name = "rp_cfg3";
    p.description = "four-quadrant Riemann problem, configuration 3";
    p.dim = 2;
    p.xmin = 0.0;
    p.xmax = 1.2;
    p.ymin = 0.0;
    p.ymax = 1.2;
    p.t_final = 1.0;
    p.default_nx = 600;
    p.default_ny = 600;
    p.c_default_order2 = 0.04;
    p.c_default_order5 = 0.02;
    p.bc.xlo = free_bc();
    p.bc.xhi = free_bc();
    p.bc.ylo = free_bc();
    p.bc.yhi = free_bc();
    p.init = [](double x, double y) {
      if (x > 1.0) {
        if (y > 1.0) return Prim{1.5, 0.0, 0.0, 1.5};
        return Prim{0.5323, 0.0, 1.206, 0.3};
      }
      if (y > 1.0) return Prim{0.5323, 1.206, 0.0, 0.3};
      return Prim{0.138, 1.206, 1.206, 0.029};
    };
    reg.push_back(p);
  }

  {
    ProblemSpec p;
    p.name = "rp_cfg6";
    p.description = "four-quadrant Riemann problem, configuration 6";
    p.dim = 2;
    p.xmin = 0.0;
    p.xmax = 1.0;
    p.ymin = 0.0;
    p.ymax = 1.0;
    p.t_final = 1.0;
    p.default_nx = 400;
    p.default_ny = 400;
    p.c_default_order2 = 0.05;
    p.c_default_order5 = 0.02;
    p.bc.xlo = free_bc();
    p.bc.xhi = free_bc();
    p.bc.ylo = free_bc();
    p.bc.yhi = free_bc();
    p.init = [](double x, double y) {
      if (x > 0.5) {
        if (y > 0.5) return Prim{1.0, 0.75, -0.5, 1.0};
        return Prim{3.0, -0.75, -0.5, 1.0};
      }
      if (y > 0.5) return Prim{2.0, 0.75, 0.5, 1.0};
      return Prim{1.0, -0.75, 0.5, 1.0};
    };
    reg.push_back(p);
  }

  {
    ProblemSpec p;
    p.name = "rp_cfg12";
    p.description = "four-quadrant Riemann problem, configuration 12";
    p.dim = 2;
    p.xmin = 0.0;
    p.xmax = 0.6;
    p.ymin = 0.0;
    p.ymax = 0.6;
    p.t_final = 1.0;
    p.default_nx = 600;
    p.default_ny = 600;
    p.c_default_order2 = 0.04;
    p.c_default_order5 = 0.02;
    p.bc.xlo = free_bc();
    p.bc.xhi = free_bc();
    p.bc.ylo = free_bc();
    p.bc.yhi = free_bc();
    p.init = [](double x, double y) {
      if (x > 0.5) {
        if (y > 0.5) return Prim{0.5313, 0.0, 0.0, 0.4};
        return Prim{1.0, 0.0, 0.7276, 1.0};
      }
      if (y > 0.5) return Prim{1.0, 0.7276, 0.0, 1.0};
      return Prim{0.8, 0.0, 0.0, 1.0};
    };
    reg.push_back(p);
  }

  {
    ProblemSpec p;
    p.name = "implosion";
    p.description = "implosion in a box, jet along the diagonal";
    p.dim = 2;
    p.xmin = 0.0;
    p.xmax = 0.3;
    p.ymin = 0.0;
    p.ymax = 0.3;
    p.t_final = 2.5;
    p.default_nx = 450;
    p.default_ny = 450;
    p.c_default_order2 = 0.05;
    p.c_default_order5 = 0.01;
    p.bc.xlo = wall();
    p.bc.xhi = wall();
    p.bc.ylo = wall();
    p.bc.yhi = wall();
    p.init = [](double x, double y) {
      if (std::fabs(x) + std::fabs(y) < 0.15) return Prim{0.125, 0.0, 0.0, 0.14};
      return Prim{1.0, 0.0, 0.0, 1.0};
    };
    reg.push_back(p);
  }

  {
    ProblemSpec p;
    p.name = "kelvin_helmholtz";
    p.description = "shear layers with a seeded transverse perturbation";
    p.dim = 2;
    p.xmin = -0.5;
    p.xmax = 0.5;
    p.ymin = -0.5;
    p.ymax = 0.5;
    p.t_final = 4.0;
    p.default_nx = 1024;
    p.default_ny = 1024;
    p.c_default_order2 = 0.05;
    p.c_default_order5 = 0.01;
    p.bc.xlo = periodic();
    p.bc.xhi = periodic();
    p.bc.ylo = periodic();
    p.bc.yhi = periodic();
    p.init = [](double x, double y) {
      const double L = 0.00625;
      double rho, u;
      if (y < -0.25) {
        rho = 1.0;
        u = -0.5 + 0.5 * std::exp((y + 0.25) / L);
      } else if (y < 0.0) {
        rho = 2.0;
        u = 0.5 - 0.5 * std::exp((-y - 0.25) / L);
      } else if (y < 0.25) {
        rho = 2.0;
        u = 0.5 - 0.5 * std::exp((y - 0.25) / L);
      } else {
        rho = 1.0;
        u = -0.5 + 0.5 * std::exp((0.25 - y) / L);
      }
      return Prim{rho, u, 0.01 * std::sin(4.0 * kPi * x), 1.5};
    };
    reg.push_back(p);
  }

  {
    ProblemSpec p;
    p.name = "rayleigh_taylor";
    p.description = "heavy fluid over light with gravity, seeded interface";
    p.dim = 2;
    p.xmin = 0.0;
    p.xmax = 0.25;
    p.ymin = 0.0;
    p.ymax = 1.0;
    p.gamma = 5.0 / 3.0;
    p.t_final = 2.95;
    p.default_nx = 256;
    p.default_ny = 1024;
    p.c_default_order2 = 0.05;
    p.c_default_order5 = 0.02;
    p.bc.xlo = wall();
    p.bc.xhi = wall();
    p.bc.ylo = dirichlet(2.0, 0.0, 0.0, 1.0);
    p.bc.yhi = dirichlet(1.0, 0.0, 0.0, 2.5);
    p.source = SourceKind::GravityY;
    double gamma = p.gamma;
    p.init = [gamma](double x, double y) {
      double rho = y < 0.5 ? 2.0 : 1.0;
      double pr = y < 0.5 ? 2.0 * y + 1.0 : y + 1.5;
      double c = std::sqrt(gamma * pr / rho);
      return Prim{rho, 0.0, -0.025 * c * std::cos(8.0 * kPi * x), pr};
    };
    reg.push_back(p);
  }

  return reg;
}

}  // namespace

const std::vector<ProblemSpec>& problem_registry() {
  static const std::vector<ProblemSpec> reg = build_registry();
  return reg;
}

const ProblemSpec& find_problem(const std::string& name) {
  for (const ProblemSpec& p : problem_registry())
    if (p.name == name) return p;
  throw ConfigError("UnknownProblem: " + name);
}

GridSpec make_grid(const ProblemSpec& prob, int nx, int ny, int ghost) {
  GridSpec g;
  g.dim = prob.dim;
  g.nx = nx;
  g.ny = prob.dim == 2 ? ny : 1;
  g.ghost = ghost;
  g.xmin = prob.xmin;
  g.xmax = prob.xmax;
  g.ymin = prob.ymin;
  g.ymax = prob.ymax;
  return g;
}

Field initialize(const ProblemSpec& prob, const GridSpec& grid) {
  Field U(grid);
  GasModel gas{prob.gamma};
  const long nyi = grid.dim == 2 ? grid.ny : 1;
  for (long j = 0; j < nyi; ++j) {
    for (long i = 0; i < grid.nx; ++i) {
      Prim w = prob.init(grid.x_center(i), grid.y_center(j));
      if (grid.dim == 1)
        conserved_from_primitive<3>(w, gas, U.cell(i, j));
      else
        conserved_from_primitive<4>(w, gas, U.cell(i, j));
    }
  }
  return U;
}

}  // namespace aaad
