#include "aaad/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "aaad/euler.hpp"

namespace aaad {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  return f;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  return f;
}

Prim prim_at(const Field& U, const GasModel& gas, long i, long j) {
  const double* c = U.cell(i, j);
  Prim w;
  w.rho = c[kRho];
  w.u = c[kMomX] / w.rho;
  w.v = U.ncomp == 4 ? c[kMomY] / w.rho : 0.0;
  w.p = (gas.gamma - 1.0) *
        (c[U.ncomp - 1] - 0.5 * w.rho * (w.u * w.u + w.v * w.v));
  return w;
}

}  // namespace

void write_profile_csv(const std::string& path, const Field& U, const GasModel& gas) {
  std::ofstream f = open_out(path);
  f << "x,rho,u,p\n";
  for (long i = 0; i < U.grid.nx; ++i) {
    Prim w = prim_at(U, gas, i, 0);
    f << fmt(U.grid.x_center(i)) << ',' << fmt(w.rho) << ',' << fmt(w.u) << ','
      << fmt(w.p) << '\n';
  }
  if (!f) throw std::runtime_error("write failed: " + path);
}

Profile1D read_profile_csv(const std::string& path) {
  std::ifstream f = open_in(path);
  Profile1D out;
  std::string line;
  if (!std::getline(f, line)) throw std::runtime_error("empty profile: " + path);
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    double x, rho, u, p;
    char c1, c2, c3;
    if (!(ss >> x >> c1 >> rho >> c2 >> u >> c3 >> p))
      throw std::runtime_error("bad profile row in " + path + ": " + line);
    out.x.push_back(x);
    out.rho.push_back(rho);
    out.u.push_back(u);
    out.p.push_back(p);
  }
  return out;
}

void write_structured_2d(const std::string& path, const Field& U, const GasModel& gas,
                         bool full_state) {
  std::ofstream f = open_out(path);
  const long nx = U.grid.nx, ny = U.grid.ny;
  f << nx << ' ' << ny << '\n';
  auto dump = [&](auto value_of) {
    for (long j = 0; j < ny; ++j) {
      for (long i = 0; i < nx; ++i) {
        if (i) f << ' ';
        f << fmt(value_of(prim_at(U, gas, i, j)));
      }
      f << '\n';
    }
  };
  dump([](const Prim& w) { return w.rho; });
  if (full_state) {
    dump([](const Prim& w) { return w.u; });
    dump([](const Prim& w) { return w.v; });
    dump([](const Prim& w) { return w.p; });
  }
  if (!f) throw std::runtime_error("write failed: " + path);
}

Structured2D read_structured_2d(const std::string& path) {
  std::ifstream f = open_in(path);
  Structured2D out;
  if (!(f >> out.nx >> out.ny))
    throw std::runtime_error("bad structured header in " + path);
  const long n = static_cast<long>(out.nx) * out.ny;
  auto slurp = [&](std::vector<double>& dst) {
    dst.resize(n);
    for (long k = 0; k < n; ++k)
      if (!(f >> dst[k])) return false;
    return true;
  };
  if (!slurp(out.rho)) throw std::runtime_error("truncated field in " + path);
  if (slurp(out.u)) {
    if (!slurp(out.v) || !slurp(out.p))
      throw std::runtime_error("truncated full-state blocks in " + path);
  } else {
    out.u.clear();
  }
  return out;
}

void write_vtk_2d(const std::string& path, const Field& U, const GasModel& gas,
                  bool full_state) {
  std::ofstream f = open_out(path);
  const long nx = U.grid.nx, ny = U.grid.ny;
  f << "# vtk DataFile Version 3.0\n";
  f << "euler2d\n";
  f << "ASCII\n";
  f << "DATASET STRUCTURED_POINTS\n";
  f << "DIMENSIONS " << nx << ' ' << ny << " 1\n";
  f << "ORIGIN " << fmt(U.grid.x_center(0)) << ' ' << fmt(U.grid.y_center(0))
    << " 0\n";
  f << "SPACING " << fmt(U.grid.dx()) << ' ' << fmt(U.grid.dy()) << " 1\n";
  f << "POINT_DATA " << nx * ny << '\n';
  auto scalars = [&](const char* name, auto value_of) {
    f << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (long j = 0; j < ny; ++j)
      for (long i = 0; i < nx; ++i)
        f << fmt(value_of(prim_at(U, gas, i, j))) << '\n';
  };
  scalars("rho", [](const Prim& w) { return w.rho; });
  if (full_state) {
    scalars("u", [](const Prim& w) { return w.u; });
    scalars("v", [](const Prim& w) { return w.v; });
    scalars("p", [](const Prim& w) { return w.p; });
  }
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace aaad
