#ifndef CUSHARP_TYPES_HPP_
#define CUSHARP_TYPES_HPP_

#include <array>
#include <stdexcept>
#include <string>

namespace aaad {

// Conserved components. 1-D states are (rho, mx, E); 2-D adds my.
inline constexpr int kRho = 0;
inline constexpr int kMomX = 1;
inline constexpr int kMomY = 2;  // 2-D only
template <int N>
inline constexpr int kEner = N - 1;

template <int N>
using Vec = std::array<double, N>;

struct GasModel {
  double gamma = 1.4;
};

// Primitive view shared by 1-D (v unused, kept 0) and 2-D.
struct Prim {
  double rho = 0.0, u = 0.0, v = 0.0, p = 0.0;
};

// Arithmetic-average interface state and the derived quantities the
// eigensystem is built from. phi = 2H - u^2 - v^2 = 2c^2/(gamma-1).
struct InterfaceAverage {
  double rho = 0.0, u = 0.0, v = 0.0, p = 0.0;
  double E = 0.0, H = 0.0, phi = 0.0, c = 0.0;
};

template <int N>
struct Eigensystem {
  double r[N][N];     // right eigenvectors, columns, eigenvalues ascending
  double ri[N][N];    // R^-1, rows are left eigenvectors
  double lambda[N];   // ascending: u-c, u, (u,) u+c
};

// Solver failure with location diagnostics. "stage" is the Runge-Kutta
// stage index (1..3), -1 when outside time marching.
struct FailureInfo {
  std::string kind;   // NonPositiveDensity, NonPositivePressure, ...
  long i = -1, j = -1;
  int stage = -1;
  double time = 0.0;
  double value = 0.0;
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const FailureInfo& info, const std::string& msg)
      : std::runtime_error(msg), info_(info) {}
  const FailureInfo& info() const { return info_; }

 private:
  FailureInfo info_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aaad

#endif  // CUSHARP_TYPES_HPP_
