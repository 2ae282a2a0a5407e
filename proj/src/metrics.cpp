#include "aaad/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "aaad/types.hpp"

namespace aaad {

double l1_error(const Field& a, const Field& b, int comp) {
  const GridSpec& g = a.grid;
  if (g.dim != b.grid.dim || g.nx != b.grid.nx || g.ny != b.grid.ny ||
      a.ncomp != b.ncomp)
    throw ConfigError("ShapeMismatch: fields differ in extent");
  const long nyi = g.dim == 2 ? g.ny : 1;
  double sum = 0.0;
  for (long j = 0; j < nyi; ++j)
    for (long i = 0; i < g.nx; ++i)
      sum += std::fabs(a.cell(i, j)[comp] - b.cell(i, j)[comp]);
  double cell = g.dx() * (g.dim == 2 ? g.dy() : 1.0);
  return sum * cell;
}

namespace {

long wrap_or_clamp(long k, long n, bool periodic) {
  if (periodic) {
    k %= n;
    if (k < 0) k += n;
    return k;
  }
  return std::clamp(k, 0L, n - 1);
}

// Coarse center i sits midway between fine points 2i and 2i+1; symmetric
// 6-point interpolation there is O(h^6).
double midpoint6(const double* f, long stride, long i2, long n, bool periodic) {
  auto v = [&](long k) {
    return f[wrap_or_clamp(k, n, periodic) * stride];
  };
  double a = v(i2 - 2), b = v(i2 - 1), c = v(i2), d = v(i2 + 1), e = v(i2 + 2),
         q = v(i2 + 3);
  return (3.0 * (a + q) - 25.0 * (b + e) + 150.0 * (c + d)) * (1.0 / 256.0);
}

}  // namespace

Field restrict_half(const Field& fine, Restriction kind, bool periodic) {
  const GridSpec& gf = fine.grid;
  if (gf.nx % 2 || (gf.dim == 2 && gf.ny % 2))
    throw ConfigError("ShapeMismatch: restriction needs even extents");
  GridSpec gc = gf;
  gc.nx = gf.nx / 2;
  if (gf.dim == 2) gc.ny = gf.ny / 2;
  Field out(gc, fine.ncomp);
  const int nc = fine.ncomp;

  if (kind == Restriction::Average) {
    const long nyi = gc.dim == 2 ? gc.ny : 1;
    for (long j = 0; j < nyi; ++j)
      for (long i = 0; i < gc.nx; ++i)
        for (int c = 0; c < nc; ++c) {
          if (gf.dim == 1) {
            out.at(i, j, c) =
                0.5 * (fine.at(2 * i, 0, c) + fine.at(2 * i + 1, 0, c));
          } else {
            out.at(i, j, c) =
                0.25 * ((fine.at(2 * i, 2 * j, c) + fine.at(2 * i + 1, 2 * j, c)) +
                        (fine.at(2 * i, 2 * j + 1, c) +
                         fine.at(2 * i + 1, 2 * j + 1, c)));
          }
        }
    return out;
  }

  if (gf.dim == 1) {
    std::vector<double> line(gf.nx);
    for (int c = 0; c < nc; ++c) {
      for (long i = 0; i < gf.nx; ++i) line[i] = fine.at(i, 0, c);
      for (long i = 0; i < gc.nx; ++i)
        out.at(i, 0, c) = midpoint6(line.data(), 1, 2 * i, gf.nx, periodic);
    }
    return out;
  }

  // 2-D: separable pass, x first into a half-width intermediate, then y.
  std::vector<double> mid(static_cast<std::size_t>(gc.nx) * gf.ny);
  std::vector<double> line(std::max<long>(gf.nx, gf.ny));
  for (int c = 0; c < nc; ++c) {
    for (long j = 0; j < gf.ny; ++j) {
      for (long i = 0; i < gf.nx; ++i) line[i] = fine.at(i, j, c);
      for (long i = 0; i < gc.nx; ++i)
        mid[j * gc.nx + i] = midpoint6(line.data(), 1, 2 * i, gf.nx, periodic);
    }
    for (long i = 0; i < gc.nx; ++i)
      for (long j = 0; j < gc.ny; ++j)
        out.at(i, j, c) =
            midpoint6(mid.data() + i, gc.nx, 2 * j, gf.ny, periodic);
  }
  return out;
}

RungeEstimate runge_error_rate(double d12, double d24) {
  if (!(d12 > 0.0) || !(d24 > 0.0))
    throw ConfigError("DegenerateDeltas: zero inter-mesh difference");
  double denom = std::fabs(d12 - d24);
  if (!(denom > 1e-14 * d12))
    throw ConfigError("DegenerateDeltas: stalled refinement");
  RungeEstimate est;
  est.error = d12 * d12 / denom;
  est.rate = std::log2(d24 / d12);
  return est;
}

int contact_width(const std::vector<double>& rho, double rho_left,
                  double rho_right) {
  double lo = std::min(rho_left, rho_right);
  double hi = std::max(rho_left, rho_right);
  double jump = hi - lo;
  if (!(jump > 0.0)) throw ConfigError("NoTransitionFound: equal plateaus");
  double band_lo = lo + 0.1 * jump;
  double band_hi = lo + 0.9 * jump;
  int inside = 0;
  bool crossed = false;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho[i] > band_lo && rho[i] < band_hi) {
      ++inside;
      crossed = true;
    } else if (i + 1 < rho.size()) {
      // A jump can skip the band entirely between two cells.
      double a = rho[i], b = rho[i + 1];
      if ((a <= band_lo && b >= band_hi) || (a >= band_hi && b <= band_lo))
        crossed = true;
    }
  }
  if (!crossed) throw ConfigError("NoTransitionFound: no cell crosses the jump band");
  return inside;
}

double plateau_overshoot(const std::vector<double>& rho, double rho_left,
                         double rho_right) {
  double lo = std::min(rho_left, rho_right);
  double hi = std::max(rho_left, rho_right);
  double jump = hi - lo;
  if (!(jump > 0.0)) throw ConfigError("NoTransitionFound: equal plateaus");
  double exc = 0.0;
  for (double r : rho) exc = std::max({exc, lo - r, r - hi});
  return exc / jump;
}

}  // namespace aaad
