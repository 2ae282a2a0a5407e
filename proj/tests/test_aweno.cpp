#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "aaad/aweno.hpp"
#include "aaad/reconstruct.hpp"
#include "doctest.h"

using namespace aaad;

namespace {

// Cell centers m = 0..5 sit at x = (m - 2.5) dx relative to the interface.
double stencil_x(int m, double dx) { return (m - 2.5) * dx; }

}  // namespace

TEST_CASE("derivative stencils on monomials") {
  const double dx = 0.25;
  double F6[6], out[1];

  for (double v : {1.0, -7.5, 3e4}) {
    for (int m = 0; m < 6; ++m) F6[m] = v;
    fd_correction_fxx<1>(F6, dx, out);
    CHECK(out[0] == 0.0);
    fd_correction_fxxxx<1>(F6, dx, out);
    CHECK(out[0] == 0.0);
  }

  // Odd functions: the palindromic pairs cancel identically.
  for (int m = 0; m < 6; ++m) {
    double x = stencil_x(m, dx);
    F6[m] = 2.0 * x + 0.5 * x * x * x;
  }
  fd_correction_fxx<1>(F6, dx, out);
  CHECK(out[0] == 0.0);
  fd_correction_fxxxx<1>(F6, dx, out);
  CHECK(out[0] == 0.0);

  // x^2: second derivative 2, fourth derivative 0 (the stencil is built to
  // annihilate the x^4 contamination, checked below, and x^2 exactly here).
  for (int m = 0; m < 6; ++m) F6[m] = stencil_x(m, dx) * stencil_x(m, dx);
  fd_correction_fxx<1>(F6, dx, out);
  CHECK(out[0] == doctest::Approx(2.0).epsilon(1e-13));
  fd_correction_fxxxx<1>(F6, dx, out);
  CHECK(out[0] == doctest::Approx(0.0).epsilon(1e-13));

  // x^4: fourth derivative 24, and the x^4 term drops out of the fxx stencil.
  for (int m = 0; m < 6; ++m) {
    double x = stencil_x(m, dx);
    F6[m] = x * x * x * x;
  }
  fd_correction_fxxxx<1>(F6, dx, out);
  CHECK(out[0] == doctest::Approx(24.0).epsilon(1e-13));
  fd_correction_fxx<1>(F6, dx, out);
  CHECK(out[0] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("stencil weights, spelled out") {
  // x^2 in units of dx: values (6.25, 2.25, 0.25, 0.25, 2.25, 6.25).
  // fxx sum: -5*12.5 + 39*4.5 - 34*0.5 = -62.5 + 175.5 - 17 = 96; /48 = 2.
  double F6[6] = {6.25, 2.25, 0.25, 0.25, 2.25, 6.25};
  double out[1];
  fd_correction_fxx<1>(F6, 1.0, out);
  CHECK(out[0] == doctest::Approx(2.0).epsilon(1e-15));
  // fxxxx sum: 12.5 - 3*4.5 + 2*0.5 = 0.
  fd_correction_fxxxx<1>(F6, 1.0, out);
  CHECK(out[0] == 0.0);

  // x^4: (39.0625, 5.0625, 0.0625, ...) mirrored.
  double G6[6] = {39.0625, 5.0625, 0.0625, 0.0625, 5.0625, 39.0625};
  fd_correction_fxxxx<1>(G6, 1.0, out);
  // 78.125 - 30.375 + 0.25 = 48; /2 = 24.
  CHECK(out[0] == doctest::Approx(24.0).epsilon(1e-15));
  fd_correction_fxx<1>(G6, 1.0, out);
  // -5*78.125 + 39*10.125 - 34*0.125 = -390.625 + 394.875 - 4.25 = 0.
  CHECK(out[0] == 0.0);
}

TEST_CASE("reversal symmetry of the corrections is bitwise") {
  double F6[6] = {0.31, -1.7, 2.9, 0.05, -4.4, 1.23};
  double R6[6];
  for (int m = 0; m < 6; ++m) R6[m] = F6[5 - m];
  double a[1], b[1];
  fd_correction_fxx<1>(F6, 0.1, a);
  fd_correction_fxx<1>(R6, 0.1, b);
  CHECK(a[0] == b[0]);
  fd_correction_fxxxx<1>(F6, 0.1, a);
  fd_correction_fxxxx<1>(R6, 0.1, b);
  CHECK(a[0] == b[0]);
}

TEST_CASE("correction arithmetic, frozen") {
  // dx = 0.5, F = x^2 at the stencil points: fv flux 10 gets
  // 10 - dx^2/24 * 2 + 0 = 10 - 0.25/12.
  double dx = 0.5;
  double F6[6];
  for (int m = 0; m < 6; ++m) F6[m] = stencil_x(m, dx) * stencil_x(m, dx);
  double flux[1] = {10.0};
  aweno_correct<1>(F6, dx, flux);
  CHECK(flux[0] == doctest::Approx(10.0 - 0.25 / 12.0).epsilon(1e-15));

  // Multi-component: each slot corrected independently.
  double G6[6 * 2];
  for (int m = 0; m < 6; ++m) {
    G6[m * 2 + 0] = 3.0;                        // constant: untouched
    G6[m * 2 + 1] = stencil_x(m, dx) * stencil_x(m, dx);
  }
  double f2[2] = {1.0, 10.0};
  aweno_correct<2>(G6, dx, f2);
  CHECK(f2[0] == 1.0);
  CHECK(f2[1] == doctest::Approx(10.0 - 0.25 / 12.0).epsilon(1e-15));
}

TEST_CASE("corrected interface flux differences reach fifth order") {
  // For f(x) = sin(x), build H at every interface from the WENO-Z point
  // interpolant plus the corrections, then check that the flux-difference
  // quotient (H_{j+1/2} - H_{j-1/2})/dx converges to cos(x_j) at order 5.
  WenoParams wp;
  double errs[3];
  int ns[3] = {20, 40, 80};
  for (int k = 0; k < 3; ++k) {
    int n = ns[k];
    double dx = 2.0 * 3.14159265358979323846 / n;
    auto f = [&](int j) { return std::sin(j * dx); };
    // H at interface j+1/2 needs cells j-2 .. j+3.
    auto H = [&](int j) {
      double g[5];
      for (int m = 0; m < 5; ++m) g[m] = f(j - 2 + m);
      double h = wenoz_minus(g, wp);
      double F6[6];
      for (int m = 0; m < 6; ++m) F6[m] = f(j - 2 + m);
      aweno_correct<1>(F6, dx, &h);
      return h;
    };
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
      double d = (H(j) - H(j - 1)) / dx;
      worst = std::fmax(worst, std::fabs(d - std::cos(j * dx)));
    }
    errs[k] = worst;
  }
  CHECK(std::log2(errs[0] / errs[1]) > 4.5);
  CHECK(std::log2(errs[1] / errs[2]) > 4.5);
}
