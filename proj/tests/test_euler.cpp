#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "aaad/euler.hpp"
#include "doctest.h"

using namespace aaad;

namespace {

const GasModel kAir{1.4};

// Random physical states with a deterministic seed.
struct StateGen {
  std::mt19937 rng{12345};
  std::uniform_real_distribution<double> rho{0.05, 10.0};
  std::uniform_real_distribution<double> vel{-5.0, 5.0};
  std::uniform_real_distribution<double> prs{0.01, 20.0};
  Prim next(bool with_v) {
    Prim w;
    w.rho = rho(rng);
    w.u = vel(rng);
    w.v = with_v ? vel(rng) : 0.0;
    w.p = prs(rng);
    return w;
  }
};

template <int N>
double matmul_residual_identity(const Eigensystem<N>& es) {
  double worst = 0.0;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      double s = 0.0;
      for (int k = 0; k < N; ++k) s += es.r[r][k] * es.ri[k][c];
      worst = std::fmax(worst, std::fabs(s - (r == c ? 1.0 : 0.0)));
    }
  return worst;
}

// R^-1 A R should be diag(lambda).
template <int N, class Jac>
double diagonalization_residual(const Eigensystem<N>& es, const Jac& A) {
  double worst = 0.0;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      double s = 0.0;
      for (int k = 0; k < N; ++k) {
        double ar = 0.0;
        for (int m = 0; m < N; ++m) ar += A[k][m] * es.r[m][c];
        s += es.ri[r][k] * ar;
      }
      double want = r == c ? es.lambda[r] : 0.0;
      worst = std::fmax(worst, std::fabs(s - want));
    }
  return worst;
}

}  // namespace

TEST_CASE("conserved/primitive round trip and frozen values") {
  // Lax left state: the energy the initial data maps to.
  double U[3];
  conserved_from_primitive<3>(Prim{0.445, 0.31061, 0.0, 8.928}, kAir, U);
  CHECK(U[0] == doctest::Approx(0.445).epsilon(1e-15));
  CHECK(U[1] == doctest::Approx(0.445 * 0.31061).epsilon(1e-15));
  CHECK(U[2] == doctest::Approx(22.341466482292251).epsilon(1e-15));

  Prim back;
  REQUIRE(primitive_from_conserved<3>(U, kAir, &back));
  CHECK(back.rho == doctest::Approx(0.445).epsilon(1e-14));
  CHECK(back.u == doctest::Approx(0.31061).epsilon(1e-14));
  CHECK(back.p == doctest::Approx(8.928).epsilon(1e-14));

  StateGen gen;
  for (int i = 0; i < 200; ++i) {
    Prim w = gen.next(true);
    double V[4];
    conserved_from_primitive<4>(w, kAir, V);
    Prim r;
    REQUIRE(primitive_from_conserved<4>(V, kAir, &r));
    CHECK(r.rho == doctest::Approx(w.rho).epsilon(1e-13));
    CHECK(r.u == doctest::Approx(w.u).epsilon(1e-12));
    CHECK(r.v == doctest::Approx(w.v).epsilon(1e-12));
    CHECK(r.p == doctest::Approx(w.p).epsilon(1e-12));
  }
}

TEST_CASE("unphysical states are rejected") {
  Prim w;
  double U[3] = {0.0, 0.0, 1.0};
  CHECK_FALSE(primitive_from_conserved<3>(U, kAir, &w));
  double U2[3] = {-1.0, 0.0, 1.0};
  CHECK_FALSE(primitive_from_conserved<3>(U2, kAir, &w));
  double U3[3] = {1.0, 3.0, 4.5};  // E == kinetic -> p = 0
  CHECK_FALSE(primitive_from_conserved<3>(U3, kAir, &w));
  double U4[3] = {1.0, 0.0, std::nan("")};
  CHECK_FALSE(primitive_from_conserved<3>(U4, kAir, &w));
}

TEST_CASE("physical flux") {
  // rho=1.2, u=0.3, p=2.5: m=0.36, E=6.304, F=(0.36, 2.608, 2.6412).
  double U[3];
  Prim w{1.2, 0.3, 0.0, 2.5};
  conserved_from_primitive<3>(w, kAir, U);
  double F[3];
  flux_x<3>(U, w, F);
  CHECK(F[0] == doctest::Approx(0.36).epsilon(1e-15));
  CHECK(F[1] == doctest::Approx(2.608).epsilon(1e-15));
  CHECK(F[2] == doctest::Approx(2.6412).epsilon(1e-15));

  // 2-D adds the transverse momentum advection slot.
  Prim w2{1.2, 0.3, -0.7, 2.5};
  double V[4], G[4];
  conserved_from_primitive<4>(w2, kAir, V);
  flux_x<4>(V, w2, G);
  CHECK(G[kRho] == doctest::Approx(V[kMomX]).epsilon(1e-15));
  CHECK(G[kMomY] == doctest::Approx(V[kMomY] * 0.3).epsilon(1e-14));

  double bad[3] = {1.0, 3.0, 1.0};
  double tmp[3];
  CHECK_FALSE(flux_x_checked<3>(bad, kAir, tmp));
}

TEST_CASE("interface average worked example") {
  double UL[3], UR[3];
  conserved_from_primitive<3>(Prim{1.0, 0.0, 0.0, 1.0}, kAir, UL);
  conserved_from_primitive<3>(Prim{3.0, 2.0, 0.0, 3.0}, kAir, UR);
  InterfaceAverage a;
  REQUIRE(interface_average<3>(UL, UR, kAir, &a));
  CHECK(a.rho == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(a.u == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(a.p == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(a.E == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(a.H == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(a.phi == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(a.c == doctest::Approx(1.1832159566199232).epsilon(1e-15));
  // phi is also 2 c^2 / (gamma - 1).
  CHECK(a.phi == doctest::Approx(2.0 * a.c * a.c / 0.4).epsilon(1e-14));
}

TEST_CASE("1-D eigensystem: inverse, diagonalization, eigenvalues") {
  StateGen gen;
  double worst_inv = 0.0, worst_diag = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Prim wl = gen.next(false), wr = gen.next(false);
    double UL[3], UR[3];
    conserved_from_primitive<3>(wl, kAir, UL);
    conserved_from_primitive<3>(wr, kAir, UR);
    InterfaceAverage a;
    REQUIRE(interface_average<3>(UL, UR, kAir, &a));
    Eigensystem<3> es;
    eigensystem_1d(a, &es);

    CHECK(es.lambda[0] == doctest::Approx(a.u - a.c).epsilon(1e-14));
    CHECK(es.lambda[1] == a.u);
    CHECK(es.lambda[2] == doctest::Approx(a.u + a.c).epsilon(1e-14));

    worst_inv = std::fmax(worst_inv, matmul_residual_identity<3>(es));

    double A[3][3];
    jacobian_1d(Prim{a.rho, a.u, 0.0, a.p}, kAir, A);
    worst_diag = std::fmax(worst_diag, diagonalization_residual<3>(es, A));
  }
  CHECK(worst_inv < 1e-10);
  CHECK(worst_diag < 1e-9);
}

TEST_CASE("analytic Jacobians match finite differences") {
  StateGen gen;
  for (int trial = 0; trial < 20; ++trial) {
    Prim w = gen.next(true);

    double U[4];
    conserved_from_primitive<4>(w, kAir, U);
    double A[4][4];
    jacobian_2d_x(w, kAir, A);
    for (int j = 0; j < 4; ++j) {
      double h = 1e-6 * std::fmax(1.0, std::fabs(U[j]));
      double Up[4], Um[4], Fp[4], Fm[4];
      for (int c = 0; c < 4; ++c) Up[c] = Um[c] = U[c];
      Up[j] += h;
      Um[j] -= h;
      REQUIRE(flux_x_checked<4>(Up, kAir, Fp));
      REQUIRE(flux_x_checked<4>(Um, kAir, Fm));
      for (int i = 0; i < 4; ++i) {
        double fd = (Fp[i] - Fm[i]) / (2.0 * h);
        CHECK(A[i][j] == doctest::Approx(fd).epsilon(5e-5));
      }
    }
  }
}

TEST_CASE("2-D eigensystems: x, and y via the swap symmetry") {
  StateGen gen;
  double worst_inv = 0.0, worst_diag_x = 0.0, worst_diag_y = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Prim wl = gen.next(true), wr = gen.next(true);
    double UL[4], UR[4];
    conserved_from_primitive<4>(wl, kAir, UL);
    conserved_from_primitive<4>(wr, kAir, UR);
    InterfaceAverage a;
    REQUIRE(interface_average<4>(UL, UR, kAir, &a));

    Eigensystem<4> ex;
    eigensystem_2d_x(a, &ex);
    worst_inv = std::fmax(worst_inv, matmul_residual_identity<4>(ex));
    double A[4][4];
    jacobian_2d_x(Prim{a.rho, a.u, a.v, a.p}, kAir, A);
    worst_diag_x = std::fmax(worst_diag_x, diagonalization_residual<4>(ex, A));

    // y Jacobian by the swap symmetry: G'(U) = P A(P U) P with P the
    // momentum swap; assembled numerically from the x Jacobian.
    Eigensystem<4> ey;
    eigensystem_2d_y(a, &ey);
    worst_inv = std::fmax(worst_inv, matmul_residual_identity<4>(ey));
    CHECK(ey.lambda[0] == doctest::Approx(a.v - a.c).epsilon(1e-13));
    CHECK(ey.lambda[3] == doctest::Approx(a.v + a.c).epsilon(1e-13));
    double As[4][4];
    jacobian_2d_x(Prim{a.rho, a.v, a.u, a.p}, kAir, As);
    double B[4][4];
    auto sw = [](int k) { return k == kMomX ? kMomY : (k == kMomY ? kMomX : k); };
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) B[r][c] = As[sw(r)][sw(c)];
    worst_diag_y = std::fmax(worst_diag_y, diagonalization_residual<4>(ey, B));
  }
  CHECK(worst_inv < 1e-10);
  CHECK(worst_diag_x < 1e-9);
  CHECK(worst_diag_y < 1e-9);
}

TEST_CASE("projection and lift invert each other") {
  StateGen gen;
  for (int i = 0; i < 100; ++i) {
    Prim wl = gen.next(true), wr = gen.next(true);
    double UL[4], UR[4];
    conserved_from_primitive<4>(wl, kAir, UL);
    conserved_from_primitive<4>(wr, kAir, UR);
    InterfaceAverage a;
    REQUIRE(interface_average<4>(UL, UR, kAir, &a));
    Eigensystem<4> es;
    eigensystem_2d_x(a, &es);
    double w[4], back[4];
    project_characteristic<4>(es, UL, w);
    lift_characteristic<4>(es, w, back);
    for (int c = 0; c < 4; ++c)
      CHECK(back[c] == doctest::Approx(UL[c]).epsilon(1e-10));
  }
}

TEST_CASE("eigenvalues shift with a velocity boost") {
  double UL[3], UR[3];
  conserved_from_primitive<3>(Prim{1.0, 0.2, 0.0, 1.0}, kAir, UL);
  conserved_from_primitive<3>(Prim{2.0, -0.4, 0.0, 3.0}, kAir, UR);
  InterfaceAverage a0;
  REQUIRE(interface_average<3>(UL, UR, kAir, &a0));

  const double s = 0.7;
  double BL[3], BR[3];
  conserved_from_primitive<3>(Prim{1.0, 0.2 + s, 0.0, 1.0}, kAir, BL);
  conserved_from_primitive<3>(Prim{2.0, -0.4 + s, 0.0, 3.0}, kAir, BR);
  InterfaceAverage ab;
  REQUIRE(interface_average<3>(BL, BR, kAir, &ab));

  Eigensystem<3> e0, eb;
  eigensystem_1d(a0, &e0);
  eigensystem_1d(ab, &eb);
  CHECK(ab.c == doctest::Approx(a0.c).epsilon(1e-13));
  for (int k = 0; k < 3; ++k)
    CHECK(eb.lambda[k] == doctest::Approx(e0.lambda[k] + s).epsilon(1e-13));
}

TEST_CASE("mirror symmetry of the 1-D eigensystem is exact") {
  double UL[3], UR[3];
  conserved_from_primitive<3>(Prim{1.3, 0.6, 0.0, 2.1}, kAir, UL);
  conserved_from_primitive<3>(Prim{0.8, -1.1, 0.0, 0.9}, kAir, UR);
  InterfaceAverage a, am;
  REQUIRE(interface_average<3>(UL, UR, kAir, &a));
  // The x -> -x image swaps the cells and negates velocities.
  double ML[3] = {UR[0], -UR[1], UR[2]};
  double MR[3] = {UL[0], -UL[1], UL[2]};
  REQUIRE(interface_average<3>(ML, MR, kAir, &am));
  CHECK(am.u == -a.u);
  CHECK(am.c == a.c);

  Eigensystem<3> e, em;
  eigensystem_1d(a, &e);
  eigensystem_1d(am, &em);
  // Acoustic columns swap, the contact column stays; momentum rows negate.
  for (int k = 0; k < 3; ++k) {
    CHECK(em.lambda[k] == -e.lambda[2 - k]);
    CHECK(em.r[0][k] == e.r[0][2 - k]);
    CHECK(em.r[1][k] == -e.r[1][2 - k]);
    CHECK(em.r[2][k] == e.r[2][2 - k]);
  }
}
