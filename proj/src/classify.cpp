#include "aaad/classify.hpp"

#include <cmath>

#include "aaad/adaptive.hpp"
#include "aaad/parallel.hpp"

namespace aaad {

namespace {

// One strided line of the padded field. Indicators exist where the 3-cell
// window fits ([1, m-2)); triggers where their own 3-indicator window fits
// ([2, m-3]). A cell is marked by a trigger at itself or either neighbor;
// ghost cells are always Smooth.
void classify_line(const double* rho, long rs, const double* p, long ps, long m,
                   long int_lo, long int_hi, double eps0, std::uint8_t* cls, long cs,
                   LineClassScratch& w) {
  w.s_rho.assign(m, 0.0);
  w.s_p.assign(m, 0.0);
  w.rough.assign(m, 0);
  w.contact.assign(m, 0);

  for (long j = 1; j + 1 < m; ++j) {
    w.s_rho[j] = smoothness_indicator(rho[(j - 1) * rs], rho[j * rs], rho[(j + 1) * rs]);
    w.s_p[j] = smoothness_indicator(p[(j - 1) * ps], p[j * ps], p[(j + 1) * ps]);
  }

  for (long j = 2; j + 3 <= m; ++j) {
    double peak = std::fmax(std::fabs(w.s_rho[j - 1]), std::fabs(w.s_rho[j + 1]));
    if (std::fabs(w.s_rho[j]) > peak + eps0) {
      w.rough[j] = 1;
      // A rough cell whose pressure indicator does *not* peak locally is a
      // contact-type irregularity. Ties count: across an isolated contact the
      // pressure is constant and every s_p is exactly zero, and that perfect
      // contact is the primary sharpening target. A strict compare would
      // leave it in the weak tier until it smears.
      double p_peak = std::fmax(std::fabs(w.s_p[j - 1]), std::fabs(w.s_p[j + 1]));
      if (std::fabs(w.s_p[j]) <= p_peak) w.contact[j] = 1;
    }
  }

  for (long j = 0; j < m; ++j) {
    std::uint8_t c = kSmooth;
    if (j >= int_lo && j < int_hi) {
      bool any_contact = false, any_rough = false;
      for (long k = j - 1; k <= j + 1; ++k) {
        if (k < 0 || k >= m) continue;
        any_contact |= w.contact[k] != 0;
        any_rough |= w.rough[k] != 0;
      }
      c = any_contact ? kRoughContact : (any_rough ? kRough : kSmooth);
    }
    cls[j * cs] = c;
  }
}

}  // namespace

void classify_field(const Field& U, const ScalarField& p, int direction, double eps0,
                    ExecMode exec, ClassField& cls) {
  const GridSpec& g = U.grid;
  const int nc = U.ncomp;
  const int G = g.ghost;

  if (g.dim == 1 || direction == 0) {
    long m = g.pad_nx();
    long nlines = g.dim == 2 ? g.ny : 1;
    for_each_index(exec, nlines, [&](long j) {
      static thread_local LineClassScratch w;
      classify_line(U.cell(-G, j) + kRho, nc, &p.data[p.cell_index(-G, j)], 1, m, G,
                    G + g.nx, eps0, &cls.data[cls.cell_index(-G, j)], 1, w);
    });
  } else {
    long m = g.pad_ny();
    long row = g.pad_nx();
    for_each_index(exec, g.nx, [&](long i) {
      static thread_local LineClassScratch w;
      classify_line(U.cell(i, -G) + kRho, row * nc, &p.data[p.cell_index(i, -G)], row, m,
                    G, G + g.ny, eps0, &cls.data[cls.cell_index(i, -G)], row, w);
    });
  }
}

std::vector<std::uint8_t> classify_profile(const std::vector<double>& rho,
                                           const std::vector<double>& p, int ghost,
                                           double eps0) {
  long m = static_cast<long>(rho.size());
  std::vector<std::uint8_t> cls(m, 0);
  LineClassScratch w;
  classify_line(rho.data(), 1, p.data(), 1, m, ghost, m - ghost, eps0, cls.data(), 1, w);
  return cls;
}

}  // namespace aaad
